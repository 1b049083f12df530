#pragma once

#include "surgcalc/braid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surgcalc {

/// One factor of a quasipositive factorization: a positive band
/// w sigma_i w^-1, or a full twist w (sigma_s ... sigma_{s+m-2})^m w^-1 of
/// multiplicity m >= 2. A full twist with m = 2 is a positive node.
struct Factor {
    enum class Kind { Band, FullTwist };

    Kind kind;
    std::vector<int> conjugator;  // letters of w, possibly empty
    int index = 0;                // Band: generator index i
    int start = 0;                // FullTwist: first strand s
    int multiplicity = 0;         // FullTwist: m >= 2

    static Factor band(std::vector<int> conjugator, int index);
    /// Positive node w sigma_s^2 w^-1 (full twist with m = 2).
    static Factor node(std::vector<int> conjugator, int start);
    static Factor full_twist(std::vector<int> conjugator, int start, int multiplicity);

    /// The factor as a word in Br_n. Throws if an index is out of range.
    BraidWord flatten(int strands) const;

    bool operator==(const Factor&) const = default;
};

struct Certificate {
    int strands = 2;
    std::vector<Factor> factors;

    bool operator==(const Certificate&) const = default;
};

enum class CertificateErrorKind {
    BandCountMismatch,
    NotAKnot,
    IndexOutOfRange,
    BadMultiplicity,
    BadSchema,
};

struct CertificateError : std::runtime_error {
    CertificateErrorKind kind;
    CertificateError(CertificateErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

struct CertificateReport {
    int genus = 0;                 // sum of m_j (m_j - 1) / 2
    int surgery_coefficient = 0;   // sum of m_j^2
    int self_linking = 0;          // 2 * genus - 1
    bool extended = false;         // some full twist has m >= 3
    BraidWord flattened{2, {}};    // free-reduced concatenation
};

/// Concatenation of the flattened factors, free-reduced.
BraidWord flatten(const Certificate& c);

/// Checks band count == strands - 1 and that the closure is a knot, then
/// derives genus, fillable surgery coefficient and self-linking.
CertificateReport validate(const Certificate& c);

/// Certificate for the positive twist knot K_{2k+1} on 2k+2 strands:
/// 2k+1 embedded bands and one node, validating with g = 1, r = 4.
Certificate twist_knot_certificate(int k);

/// JSON schema:
///   { "strands": n,
///     "factors": [ {"kind":"band","conjugator":[...],"index":i},
///                  {"kind":"twist","conjugator":[...],"start":s,"multiplicity":m} ] }
Certificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const Certificate& c);
Certificate load_certificate(const std::string& path);

}  // namespace surgcalc
