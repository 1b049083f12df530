#pragma once

#include "surgcalc/certificate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surgcalc {

enum class ObstructionReason {
    NotQuasipositive,
    ClaspExceedsGenus,
    NegativeDoublePoints,
};

std::string to_string(ObstructionReason r);

/// Necessary conditions for a fillable positive surgery. Returns the failed
/// ones; empty means no obstruction from these invariants.
/// Throws if c < g (impossible: g <= c always).
std::vector<ObstructionReason> obstruct(bool quasipositive, int g, int c, int c_minus);

/// One row of the embedded knot table. Clasp numbers and quasipositivity are
/// cited external data; certificates and arithmetic are machine-checked.
struct KnotRecord {
    std::string name;
    bool quasipositive = true;
    int slice_genus = 0;
    std::optional<int> clasp_number;
    bool fillable = false;
    std::optional<long long> mu_exact;
    std::optional<long long> mu_upper;
    std::optional<std::string> braid;             // flattened word, B-grammar
    std::optional<std::string> certificate_file;  // relative to the catalog file
    std::optional<std::string> obstruction;
    std::string note;
};

struct CatalogError : std::runtime_error {
    int line;
    CatalogError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// Tab-separated, UTF-8, '#' comment lines, "-" for absent fields. Columns:
/// name qp g4 c4 fillable mu mu_is_exact braid certificate_file obstruction note
std::vector<KnotRecord> load_catalog(const std::string& path);

/// Directory of the default shipped dataset.
std::string default_catalog_path();

struct RowFailure {
    std::string name;
    std::string what;
};

struct TableReport {
    int rows = 0;
    int fillable_yes = 0;
    int fillable_no = 0;
    std::vector<RowFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Re-derives everything checkable: certificates validate within their
/// stated mu bounds with matching genus, torus rows match the exact torus
/// formula, twist rows match the generated twist certificate, N rows are
/// obstructed, and the totals are as published.
TableReport verify_table(const std::vector<KnotRecord>& records,
                         const std::string& cert_dir);

}  // namespace surgcalc
