#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surgcalc {

/// Thrown by parse_braid; `position` is a 0-based byte offset into the input.
struct BraidParseError : std::runtime_error {
    std::size_t position;
    BraidParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// A word in the Artin generators of Br_n. Letters are nonzero signed
/// integers: +i stands for sigma_i, -i for its inverse, 1 <= i <= n-1.
/// Immutable after construction.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    /// Concatenation; both words must live in the same Br_n.
    BraidWord operator*(const BraidWord& rhs) const;
    BraidWord inverse() const;

    /// Canonical text form, e.g. "B4: 1 2 2 -3".
    std::string format() const;

    bool operator==(const BraidWord&) const = default;

private:
    int strands_;
    std::vector<int> letters_;
};

/// A bijection on {1,...,n}; images are 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    int cycle_count() const;
    /// Cycle lengths sorted in decreasing order.
    std::vector<int> cycle_type() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Grammar: word := "B" int ":" { letter }, letters whitespace separated.
BraidWord parse_braid(std::string_view text);

/// Deletes adjacent (e, -e) pairs until none remain. Idempotent.
BraidWord free_reduce(const BraidWord& w);

/// The word acts left-to-right on strand positions; sigma_i contributes the
/// transposition (i, i+1) applied after everything to its left.
Permutation permutation(const BraidWord& w);

/// Number of link components of the braid closure = cycles of permutation(w).
int closure_components(const BraidWord& w);

/// Sum of signs of the letters (the writhe of the closed-braid diagram).
int exponent_sum(const BraidWord& w);

/// sigma_i sigma_{i+1} ... sigma_j ... sigma_{i+1}^-1 sigma_i^-1 in Br_n,
/// for 1 <= i <= j <= n-1. Its permutation is the transposition (i, j+1).
BraidWord embedded_band(int i, int j, int n);

}  // namespace surgcalc
