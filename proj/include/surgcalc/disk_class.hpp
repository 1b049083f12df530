#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace surgcalc {

/// Multiset of positive integers {n_j}: the homology class of an embedded
/// disk in a blowup of the 4-ball, stored with parts in non-increasing order.
/// The empty class (disk in B^4 itself) is valid.
class DiskClass {
public:
    DiskClass() = default;
    explicit DiskClass(std::vector<int> parts);

    static DiskClass parse(const std::string& text);  // "3,2,2"; "" is the empty class
    std::string format() const;

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const DiskClass&) const = default;
    auto operator<=>(const DiskClass&) const = default;

private:
    std::vector<int> parts_;  // sorted non-increasing
};

/// -Delta.Delta = sum of n_j^2; the fillable smooth surgery coefficient.
long long surgery_coefficient(const DiskClass& d);

/// Slice genus sum n_j (n_j - 1) / 2.
long long genus_of(const DiskClass& d);

/// Removes one part equal to 1 (blow down an exceptional sphere met once).
/// Throws NoUnitPart if there is none.
struct NoUnitPart : std::runtime_error {
    NoUnitPart() : std::runtime_error("disk class has no part equal to 1") {}
};
DiskClass blow_down(const DiskClass& d);

/// Adds a part 1 (blow up a smooth point of the disk): r increases by 1.
DiskClass blow_up_point(const DiskClass& d);

/// All classes with surgery coefficient r and genus g, sorted; exhaustive.
std::vector<DiskClass> consistent_classes(long long r, long long g);

/// All r <= limit whose every representation as a sum of squares of positive
/// integers uses a 1: the gaps of the numerical semigroup generated by the
/// squares >= 4. Brute force.
std::vector<int> gap_set(int limit);

/// The list printed in the paper's proposition; the computed gap_set(19)
/// equals it, but gap_set(limit) for limit >= 23 also contains 23.
const std::vector<int>& cited_gap_list();

/// Entries of gap_set(limit) that are not in the cited list (23, once
/// limit >= 23). Nonempty output flags the discrepancy.
std::vector<int> gap_list_discrepancy(int limit);

struct MuBounds {
    int lower;  // effective: 2g+1 for g > 0 (strict bound), 0 for g = 0
    int upper;  // 4g
};

/// g = 0 requires slice_disk_exists (genus-0 fillable means slice).
MuBounds mu_bounds(int g, bool slice_disk_exists);

/// Weak fillability at coefficient r deforms to strong. Throws
/// std::domain_error for the impossible input r == 0 && !slice.
bool strong_fill_predicate(long long r, bool slice);

}  // namespace surgcalc
