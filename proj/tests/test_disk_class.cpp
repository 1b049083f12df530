#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surgcalc/disk_class.hpp"

#include <algorithm>
#include <set>

using namespace surgcalc;

namespace {

// Independent enumeration: all non-increasing tuples with sum of squares r,
// filtered by genus afterwards (no pruning on the genus constraint).
void partitions_by_squares(long long r, int max_part, std::vector<int>& acc,
                           std::set<std::vector<int>>& out, long long g) {
    if (r == 0) {
        long long twice_g = 0;
        for (int p : acc) twice_g += static_cast<long long>(p) * (p - 1);
        if (twice_g == 2 * g) out.insert(acc);
        return;
    }
    for (int p = max_part; p >= 1; --p) {
        if (static_cast<long long>(p) * p > r) continue;
        acc.push_back(p);
        partitions_by_squares(r - static_cast<long long>(p) * p, p, acc, out, g);
        acc.pop_back();
    }
}

std::set<std::vector<int>> oracle_classes(long long r, long long g) {
    std::set<std::vector<int>> out;
    std::vector<int> acc;
    int maxp = 1;
    while (static_cast<long long>(maxp + 1) * (maxp + 1) <= r) ++maxp;
    partitions_by_squares(r, maxp, acc, out, g);
    return out;
}

// Independent gap oracle: iterate reachability by sums of squares >= 4 to a
// fixed point.
std::vector<int> oracle_gaps(int limit) {
    std::vector<char> reach(limit + 1, 0);
    reach[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 2; n * n <= limit; ++n)
            for (int s = n * n; s <= limit; ++s)
                if (reach[s - n * n] && !reach[s]) { reach[s] = 1; changed = true; }
    }
    std::vector<int> gaps;
    for (int s = 1; s <= limit; ++s)
        if (!reach[s]) gaps.push_back(s);
    return gaps;
}

}  // namespace

TEST_CASE("parse, format, sorting") {
    DiskClass d = DiskClass::parse("2,3,2");
    CHECK(d.parts() == std::vector<int>{3, 2, 2});
    CHECK(d.format() == "3,2,2");
    CHECK(DiskClass::parse("") == DiskClass());
    CHECK(DiskClass().format() == "");
    CHECK_THROWS(DiskClass::parse("3,0"));
    CHECK_THROWS(DiskClass::parse("3,-1"));
    CHECK_THROWS(DiskClass::parse("a"));
}

TEST_CASE("coefficient and genus") {
    DiskClass d({3, 2, 2});
    CHECK(surgery_coefficient(d) == 17);
    CHECK(genus_of(d) == 5);
    CHECK(surgery_coefficient(DiskClass()) == 0);
    CHECK(genus_of(DiskClass()) == 0);
}

TEST_CASE("blow up and down") {
    DiskClass d({2, 1});
    CHECK(blow_down(d) == DiskClass({2}));
    CHECK_THROWS_AS(blow_down(DiskClass({2})), NoUnitPart);
    CHECK(blow_up_point(DiskClass({2})) == DiskClass({2, 1}));
    CHECK(surgery_coefficient(blow_up_point(d)) == surgery_coefficient(d) + 1);
    CHECK(genus_of(blow_up_point(d)) == genus_of(d));
}

TEST_CASE("consistent_classes matches the brute-force partition oracle") {
    for (long long r = 0; r <= 40; ++r)
        for (long long g = 0; g <= 8; ++g) {
            auto got = consistent_classes(r, g);
            std::set<std::vector<int>> got_set;
            for (const auto& d : got) got_set.insert(d.parts());
            CHECK(got_set.size() == got.size());  // no duplicates
            CHECK(got_set == oracle_classes(r, g));
        }
}

TEST_CASE("pretzel fixture classes") {
    CHECK(consistent_classes(16, 5).empty());
    auto cls = consistent_classes(17, 5);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] == DiskClass({3, 2, 2}));
}

TEST_CASE("gap set matches the semigroup oracle and stabilizes") {
    CHECK(gap_set(19) == cited_gap_list());
    CHECK(gap_set(200) == oracle_gaps(200));
    CHECK(gap_set(200) == gap_set(1000));  // constant beyond the Frobenius number 23
    CHECK(gap_list_discrepancy(19).empty());
    CHECK(gap_list_discrepancy(200) == std::vector<int>{23});
    CHECK(cited_gap_list() ==
          std::vector<int>{1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19});
}

TEST_CASE("mu bounds") {
    CHECK(mu_bounds(1, false).lower == 3);
    CHECK(mu_bounds(1, false).upper == 4);
    CHECK(mu_bounds(5, false).lower == 11);
    CHECK(mu_bounds(5, false).upper == 20);
    CHECK(mu_bounds(0, true).lower == 0);
    CHECK(mu_bounds(0, true).upper == 0);
    CHECK_THROWS(mu_bounds(0, false));
    CHECK_THROWS(mu_bounds(-1, false));
}

TEST_CASE("strong filling predicate") {
    CHECK(strong_fill_predicate(4, false));
    CHECK(strong_fill_predicate(0, true));
    CHECK_THROWS_AS(strong_fill_predicate(0, false), std::domain_error);
}
