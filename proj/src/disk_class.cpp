#include "surgcalc/disk_class.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace surgcalc {

DiskClass::DiskClass(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("disk class parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
}

DiskClass DiskClass::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        token = token.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("bad disk class part '" + token + "'");
        parts.push_back(v);
    }
    return DiskClass(std::move(parts));
}

std::string DiskClass::format() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

long long surgery_coefficient(const DiskClass& d) {
    long long r = 0;
    for (int p : d.parts()) r += 1LL * p * p;
    return r;
}

long long genus_of(const DiskClass& d) {
    long long g2 = 0;
    for (int p : d.parts()) g2 += 1LL * p * (p - 1);
    return g2 / 2;
}

DiskClass blow_down(const DiskClass& d) {
    std::vector<int> parts = d.parts();
    auto it = std::find(parts.begin(), parts.end(), 1);
    if (it == parts.end()) throw NoUnitPart();
    parts.erase(it);
    return DiskClass(std::move(parts));
}

DiskClass blow_up_point(const DiskClass& d) {
    std::vector<int> parts = d.parts();
    parts.push_back(1);
    return DiskClass(std::move(parts));
}

namespace {
void enumerate(long long r, long long g2, int max_part, std::vector<int>& acc,
               std::vector<DiskClass>& out) {
    if (r == 0) {
        if (g2 == 0) out.emplace_back(acc);
        return;
    }
    for (int p = std::min<long long>(max_part, static_cast<long long>(std::sqrt((double)r)) + 1);
         p >= 1; --p) {
        long long sq = 1LL * p * p;
        if (sq > r) continue;
        long long gp = 1LL * p * (p - 1);
        if (gp > g2) continue;
        acc.push_back(p);
        enumerate(r - sq, g2 - gp, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<DiskClass> consistent_classes(long long r, long long g) {
    if (r < 0 || g < 0) throw std::invalid_argument("consistent_classes: negative input");
    std::vector<DiskClass> out;
    std::vector<int> acc;
    enumerate(r, 2 * g, static_cast<int>(std::sqrt((double)r)) + 1, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> gap_set(int limit) {
    if (limit < 1) throw std::invalid_argument("gap_set: limit must be >= 1");
    // Reachability by sums of squares >= 4.
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (int m = 2; m * m <= limit; ++m)
        for (int v = m * m; v <= limit; ++v)
            if (reach[v - m * m]) reach[v] = 1;
    std::vector<int> gaps;
    for (int v = 1; v <= limit; ++v)
        if (!reach[v]) gaps.push_back(v);
    return gaps;
}

const std::vector<int>& cited_gap_list() {
    static const std::vector<int> list = {1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19};
    return list;
}

std::vector<int> gap_list_discrepancy(int limit) {
    std::vector<int> extra;
    const auto& cited = cited_gap_list();
    for (int v : gap_set(limit))
        if (!std::binary_search(cited.begin(), cited.end(), v)) extra.push_back(v);
    return extra;
}

MuBounds mu_bounds(int g, bool slice_disk_exists) {
    if (g < 0) throw std::invalid_argument("mu_bounds: negative genus");
    if (g == 0) {
        if (!slice_disk_exists)
            throw std::invalid_argument("genus 0 without a slice disk is inconsistent");
        return {0, 0};
    }
    return {2 * g + 1, 4 * g};
}

bool strong_fill_predicate(long long r, bool slice) {
    if (r < 0) throw std::invalid_argument("negative surgery coefficient");
    if (r == 0 && !slice)
        throw std::domain_error(
            "fillable 0-surgery forces the knot to be slice; input impossible");
    return true;
}

}  // namespace surgcalc
