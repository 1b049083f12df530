#include "surgcalc/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace surgcalc {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
        throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters_) {
        if (l == 0 || std::abs(l) > strands_ - 1)
            throw std::invalid_argument("letter " + std::to_string(l) +
                                        " invalid in Br_" + std::to_string(strands_));
    }
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
    if (strands_ != rhs.strands_)
        throw std::invalid_argument("cannot concatenate words with different strand counts");
    std::vector<int> ls = letters_;
    ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(strands_, std::move(ls));
}

BraidWord BraidWord::inverse() const {
    std::vector<int> ls(letters_.rbegin(), letters_.rend());
    for (int& l : ls) l = -l;
    return BraidWord(strands_, std::move(ls));
}

std::string BraidWord::format() const {
    std::string s = "B" + std::to_string(strands_) + ":";
    for (int l : letters_) s += " " + std::to_string(l);
    return s;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycle_type().size());
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lens;
    for (int s = 1; s <= size(); ++s) {
        if (seen[s - 1]) continue;
        int len = 0;
        for (int x = s; !seen[x - 1]; x = apply(x)) {
            seen[x - 1] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if (apply(x) != x) return false;
    return true;
}

BraidWord parse_braid(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != 'B')
        throw BraidParseError("expected 'B'", i);
    ++i;
    int strands = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), strands);
    if (ec != std::errc{} || strands < 1)
        throw BraidParseError("expected positive strand count after 'B'", i);
    i = static_cast<std::size_t>(p - text.data());
    skip_ws();
    if (i >= text.size() || text[i] != ':')
        throw BraidParseError("expected ':' after strand count", i);
    ++i;

    std::vector<int> letters;
    for (;;) {
        skip_ws();
        if (i >= text.size()) break;
        int l = 0;
        auto [q, ec2] = std::from_chars(text.data() + i, text.data() + text.size(), l);
        if (ec2 != std::errc{})
            throw BraidParseError("expected integer letter", i);
        if (l == 0)
            throw BraidParseError("letter 0 is not a generator", i);
        if (std::abs(l) > strands - 1)
            throw BraidParseError("letter " + std::to_string(l) + " invalid in Br_" +
                                  std::to_string(strands), i);
        letters.push_back(l);
        i = static_cast<std::size_t>(q - text.data());
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> out;
    out.reserve(w.length());
    for (int l : w.letters()) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return BraidWord(w.strands(), std::move(out));
}

Permutation permutation(const BraidWord& w) {
    std::vector<int> im(w.strands());
    std::iota(im.begin(), im.end(), 1);
    for (int l : w.letters()) {
        int i = std::abs(l);
        for (int& v : im) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
    }
    return Permutation(std::move(im));
}

int closure_components(const BraidWord& w) {
    return permutation(w).cycle_count();
}

int exponent_sum(const BraidWord& w) {
    int e = 0;
    for (int l : w.letters()) e += (l > 0) ? 1 : -1;
    return e;
}

BraidWord embedded_band(int i, int j, int n) {
    if (i < 1 || j < i || j > n - 1)
        throw std::invalid_argument("embedded_band requires 1 <= i <= j <= n-1");
    std::vector<int> ls;
    for (int k = i; k <= j; ++k) ls.push_back(k);
    for (int k = j - 1; k >= i; --k) ls.push_back(-k);
    return BraidWord(n, std::move(ls));
}

}  // namespace surgcalc
