#include "surgcalc/invariants.hpp"

#include <cassert>
#include <cstdlib>

namespace surgcalc {

namespace {

LaurentMatrix burau_generator(int i, int n, bool inverse) {
    const int d = n - 1;
    LaurentMatrix m = LaurentMatrix::identity(d);
    const LaurentPoly t = LaurentPoly::t(1);
    const LaurentPoly tinv = LaurentPoly::t(-1);
    if (d == 1) {
        m.at(0, 0) = inverse ? -tinv : -t;
        return m;
    }
    if (i == 1) {
        if (!inverse) {
            m.at(0, 0) = -t;
            m.at(0, 1) = LaurentPoly(1);
        } else {
            m.at(0, 0) = -tinv;
            m.at(0, 1) = tinv;
        }
    } else if (i == n - 1) {
        if (!inverse) {
            m.at(d - 1, d - 2) = t;
            m.at(d - 1, d - 1) = -t;
        } else {
            m.at(d - 1, d - 2) = LaurentPoly(1);
            m.at(d - 1, d - 1) = -tinv;
        }
    } else {
        int r = i - 1;  // 0-based row of the affected basis vector
        if (!inverse) {
            m.at(r, r - 1) = t;
            m.at(r, r) = -t;
            m.at(r, r + 1) = LaurentPoly(1);
        } else {
            m.at(r, r - 1) = LaurentPoly(1);
            m.at(r, r) = -tinv;
            m.at(r, r + 1) = tinv;
        }
    }
    return m;
}

}  // namespace

LaurentMatrix burau_reduced(const BraidWord& w) {
    if (w.strands() < 2)
        throw std::invalid_argument("burau_reduced needs at least two strands");
    LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
    for (int l : w.letters())
        m = m * burau_generator(std::abs(l), w.strands(), l < 0);
    return m;
}

LaurentPoly alexander(const BraidWord& w) {
    if (closure_components(w) != 1)
        throw std::invalid_argument("alexander: closure is not a knot");
    const int n = w.strands();
    LaurentMatrix b = burau_reduced(w) - LaurentMatrix::identity(n - 1);
    LaurentPoly det = b.determinant();
    LaurentPoly cyclotomic;  // 1 + t + ... + t^{n-1}
    for (int k = 0; k < n; ++k) cyclotomic += LaurentPoly::t(k);
    LaurentPoly q;
    bool ok = det.divide_exact(cyclotomic, q);
    assert(ok && "Burau determinant must be divisible by 1 + t + ... + t^{n-1}");
    if (!ok) throw std::logic_error("inexact Alexander division");
    if (q.is_zero()) throw std::logic_error("vanishing Alexander determinant for a knot");
    // Symmetric representative; knot Alexander polynomials have even span.
    int span = q.max_exp() - q.min_exp();
    assert(span % 2 == 0);
    LaurentPoly sym = q.shifted(-(q.min_exp() + span / 2));
    mpz_class v = sym.at_one();
    assert(v == 1 || v == -1);
    if (v < 0) sym = -sym;
    return sym;
}

int self_linking(const BraidWord& w) {
    return exponent_sum(w) - w.strands();
}

int positive_braid_genus(const BraidWord& w) {
    for (int l : w.letters())
        if (l < 0) throw std::invalid_argument("positive_braid_genus: word has a negative letter");
    if (closure_components(w) != 1)
        throw std::invalid_argument("positive_braid_genus: closure is not a knot");
    int e = exponent_sum(w);
    int num = e - w.strands() + 1;
    assert(num >= 0 && num % 2 == 0);
    return num / 2;
}

}  // namespace surgcalc
