#include "surgcalc/laurent.hpp"

#include <sstream>

namespace surgcalc {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_[0] = c;
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

mpz_class LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

void LaurentPoly::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0) it = coeffs_.erase(it);
        else ++it;
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

mpz_class LaurentPoly::evaluate(const mpz_class& x) const {
    if (is_zero()) return 0;
    if (min_exp() < 0 && x == 0)
        throw std::domain_error("cannot evaluate negative exponents at 0");
    // Horner over the shifted ordinary polynomial, then divide by x^{-min}.
    int lo = min_exp();
    mpz_class acc = 0;
    int prev = max_exp();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int k = prev; k > it->first; --k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    if (lo > 0)
        for (int k = 0; k < lo; ++k) acc *= x;
    else if (lo < 0) {
        mpz_class den = 1;
        for (int k = 0; k < -lo; ++k) den *= x;
        if (acc % den != 0)
            throw std::domain_error("non-integral Laurent evaluation");
        acc /= den;
    }
    return acc;
}

bool LaurentPoly::divide_exact(const LaurentPoly& d, LaurentPoly& q) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) {
        q = LaurentPoly();
        return true;
    }
    // Shift both operands to ordinary polynomials (units t^k are absorbed
    // into the quotient), then long-divide and demand a zero remainder.
    const int a = min_exp(), b = d.min_exp();
    LaurentPoly rem = shifted(-a);
    LaurentPoly den = d.shifted(-b);
    LaurentPoly quot;
    const int dtop = den.max_exp();
    const mpz_class dlead = den.coeffs_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exp() >= dtop) {
        int rtop = rem.max_exp();
        mpz_class rl = rem.coeff(rtop);
        if (rl % dlead != 0) return false;
        LaurentPoly m = monomial(rl / dlead, rtop - dtop);
        rem = rem - den * m;
        quot += m;
    }
    if (!rem.is_zero()) return false;
    q = quot.shifted(a - b);
    return true;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 0) throw std::invalid_argument("negative matrix dimension");
}

LaurentMatrix LaurentMatrix::identity(int dim) {
    LaurentMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < dim_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    LaurentMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

namespace {
LaurentPoly det_rec(const LaurentMatrix& m, std::vector<int>& cols, int row) {
    if (cols.empty()) return LaurentPoly(1);
    LaurentPoly acc;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        int c = cols[ci];
        const LaurentPoly& pivot = m.at(row, c);
        if (pivot.is_zero()) continue;
        cols.erase(cols.begin() + static_cast<long>(ci));
        LaurentPoly sub = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(ci), c);
        LaurentPoly term = pivot * sub;
        if (ci % 2) acc -= term;
        else acc += term;
    }
    return acc;
}
}  // namespace

LaurentPoly LaurentMatrix::determinant() const {
    if (dim_ == 0) return LaurentPoly(1);
    std::vector<int> cols(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) cols[static_cast<std::size_t>(i)] = i;
    return det_rec(*this, cols, 0);
}

}  // namespace surgcalc
