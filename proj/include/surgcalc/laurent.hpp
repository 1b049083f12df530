#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace surgcalc {

/// Integer Laurent polynomial in one variable t, exact arithmetic throughout.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // constant
    explicit LaurentPoly(const mpz_class& c);

    static LaurentPoly monomial(const mpz_class& coeff, int exp);
    static LaurentPoly t(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(int exp) const;
    int min_exp() const;  // throws on zero
    int max_exp() const;
    const std::map<int, mpz_class>& coeffs() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly& operator+=(const LaurentPoly& p) { return *this = *this + p; }
    LaurentPoly& operator-=(const LaurentPoly& p) { return *this = *this - p; }
    LaurentPoly& operator*=(const LaurentPoly& p) { return *this = *this * p; }
    bool operator==(const LaurentPoly&) const = default;

    /// Multiply by t^k.
    LaurentPoly shifted(int k) const;

    mpz_class evaluate(const mpz_class& x) const;
    mpz_class at_one() const { return evaluate(1); }

    /// Exact division: *this = q * d for some Laurent polynomial q.
    /// Returns false (and leaves q untouched) if the division is not exact.
    bool divide_exact(const LaurentPoly& d, LaurentPoly& q) const;

    /// "t^-1 - 1 + t" style, terms sorted by exponent; "0" for zero.
    std::string str() const;

private:
    void prune();
    std::map<int, mpz_class> coeffs_;
};

/// Square matrix of Laurent polynomials.
class LaurentMatrix {
public:
    explicit LaurentMatrix(int dim);
    static LaurentMatrix identity(int dim);

    int dim() const { return dim_; }
    LaurentPoly& at(int r, int c) { return a_[r * dim_ + c]; }
    const LaurentPoly& at(int r, int c) const { return a_[r * dim_ + c]; }

    LaurentMatrix operator*(const LaurentMatrix&) const;
    LaurentMatrix operator-(const LaurentMatrix&) const;
    bool operator==(const LaurentMatrix&) const = default;

    /// Cofactor expansion; fine for the small dimensions used here.
    LaurentPoly determinant() const;

private:
    int dim_;
    std::vector<LaurentPoly> a_;
};

}  // namespace surgcalc
