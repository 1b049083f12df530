#pragma once

#include "surgcalc/disk_class.hpp"

#include <string>
#include <vector>

namespace surgcalc {

/// Exact rational with normalized sign and gcd-reduced terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    Rational operator+(const Rational&) const;
    Rational operator-(const Rational&) const;
    Rational operator*(const Rational&) const;
    Rational operator/(const Rational&) const;
    bool operator==(const Rational&) const = default;
    auto operator<=>(const Rational&) const;

    long long ceil() const;
    long long floor() const;
    bool is_integer() const { return den == 1; }
    std::string str() const;  // "25/2" or "4"
};

/// Euclidean continued fraction p/q = a_1 + 1/(a_2 + 1/(...)) with a_n >= 2
/// (unless the expansion has a single coefficient).
struct ContinuedFraction {
    long long p = 1, q = 1;
    std::vector<long long> coefficients;

    Rational value() const;
    std::string str() const;  // "[1,1,2]"
};

ContinuedFraction continued_fraction(long long p, long long q);

/// Evaluates [a_1, a_2, ..., a_k]^+ exactly.
Rational evaluate_cf(const std::vector<long long>& coeffs);

/// One resolution step: a_j blowups each of multiplicity p_j.
struct BlowupStep {
    long long multiplicity;  // p_j
    long long count;         // a_j
};

struct TorusReport {
    long long p = 0, q = 0;          // normalized so p > q
    ContinuedFraction cf;
    std::vector<long long> remainders;  // p_0, ..., p_n with p_n = 1
    long long mu = 0;                // pq - a_n
    Rational m;                      // pq - c(p,q)
    Rational c;                      // q/p* or p/q*
    long long genus = 0;             // (p-1)(q-1)/2
    std::vector<BlowupStep> schedule;  // steps j = 1..n-1
    DiskClass disk_class;            // a_j parts of size p_j each
};

/// Inputs are normalized by swapping so p > q; requires coprime p, q >= 1.
/// q = 1 gives the degenerate unknot report (mu = 0, genus 0, empty schedule).
long long mu_torus(long long p, long long q);
Rational m_torus(long long p, long long q);

/// c(p,q) via the reversed continued fraction [a_n, ..., a_m]^+ where m is 2
/// for even n and 1 for odd n. Agrees with the modular-inverse form in m_torus.
Rational reversed_cf_c(long long p, long long q);

TorusReport blowup_schedule(long long p, long long q);

}  // namespace surgcalc
