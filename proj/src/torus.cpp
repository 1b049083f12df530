#include "surgcalc/torus.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace surgcalc {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("division by zero");
    return Rational(num * o.den, den * o.num);
}
auto Rational::operator<=>(const Rational& o) const {
    return num * o.den <=> o.num * den;
}

long long Rational::floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

long long Rational::ceil() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational ContinuedFraction::value() const { return evaluate_cf(coefficients); }

std::string ContinuedFraction::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coefficients[i]);
    }
    return s + "]";
}

Rational evaluate_cf(const std::vector<long long>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty continued fraction");
    Rational v(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        v = Rational(*it) + Rational(1) / v;
    return v;
}

namespace {

void normalize_pq(long long& p, long long& q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus knot needs positive p, q");
    if (p < q) std::swap(p, q);
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot needs coprime p, q");
}

long long mod_inverse(long long a, long long m) {
    long long t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        long long quo = r / newr;
        t = std::exchange(newt, t - quo * newt);
        r = std::exchange(newr, r - quo * newr);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return ((t % m) + m) % m;
}

}  // namespace

ContinuedFraction continued_fraction(long long p, long long q) {
    normalize_pq(p, q);
    ContinuedFraction cf;
    cf.p = p;
    cf.q = q;
    long long a = p, b = q;
    while (b != 0) {
        cf.coefficients.push_back(a / b);
        a = std::exchange(b, a % b);
    }
    // For coprime p > q >= 2 the Euclidean quotients end with a_n >= 2
    // automatically; q = 1 gives the single-coefficient expansion [p].
    return cf;
}

long long mu_torus(long long p, long long q) {
    normalize_pq(p, q);
    if (q == 1) return 0;
    ContinuedFraction cf = continued_fraction(p, q);
    return p * q - cf.coefficients.back();
}

Rational m_torus(long long p, long long q) {
    normalize_pq(p, q);
    if (q == 1) return Rational(0);
    ContinuedFraction cf = continued_fraction(p, q);
    Rational c = (cf.coefficients.size() % 2 == 0)
                     ? Rational(q, mod_inverse(p, q))
                     : Rational(p, mod_inverse(q, p));
    return Rational(p * q) - c;
}

Rational reversed_cf_c(long long p, long long q) {
    normalize_pq(p, q);
    if (q == 1) return Rational(p);
    ContinuedFraction cf = continued_fraction(p, q);
    const std::size_t n = cf.coefficients.size();
    const std::size_t stop = (n % 2 == 0) ? 2 : 1;  // 1-based index of the last kept term
    std::vector<long long> rev;
    for (std::size_t j = n; j >= stop; --j) rev.push_back(cf.coefficients[j - 1]);
    return evaluate_cf(rev);
}

TorusReport blowup_schedule(long long p, long long q) {
    normalize_pq(p, q);
    TorusReport rep;
    rep.p = p;
    rep.q = q;
    rep.genus = (p - 1) * (q - 1) / 2;
    if (q == 1) {
        rep.cf = ContinuedFraction{p, 1, {p}};
        rep.remainders = {p, 1};
        rep.mu = 0;
        rep.m = Rational(0);
        rep.c = Rational(p);
        return rep;
    }
    rep.cf = continued_fraction(p, q);
    rep.mu = mu_torus(p, q);
    rep.m = m_torus(p, q);
    rep.c = reversed_cf_c(p, q);

    // Euclid remainder schedule: p_{j+1} = p_{j-1} mod p_j, quotients a_j.
    std::vector<long long> rem = {p, q};
    while (rem.back() != 1) rem.push_back(rem[rem.size() - 2] % rem.back());
    rep.remainders = rem;

    std::vector<int> parts;
    const auto& a = rep.cf.coefficients;
    for (std::size_t j = 1; j <= a.size() - 1; ++j) {
        rep.schedule.push_back({rem[j], a[j - 1]});
        for (long long k = 0; k < a[j - 1]; ++k) parts.push_back(static_cast<int>(rem[j]));
    }
    rep.disk_class = DiskClass(std::move(parts));
    return rep;
}

}  // namespace surgcalc
