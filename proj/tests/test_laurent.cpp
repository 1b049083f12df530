#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surgcalc/laurent.hpp"

#include <random>

using namespace surgcalc;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> coeff(-9, 9);
    LaurentPoly p;
    int k = terms(rng);
    for (int i = 0; i < k; ++i) p += LaurentPoly::monomial(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic and normalization") {
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly p = t * t - LaurentPoly(1);  // t^2 - 1
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(1) == 0);
    CHECK((p - p).is_zero());
    CHECK(p.min_exp() == 0);
    CHECK(p.max_exp() == 2);
    CHECK(p.shifted(-1) == t - LaurentPoly::t(-1));
    CHECK((-p) == LaurentPoly(1) - t * t);
    CHECK_THROWS(LaurentPoly().min_exp());
}

TEST_CASE("evaluation") {
    // t^-1 - 1 + t at t = 2 with the convention of clearing denominators is
    // not integral, so evaluate only on nonnegative-exponent polys.
    LaurentPoly p = LaurentPoly::t(2) * 3 - LaurentPoly::t() + LaurentPoly(5);
    CHECK(p.evaluate(2) == 12 - 2 + 5);
    CHECK(p.at_one() == 7);
    CHECK(LaurentPoly().evaluate(10) == 0);
}

TEST_CASE("string form") {
    CHECK(LaurentPoly().str() == "0");
    CHECK((LaurentPoly::t(-1) - LaurentPoly(1) + LaurentPoly::t()).str() == "t^-1 - 1 + t");
    CHECK((LaurentPoly::t() * 2).str() == "2*t");
    CHECK((LaurentPoly(-3)).str() == "-3");
    CHECK((LaurentPoly::t(2) - LaurentPoly::t()).str() == "-t + t^2");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(17);
    for (int it = 0; it < 300; ++it) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (-a) == LaurentPoly());
    }
}

TEST_CASE("exact division recovers random factors") {
    std::mt19937 rng(19);
    int done = 0;
    while (done < 200) {
        LaurentPoly d = random_poly(rng);
        LaurentPoly q0 = random_poly(rng);
        if (d.is_zero()) continue;
        LaurentPoly q;
        CHECK((d * q0).divide_exact(d, q));
        CHECK(q == q0);
        ++done;
    }
    LaurentPoly q;
    LaurentPoly t = LaurentPoly::t();
    CHECK_FALSE((t + LaurentPoly(1)).divide_exact(t - LaurentPoly(1), q));
    CHECK_FALSE(LaurentPoly(3).divide_exact(LaurentPoly(2), q));
    // Laurent units divide everything.
    CHECK((t + LaurentPoly(1)).divide_exact(LaurentPoly::t(-2), q));
    CHECK(q == LaurentPoly::t(3) + LaurentPoly::t(2));
}

TEST_CASE("matrix multiply and determinant") {
    LaurentPoly t = LaurentPoly::t();
    LaurentMatrix a(2);
    a.at(0, 0) = t;
    a.at(0, 1) = LaurentPoly(1);
    a.at(1, 0) = LaurentPoly(0);
    a.at(1, 1) = -t;
    CHECK(a.determinant() == -(t * t));
    CHECK((a * LaurentMatrix::identity(2)) == a);

    // det is multiplicative: check on random 3x3 pairs.
    std::mt19937 rng(23);
    for (int it = 0; it < 50; ++it) {
        LaurentMatrix m(3), n(3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                m.at(r, c) = random_poly(rng, 2);
                n.at(r, c) = random_poly(rng, 2);
            }
        CHECK((m * n).determinant() == m.determinant() * n.determinant());
    }
}

TEST_CASE("determinant matches the explicit 3x3 rule") {
    std::mt19937 rng(29);
    for (int it = 0; it < 50; ++it) {
        LaurentMatrix m(3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = random_poly(rng, 2);
        LaurentPoly want = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
        CHECK(m.determinant() == want);
    }
}
