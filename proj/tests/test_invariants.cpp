#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surgcalc/invariants.hpp"

#include <random>

using namespace surgcalc;

namespace {

// Symmetric representative with value 1 at t = 1, matching the library's
// Alexander normalization. Used to compare against raw Seifert determinants.
LaurentPoly normalize(LaurentPoly p) {
    REQUIRE(!p.is_zero());
    int shift = -(p.min_exp() + p.max_exp()) / 2;
    p = p.shifted(shift);
    REQUIRE(p.min_exp() == -p.max_exp());
    mpz_class one = p.at_one();
    REQUIRE((one == 1 || one == -1));
    if (one == -1) p = -p;
    return p;
}

// det(V^T - t V) for a Seifert matrix V, an independent route to Alexander.
LaurentPoly seifert_alexander(const std::vector<std::vector<long>>& v) {
    int n = static_cast<int>(v.size());
    LaurentMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = LaurentPoly(v[j][i]) - LaurentPoly::t() * v[i][j];
    return normalize(m.determinant());
}

// Standard genus-k Seifert matrix of the (2, 2k+1) torus knot: -1 on the
// diagonal, 1 on the superdiagonal.
std::vector<std::vector<long>> torus2_seifert(int k) {
    std::vector<std::vector<long>> v(2 * k, std::vector<long>(2 * k, 0));
    for (int i = 0; i < 2 * k; ++i) {
        v[i][i] = -1;
        if (i + 1 < 2 * k) v[i][i + 1] = 1;
    }
    return v;
}

BraidWord random_word(std::mt19937& rng, int max_strands, int max_len) {
    std::uniform_int_distribution<int> nd(2, max_strands);
    int n = nd(rng);
    std::uniform_int_distribution<int> ld(0, max_len);
    std::uniform_int_distribution<int> gd(1, n - 1);
    std::uniform_int_distribution<int> sd(0, 1);
    std::vector<int> letters;
    int len = ld(rng);
    for (int i = 0; i < len; ++i) letters.push_back(gd(rng) * (sd(rng) ? 1 : -1));
    return BraidWord(n, std::move(letters));
}

}  // namespace

TEST_CASE("Burau of a generator and its inverse multiply to the identity") {
    std::mt19937 rng(31);
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i) {
            BraidWord g(n, {i});
            CHECK(burau_reduced(g) * burau_reduced(g.inverse()) ==
                  LaurentMatrix::identity(n - 1));
        }
}

TEST_CASE("Burau is a homomorphism on random word pairs") {
    std::mt19937 rng(37);
    for (int it = 0; it < 1000; ++it) {
        std::uniform_int_distribution<int> nd(2, 5);
        int n = nd(rng);
        std::uniform_int_distribution<int> ld(0, 6);
        std::uniform_int_distribution<int> gd(1, n - 1);
        std::uniform_int_distribution<int> sd(0, 1);
        auto make = [&] {
            std::vector<int> ls;
            int len = ld(rng);
            for (int i = 0; i < len; ++i) ls.push_back(gd(rng) * (sd(rng) ? 1 : -1));
            return BraidWord(n, std::move(ls));
        };
        BraidWord a = make(), b = make();
        CHECK(burau_reduced(a * b) == burau_reduced(a) * burau_reduced(b));
    }
}

TEST_CASE("Alexander of (2, 2k+1) torus braids matches the Seifert oracle") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> ls(2 * k + 1, 1);
        LaurentPoly got = alexander(BraidWord(2, ls));
        CHECK(got == seifert_alexander(torus2_seifert(k)));
        // Closed form: sum_{j=-k}^{k} (-1)^{k-j} t^j.
        LaurentPoly want;
        for (int j = -k; j <= k; ++j)
            want += LaurentPoly::monomial(((k - j) % 2 == 0) ? 1 : -1, j);
        CHECK(got == want);
    }
}

TEST_CASE("Alexander of the trefoil from three strands") {
    // Same knot, different braid: (sigma_1 sigma_2)^2... closure of B3: 1 2 1 2
    // is the trefoil.
    LaurentPoly from2 = alexander(BraidWord(2, {1, 1, 1}));
    LaurentPoly from3 = alexander(BraidWord(3, {1, 2, 1, 2}));
    CHECK(from2 == from3);
    CHECK(from2.str() == "t^-1 - 1 + t");
}

TEST_CASE("Alexander of the figure eight") {
    LaurentPoly p = alexander(BraidWord(3, {1, -2, 1, -2}));
    CHECK(p == -LaurentPoly::t(-1) + LaurentPoly(3) - LaurentPoly::t());
}

TEST_CASE("Alexander is invariant under conjugation and stabilization") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 100) {
        BraidWord w = random_word(rng, 4, 8);
        if (closure_components(w) != 1) continue;
        ++done;
        std::uniform_int_distribution<int> gd(1, w.strands() - 1);
        std::uniform_int_distribution<int> sd(0, 1);
        std::vector<int> cl;
        for (int i = 0; i < 4; ++i) cl.push_back(gd(rng) * (sd(rng) ? 1 : -1));
        BraidWord c(w.strands(), std::move(cl));
        LaurentPoly base = alexander(w);
        CHECK(alexander(c * w * c.inverse()) == base);
        // Markov stabilization: add a strand and sigma_n.
        std::vector<int> stab = w.letters();
        stab.push_back(w.strands());
        CHECK(alexander(BraidWord(w.strands() + 1, stab)) == base);
    }
}

TEST_CASE("Alexander rejects links") {
    CHECK_THROWS(alexander(BraidWord(2, {1, 1})));
    CHECK_THROWS(alexander(BraidWord(3, {})));
}

TEST_CASE("self-linking and positive braid genus") {
    BraidWord trefoil(2, {1, 1, 1});
    CHECK(self_linking(trefoil) == 1);
    CHECK(positive_braid_genus(trefoil) == 1);
    BraidWord t53(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(positive_braid_genus(t53) == 4);
    CHECK(self_linking(t53) == 7);  // 2g - 1
    CHECK_THROWS(positive_braid_genus(BraidWord(3, {1, -2, 1})));  // not positive
    CHECK_THROWS(positive_braid_genus(BraidWord(2, {1, 1})));      // not a knot
}
