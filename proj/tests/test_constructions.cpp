#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surgcalc/constructions.hpp"

using namespace surgcalc;

namespace {

Certificate pretzel_certificate() {
    Certificate c;
    c.strands = 3;
    c.factors = {Factor::full_twist({}, 1, 3), Factor::band({-2}, 1), Factor::node({}, 2),
                 Factor::node({}, 2), Factor::band({}, 2)};
    return c;
}

}  // namespace

TEST_CASE("positive braid rule") {
    // (3,5) torus braid: genus 4, so bound 16 and budget (10-3+1)/2 = 4.
    ConstructionVerdict v = positive_braid_rule(BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}));
    CHECK(v.fillable == ConstructionVerdict::Fillable::Yes);
    CHECK(v.coefficient_bound == 16);
    CHECK(v.crossing_change_budget == 4);
    CHECK(v.rule == "positive-braid");
    CHECK_FALSE(v.contradiction);
    CHECK_THROWS(positive_braid_rule(BraidWord(3, {1, -2})));   // not positive
    CHECK_THROWS(positive_braid_rule(BraidWord(3, {1, 2, 1})));  // not a knot
}

TEST_CASE("positive braid rule on the flattened pretzel certificate") {
    BraidWord w = free_reduce(flatten(pretzel_certificate()));
    ConstructionVerdict v = positive_braid_rule(w);
    CHECK(v.coefficient_bound == 20);  // 4g with g = 5
    CHECK(v.crossing_change_budget == 5);
}

TEST_CASE("lens rule") {
    ConstructionVerdict ok = lens_rule(2, 7);
    CHECK(ok.fillable == ConstructionVerdict::Fillable::Yes);
    CHECK(ok.coefficient_bound == 7);
    CHECK_FALSE(ok.contradiction);

    ConstructionVerdict bad = lens_rule(3, 4);  // 4 <= 2g-1 = 5
    CHECK(bad.contradiction);
    CHECK(bad.fillable == ConstructionVerdict::Fillable::NotDetermined);

    // Boundary: m = 2g is fine, m = 2g-1 is not.
    CHECK_FALSE(lens_rule(3, 6).contradiction);
    CHECK(lens_rule(3, 5).contradiction);

    CHECK_THROWS(lens_rule(-1, 3));
    CHECK_THROWS(lens_rule(2, 0));
}

TEST_CASE("satellite rule") {
    ConstructionVerdict v = satellite_rule(pretzel_certificate(), 3);
    CHECK(v.fillable == ConstructionVerdict::Fillable::Yes);
    CHECK_FALSE(v.coefficient_bound.has_value());  // existence only

    ConstructionVerdict g = satellite_rule(pretzel_certificate(), 3, 6);
    CHECK(g.coefficient_bound == 24);

    Certificate broken;
    broken.strands = 3;
    broken.factors = {Factor::band({}, 1)};
    CHECK_THROWS_AS(satellite_rule(broken, 3), CertificateError);
}

TEST_CASE("cable rule") {
    ConstructionVerdict yes = cable_rule(2, 3, 1);  // q - mp = 1 > 0
    CHECK(yes.fillable == ConstructionVerdict::Fillable::Yes);

    ConstructionVerdict no = cable_rule(2, 3, 2);  // q - mp = -1
    CHECK(no.fillable == ConstructionVerdict::Fillable::NotDetermined);
    CHECK_FALSE(no.contradiction);

    ConstructionVerdict edge = cable_rule(2, 5, 2);  // q - mp = 1
    CHECK(edge.fillable == ConstructionVerdict::Fillable::Yes);
    CHECK(cable_rule(3, 5, 2).fillable == ConstructionVerdict::Fillable::NotDetermined);

    CHECK_THROWS(cable_rule(0, 1, 1));
    CHECK_THROWS(cable_rule(2, 4, 1));  // not coprime
}
