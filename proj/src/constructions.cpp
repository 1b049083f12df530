#include "surgcalc/constructions.hpp"

#include "surgcalc/invariants.hpp"

#include <numeric>

namespace surgcalc {

ConstructionVerdict positive_braid_rule(const BraidWord& w) {
    int g = positive_braid_genus(w);  // validates positivity and knot closure
    ConstructionVerdict v;
    v.rule = "positive-braid";
    v.fillable = ConstructionVerdict::Fillable::Yes;
    v.coefficient_bound = 4LL * g;
    v.crossing_change_budget = (static_cast<long long>(w.length()) - w.strands() + 1) / 2;
    v.notes = "closure of a positive braid, slice genus " + std::to_string(g);
    return v;
}

ConstructionVerdict lens_rule(int g, long long lens_coefficient) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (lens_coefficient <= 0)
        throw std::invalid_argument("lens surgery coefficient must be positive");
    ConstructionVerdict v;
    v.rule = "lens";
    if (lens_coefficient <= 2LL * g - 1) {
        v.contradiction = true;
        v.notes = "lens coefficient " + std::to_string(lens_coefficient) +
                  " violates the bound m > 2g-1 = " + std::to_string(2LL * g - 1);
        return v;
    }
    v.fillable = ConstructionVerdict::Fillable::Yes;
    v.coefficient_bound = lens_coefficient;
    v.notes = "lens-space surgery coefficient is itself fillable";
    return v;
}

ConstructionVerdict satellite_rule(const Certificate& pattern_cert,
                                   long long companion_coefficient,
                                   std::optional<int> satellite_genus) {
    validate(pattern_cert);  // throws if the pattern is not braided fillable
    ConstructionVerdict v;
    v.rule = "satellite";
    v.fillable = ConstructionVerdict::Fillable::Yes;
    if (satellite_genus) {
        v.coefficient_bound = 4LL * *satellite_genus;
        v.notes = "fillable; coefficient bound 4g from the supplied satellite genus";
    } else {
        v.notes = "fillable with twisting m = " + std::to_string(companion_coefficient) +
                  "; no coefficient formula is available";
    }
    return v;
}

ConstructionVerdict cable_rule(long long p, long long q, long long companion_coefficient) {
    if (p < 1) throw std::invalid_argument("cable longitudinal parameter must be >= 1");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw std::invalid_argument("cable parameters must be coprime");
    ConstructionVerdict v;
    v.rule = "cable";
    long long excess = q - companion_coefficient * p;
    if (excess > 0) {
        v.fillable = ConstructionVerdict::Fillable::Yes;
        v.notes = "q - m*p = " + std::to_string(excess) +
                  " > 0: pattern torus braid is braided fillable";
    } else {
        v.notes = "q - m*p = " + std::to_string(excess) +
                  " <= 0: rule does not apply (fillability not excluded)";
    }
    return v;
}

}  // namespace surgcalc
