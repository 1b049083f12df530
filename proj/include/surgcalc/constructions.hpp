#pragma once

#include "surgcalc/braid.hpp"
#include "surgcalc/certificate.hpp"

#include <optional>
#include <string>

namespace surgcalc {

/// Verdict of one of the sufficient-condition rules. The rules are
/// sufficient, not necessary, so the negative outcome is "not determined",
/// never "no".
struct ConstructionVerdict {
    enum class Fillable { Yes, NotDetermined };

    Fillable fillable = Fillable::NotDetermined;
    std::optional<long long> coefficient_bound;  // a fillable smooth coefficient
    std::string rule;   // which clause fired: "positive-braid", "lens", "satellite", "cable"
    std::string notes;
    bool contradiction = false;  // inconsistent input detected
    std::optional<long long> crossing_change_budget;  // positive-braid rule only
};

/// Positive braid closure: fillable with coefficient bound 4g, plus the
/// crossing-change budget (l - n + 1)/2 of the unknotting argument.
ConstructionVerdict positive_braid_rule(const BraidWord& w);

/// Knot with a lens-space surgery at the given positive integer coefficient.
/// A coefficient <= 2g - 1 contradicts the cited surgery bound and is
/// reported with the contradiction flag set.
ConstructionVerdict lens_rule(int g, long long lens_coefficient);

/// Twisted satellite P_m(C) with braided fillable pattern P (witnessed by a
/// valid certificate) and fillable companion coefficient m. Existence only:
/// no coefficient is reported unless the satellite's slice genus is supplied.
ConstructionVerdict satellite_rule(const Certificate& pattern_cert,
                                   long long companion_coefficient,
                                   std::optional<int> satellite_genus = std::nullopt);

/// Cable C_{p,q} of a companion with fillable coefficient m: fillable when
/// q - m*p > 0, otherwise not determined.
ConstructionVerdict cable_rule(long long p, long long q, long long companion_coefficient);

}  // namespace surgcalc
