#pragma once

#include "surgcalc/braid.hpp"
#include "surgcalc/laurent.hpp"

namespace surgcalc {

/// Reduced Burau matrix of a word in Br_n, an (n-1)x(n-1) matrix over
/// integer Laurent polynomials. Generator images (n >= 3):
///
///   sigma_1     -> [-t 1; 0 1] (+) I
///   sigma_i     -> I, except row i reads (..., t, -t, 1, ...) in columns
///                  i-1, i, i+1 (1 < i < n-1)
///   sigma_{n-1} -> I (+) [1 0; t -t]
///
/// and for n = 2, sigma_1 -> [-t]. Multiplicative over concatenation;
/// validated against the trefoil Alexander oracle in the tests.
LaurentMatrix burau_reduced(const BraidWord& w);

/// Alexander polynomial of the knot closure: det(burau_reduced(w) - I)
/// divided exactly by 1 + t + ... + t^{n-1}, normalized to the symmetric
/// Laurent representative with value 1 at t = 1.
/// Requires closure_components(w) == 1.
LaurentPoly alexander(const BraidWord& w);

/// exponent_sum(w) - strands; self-linking number of the closed braid.
int self_linking(const BraidWord& w);

/// (e - n + 1)/2 for a positive braid word whose closure is a knot.
int positive_braid_genus(const BraidWord& w);

}  // namespace surgcalc
