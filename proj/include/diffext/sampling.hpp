#pragma once

#include "diffext/rng.hpp"
#include "diffext/types.hpp"

namespace diffext {

// Random sparse polynomial: at most max_terms terms, total degree at most
// max_deg, small nonzero integer coefficients.
PolyQ random_poly_q(Rng& rng, int nvars, int max_deg, int max_terms, bool force_nonzero);
RatFuncQ random_ratfunc_q(Rng& rng, int nvars, int max_deg);
RatFuncQ random_ratfunc_q_nonzero(Rng& rng, int nvars, int max_deg);
MatrixQ random_matrix_q(Rng& rng, int n, int nvars, int max_deg);
DerivationQ random_derivation_q(Rng& rng, int nvars, int max_deg);

Poly2 random_poly_f2(Rng& rng, int nvars, int max_deg, int max_terms, bool force_nonzero);
RatFunc2 random_ratfunc_f2(Rng& rng, int nvars, int max_deg);
RatFunc2 random_ratfunc_f2_nonzero(Rng& rng, int nvars, int max_deg);

}  // namespace diffext
