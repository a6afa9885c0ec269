#pragma once

#include <optional>
#include <vector>

#include "diffext/extension.hpp"
#include "diffext/groups.hpp"
#include "diffext/types.hpp"

namespace diffext {

// (A, a) in U = End(V) + K.
struct UVector {
  MatrixQ A;
  RatFuncQ a;
};

// (b, A, a) in W = K + End(V) + K, flattened as (b, A row-major, a).
struct WVector {
  RatFuncQ b;
  MatrixQ A;
  RatFuncQ a;
};

// l_c(g)(A, a) = (gAg^{-1} + c(g)a, a).
UVector l_action(const DerivationCocycle& c, const GroupElement& g, const UVector& u);

// l'_c(g)(B, b) = (gBg^{-1}, b + tr(c(g^{-1})B)).
UVector l_dual_action(const DerivationCocycle& c, const GroupElement& g, const UVector& u);

// (A, a) x (B, b) -> tr(AB) + ab. Invariant under (l_c(g), l'_c(g)).
RatFuncQ pairing(const UVector& u, const UVector& v);

// Matrices of l_c(g) and l'_c(g) on U in coordinates (A row-major, a).
MatrixQ l_matrix(const DerivationCocycle& c, const GroupElement& g);
MatrixQ l_dual_matrix(const DerivationCocycle& c, const GroupElement& g);

// The section operator p_g(b, A, a) = (b + tr(c2(g^{-1})A), gAg^{-1} + c1(g)a, a)
// as an (n^2+2)-square matrix on flattened W.
MatrixQ make_p_g(const DerivationCocycle& c1, const DerivationCocycle& c2, const GroupElement& g);

// p_t(b, A, a) = (b + at, A, a): identity plus t in the corner.
MatrixQ make_p_t(const RatFuncQ& t, int n);

// tr(c1(g) c2(g)): the corner correction whose coboundary separates the raw
// factor set of the p_g section from the cup-product cocycle.
RatFuncQ corner_shift(const DerivationCocycle& c1, const DerivationCocycle& c2,
                      const GroupElement& g);

// p_g with the corner shifted by -corner_shift(g): the section whose factor
// set equals the cup-product cocycle pointwise. Differs from p_g by a kernel
// factor, so it satisfies the same membership conditions.
MatrixQ make_p_g_corrected(const DerivationCocycle& c1, const DerivationCocycle& c2,
                           const GroupElement& g);

std::vector<RatFuncQ> flatten_w(const WVector& w);
WVector unflatten_w(const std::vector<RatFuncQ>& coords, int n);
WVector apply_w(const MatrixQ& p, const WVector& w);

// Map induced on W modulo the first coordinate line, in U coordinates;
// requires the first line to be preserved.
MatrixQ pi_star(const MatrixQ& p);

// Restriction of p to the subspace (b, B, 0), in U coordinates (B, b);
// requires that subspace to be preserved.
MatrixQ iota_star(const MatrixQ& p);

struct LinElement {
  GroupElement g;
  MatrixQ p;
};

// True iff pi_star(p) equals l_{c1}(g) and iota_star(p) equals l'_{c2}(g).
// Throws NotInP when p does not preserve the flag.
bool membership_check(const LinElement& el, const DerivationCocycle& c1,
                      const DerivationCocycle& c2);

struct KeyIdentityResult {
  bool holds = false;     // all component identities below
  RatFuncQ t;             // central parameter extracted from the corrected sections
  RatFuncQ t_raw;         // central parameter extracted from the displayed sections
  RatFuncQ alpha_value;   // the cup-product cocycle at (h, g)
  bool raw_identity = false;       // p_h p_g = p_{hg} p_{t_raw} for the displayed sections
  bool shift_bridge = false;       // t_raw = alpha(h,g) + coboundary of corner_shift at (h,g)
  bool corrected_identity = false; // same identity for the corrected sections
  bool corrected_matches = false;  // extracted t equals alpha(h,g)
};

// Verifies p_h p_g = p_{hg} p_t and pins the central parameter down exactly:
// the displayed sections satisfy it with t differing from alpha(h,g) by the
// coboundary of corner_shift, and the corrected sections satisfy it with
// t = alpha(h,g) on the nose. holds requires every piece.
KeyIdentityResult key_identity_check(const DerivationCocycle& c1, const DerivationCocycle& c2,
                                     const GroupElement& g, const GroupElement& h);

// If p = make_p_t(t) for some t, returns t; otherwise absent.
std::optional<RatFuncQ> kernel_parameter(const MatrixQ& p);

}  // namespace diffext
