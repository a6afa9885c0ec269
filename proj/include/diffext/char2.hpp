#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffext/rng.hpp"
#include "diffext/types.hpp"

namespace diffext {

// Element of SL2 over the one-variable rational-function field of
// characteristic 2; the determinant is checked on construction.
struct SL2F2tElement {
  Matrix2 m;
};

SL2F2tElement make_sl2_f2t(Matrix2 m);  // NotInSL2 unless 2x2 with det 1
SL2F2tElement sl2f2_upper(const RatFunc2& f);
SL2F2tElement sl2f2_lower(const RatFunc2& f);
SL2F2tElement sl2f2_torus(const RatFunc2& u);  // u must be nonzero
SL2F2tElement sl2f2_mul(const SL2F2tElement& a, const SL2F2tElement& b);

// The 4x4 representation
//   rows (1, ac, bd, D(a)d + D(b)c), (0, a^2, b^2, D(ab)), (0, c^2, d^2, D(cd)),
//        (0, 0, 0, 1)
// where D = d/dt.
Matrix2 rho(const SL2F2tElement& g);

// rho with one entry deliberately perturbed; multiplicativity must fail.
Matrix2 rho_mutated(const SL2F2tElement& g);

std::vector<SL2F2tElement> sample_sl2_f2t(std::uint64_t seed, int count, int degree_cap);

struct Char2CheckResult {
  bool ok = true;
  std::string witness;
};

// rho(gh) = rho(g) rho(h) on `count` seeded pairs; with use_mutated the
// perturbed map is checked instead and is expected to fail.
Char2CheckResult rho_homomorphism_check(std::uint64_t seed, int count, int degree_cap,
                                        bool use_mutated);

struct CentralUnipotent {
  Matrix2 v;                        // unipotent part of rho(diag(u, 1/u))
  bool unipotent = false;           // (v - I)^4 = 0
  bool square_is_identity = false;  // v^2 = I
};

// Splits rho(diag(u, 1/u)) against the diagonal semisimple part
// diag(1, u^2, u^-2, 1). u must be nonzero.
CentralUnipotent central_unipotent(const RatFunc2& u);

// central_unipotent plus commutation of v with rho on `count` sampled g.
bool central_unipotent_check(const RatFunc2& u, std::uint64_t seed, int count, int degree_cap);

bool commutes_with_rho_of(const Matrix2& v, const SL2F2tElement& g);

}  // namespace diffext
