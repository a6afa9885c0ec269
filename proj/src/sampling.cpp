#include "diffext/sampling.hpp"

namespace diffext {

namespace {

Mono random_mono(Rng& rng, int nvars, int max_deg) {
  Mono m(nvars, 0);
  if (nvars == 0 || max_deg == 0) return m;
  auto budget = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
  for (int i = 0; i < nvars && budget > 0; ++i) {
    auto e = static_cast<std::uint32_t>(rng.below(budget + 1));
    m[i] = e;
    budget -= e;
  }
  return m;
}

}  // namespace

PolyQ random_poly_q(Rng& rng, int nvars, int max_deg, int max_terms, bool force_nonzero) {
  PolyQ p(nvars);
  long nterms = rng.range(force_nonzero ? 1 : 0, max_terms);
  for (long k = 0; k < nterms; ++k) {
    long c = rng.range(-3, 3);
    if (c == 0) c = 1;
    p.add_term(random_mono(rng, nvars, max_deg), Rat(c));
  }
  if (force_nonzero && p.is_zero()) p.add_term(Mono(nvars, 0), Rat(1));
  return p;
}

RatFuncQ random_ratfunc_q(Rng& rng, int nvars, int max_deg) {
  PolyQ num = random_poly_q(rng, nvars, max_deg, 4, false);
  if (rng.chance(1, 2)) return RatFuncQ(std::move(num));
  PolyQ den = random_poly_q(rng, nvars, std::min(max_deg, 2), 2, true);
  return RatFuncQ(std::move(num), std::move(den));
}

RatFuncQ random_ratfunc_q_nonzero(Rng& rng, int nvars, int max_deg) {
  for (int tries = 0; tries < 8; ++tries) {
    RatFuncQ f = random_ratfunc_q(rng, nvars, max_deg);
    if (!f.is_zero()) return f;
  }
  return RatFuncQ::one(nvars);
}

MatrixQ random_matrix_q(Rng& rng, int n, int nvars, int max_deg) {
  MatrixQ m(n, nvars);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_ratfunc_q(rng, nvars, max_deg);
  return m;
}

DerivationQ random_derivation_q(Rng& rng, int nvars, int max_deg) {
  std::vector<RatFuncQ> cs;
  cs.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) cs.push_back(random_ratfunc_q(rng, nvars, max_deg));
  return DerivationQ::from_coeffs(std::move(cs));
}

Poly2 random_poly_f2(Rng& rng, int nvars, int max_deg, int max_terms, bool force_nonzero) {
  Poly2 p(nvars);
  long nterms = rng.range(force_nonzero ? 1 : 0, max_terms);
  for (long k = 0; k < nterms; ++k) p.add_term(random_mono(rng, nvars, max_deg), GF2(1));
  if (force_nonzero && p.is_zero()) p.add_term(Mono(nvars, 0), GF2(1));
  return p;
}

RatFunc2 random_ratfunc_f2(Rng& rng, int nvars, int max_deg) {
  Poly2 num = random_poly_f2(rng, nvars, max_deg, 4, false);
  if (rng.chance(1, 2)) return RatFunc2(std::move(num));
  Poly2 den = random_poly_f2(rng, nvars, std::min(max_deg, 2), 2, true);
  return RatFunc2(std::move(num), std::move(den));
}

RatFunc2 random_ratfunc_f2_nonzero(Rng& rng, int nvars, int max_deg) {
  for (int tries = 0; tries < 8; ++tries) {
    RatFunc2 f = random_ratfunc_f2(rng, nvars, max_deg);
    if (!f.is_zero()) return f;
  }
  return RatFunc2::one(nvars);
}

}  // namespace diffext
