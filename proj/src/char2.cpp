#include "diffext/char2.hpp"

#include "diffext/sampling.hpp"

namespace diffext {

namespace {

RatFunc2 D(const RatFunc2& f) { return f.partial(0); }

Matrix2 rho_impl(const SL2F2tElement& g, bool mutate) {
  const RatFunc2& a = g.m(0, 0);
  const RatFunc2& b = g.m(0, 1);
  const RatFunc2& c = g.m(1, 0);
  const RatFunc2& d = g.m(1, 1);
  const int nv = 1;
  Matrix2 r(4, nv);
  RatFunc2 one = RatFunc2::one(nv);
  r(0, 0) = one;
  r(0, 1) = a * c;
  r(0, 2) = b * d;
  r(0, 3) = D(a) * d + D(b) * c;
  r(1, 1) = a * a;
  r(1, 2) = b * b;
  r(1, 3) = D(a * b);
  r(2, 1) = c * c;
  r(2, 2) = d * d;
  r(2, 3) = D(c * d);
  r(3, 3) = one;
  if (mutate) r(0, 3) += b * c;  // char-2 analogue of a sign slip in one entry
  return r;
}

}  // namespace

SL2F2tElement make_sl2_f2t(Matrix2 m) {
  if (m.size() != 2 || m.nvars() != 1 || !m.det().is_one())
    throw NotInSL2("matrix is not in SL2 over the char-2 field");
  return SL2F2tElement{std::move(m)};
}

SL2F2tElement sl2f2_upper(const RatFunc2& f) {
  Matrix2 m = Matrix2::identity(2, 1);
  m(0, 1) = f;
  return SL2F2tElement{std::move(m)};
}

SL2F2tElement sl2f2_lower(const RatFunc2& f) {
  Matrix2 m = Matrix2::identity(2, 1);
  m(1, 0) = f;
  return SL2F2tElement{std::move(m)};
}

SL2F2tElement sl2f2_torus(const RatFunc2& u) {
  if (u.is_zero()) throw NotInvertible("torus parameter is zero");
  Matrix2 m(2, 1);
  m(0, 0) = u;
  m(1, 1) = u.inverse();
  return SL2F2tElement{std::move(m)};
}

SL2F2tElement sl2f2_mul(const SL2F2tElement& a, const SL2F2tElement& b) {
  return SL2F2tElement{a.m * b.m};
}

Matrix2 rho(const SL2F2tElement& g) { return rho_impl(g, false); }

Matrix2 rho_mutated(const SL2F2tElement& g) { return rho_impl(g, true); }

std::vector<SL2F2tElement> sample_sl2_f2t(std::uint64_t seed, int count, int degree_cap) {
  Rng rng(seed);
  std::vector<SL2F2tElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    SL2F2tElement g{Matrix2::identity(2, 1)};
    long len = rng.range(1, 4);
    for (long k = 0; k < len; ++k) {
      switch (rng.below(3)) {
        case 0:
          g = sl2f2_mul(g, sl2f2_upper(random_ratfunc_f2(rng, 1, degree_cap)));
          break;
        case 1:
          g = sl2f2_mul(g, sl2f2_lower(random_ratfunc_f2(rng, 1, degree_cap)));
          break;
        default:
          g = sl2f2_mul(g, sl2f2_torus(random_ratfunc_f2_nonzero(rng, 1, degree_cap)));
          break;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

Char2CheckResult rho_homomorphism_check(std::uint64_t seed, int count, int degree_cap,
                                        bool use_mutated) {
  std::vector<SL2F2tElement> gs = sample_sl2_f2t(seed, count, degree_cap);
  std::vector<SL2F2tElement> hs = sample_sl2_f2t(seed ^ 0x5851F42D4C957F2DULL, count, degree_cap);
  // Pin one pair whose product mixes the off-diagonal entries, so a perturbed
  // map cannot slip through an unlucky sample set.
  RatFunc2 tv = RatFunc2::variable(1, 0);
  gs.insert(gs.begin(), sl2f2_upper(tv));
  hs.insert(hs.begin(), sl2f2_lower(tv));
  count += 1;
  auto map = use_mutated ? rho_mutated : rho;
  for (int i = 0; i < count; ++i) {
    Matrix2 lhs = map(sl2f2_mul(gs[i], hs[i]));
    Matrix2 rhs = map(gs[i]) * map(hs[i]);
    if (lhs != rhs) {
      return Char2CheckResult{false, "pair " + std::to_string(i) + ": g = " + gs[i].m.str() +
                                         ", h = " + hs[i].m.str()};
    }
  }
  return Char2CheckResult{};
}

CentralUnipotent central_unipotent(const RatFunc2& u) {
  if (u.is_zero()) throw NotInvertible("torus parameter is zero");
  Matrix2 image = rho(sl2f2_torus(u));
  Matrix2 s(4, 1);
  RatFunc2 one = RatFunc2::one(1);
  RatFunc2 u2 = u * u;
  s(0, 0) = one;
  s(1, 1) = u2;
  s(2, 2) = u2.inverse();
  s(3, 3) = one;
  CentralUnipotent out{s.inverse() * image, false, false};
  Matrix2 nil = out.v - Matrix2::identity(4, 1);
  Matrix2 nil2 = nil * nil;
  out.unipotent = (nil2 * nil2).is_zero();
  out.square_is_identity = (out.v * out.v).is_identity();
  return out;
}

bool commutes_with_rho_of(const Matrix2& v, const SL2F2tElement& g) {
  Matrix2 r = rho(g);
  return v * r == r * v;
}

bool central_unipotent_check(const RatFunc2& u, std::uint64_t seed, int count, int degree_cap) {
  CentralUnipotent cu = central_unipotent(u);
  if (!cu.unipotent) return false;
  for (const SL2F2tElement& g : sample_sl2_f2t(seed, count, degree_cap))
    if (!commutes_with_rho_of(cu.v, g)) return false;
  return true;
}

}  // namespace diffext
