#include "doctest.h"

#include <diffext/char2.hpp>
#include <diffext/poly.hpp>

using namespace diffext;

namespace {

RatFunc2 tvar() { return RatFunc2::variable(1, 0); }
RatFunc2 one2() { return RatFunc2::one(1); }

RatFunc2 dt(const RatFunc2& f) { return f.partial(0); }

// independent evaluation of the displayed row formula
Matrix2 rho_by_formula(const Matrix2& g) {
  const RatFunc2 a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  Matrix2 r(4, 1);
  r(0, 0) = one2();
  r(0, 1) = a * c;
  r(0, 2) = b * d;
  r(0, 3) = dt(a) * d + dt(b) * c;
  r(1, 1) = a * a;
  r(1, 2) = b * b;
  r(1, 3) = dt(a * b);
  r(2, 1) = c * c;
  r(2, 2) = d * d;
  r(2, 3) = dt(c * d);
  r(3, 3) = one2();
  return r;
}

}  // namespace

TEST_CASE("group elements over the characteristic-two field") {
  SL2F2tElement u = sl2f2_upper(tvar());
  SL2F2tElement l = sl2f2_lower(tvar() * tvar());
  SL2F2tElement h = sl2f2_torus(tvar() + one2());
  for (const auto& g : {u, l, h}) CHECK(g.m.det() == one2());
  SL2F2tElement p = sl2f2_mul(sl2f2_mul(u, l), h);
  CHECK(p.m.det() == one2());
  Matrix2 bad = Matrix2::identity(2, 1);
  bad(0, 0) = tvar();
  CHECK_THROWS_AS(make_sl2_f2t(bad), NotInSL2);
  CHECK_THROWS_AS(sl2f2_torus(RatFunc2::zero(1)), NotInvertible);
}

TEST_CASE("representation fixed values") {
  CHECK(rho(make_sl2_f2t(Matrix2::identity(2, 1))).is_identity());
  Matrix2 ru = rho(sl2f2_upper(tvar()));
  // frozen entries for the unipotent generator at parameter t
  CHECK(ru(0, 0) == one2());
  CHECK(ru(0, 1).is_zero());
  CHECK(ru(0, 2) == tvar());
  CHECK(ru(0, 3).is_zero());
  CHECK(ru(1, 1) == one2());
  CHECK(ru(1, 2) == tvar() * tvar());
  CHECK(ru(1, 3) == one2());
  CHECK(ru(2, 2) == one2());
  CHECK(ru(2, 1).is_zero());
  CHECK(ru(3, 3) == one2());
  CHECK(ru == rho_by_formula(sl2f2_upper(tvar()).m));
  // torus image: diagonal weights with a derivative in the corner
  Matrix2 rh = rho(sl2f2_torus(tvar()));
  CHECK(rh(1, 1) == tvar() * tvar());
  CHECK(rh(2, 2) == (tvar() * tvar()).inverse());
  CHECK(rh(0, 0) == one2());
  CHECK(rh(0, 3) == tvar().inverse());
  CHECK(rh(1, 3).is_zero());
  CHECK(rh == rho_by_formula(sl2f2_torus(tvar()).m));
}

TEST_CASE("multiplicativity on a hand-picked pair") {
  SL2F2tElement g = sl2f2_upper(tvar());
  SL2F2tElement h = sl2f2_lower(tvar());
  SL2F2tElement gh = sl2f2_mul(g, h);
  // the product matrix is [[1 + t^2, t], [t, 1]]
  CHECK(gh.m(0, 0) == one2() + tvar() * tvar());
  CHECK(gh.m(0, 1) == tvar());
  CHECK(gh.m(1, 0) == tvar());
  CHECK(gh.m(1, 1) == one2());
  // both sides built independently from the row formula
  Matrix2 lhs = rho_by_formula(gh.m);
  Matrix2 rhs = rho_by_formula(g.m) * rho_by_formula(h.m);
  CHECK(lhs == rhs);
  CHECK(rho(gh) == lhs);
  CHECK(rho(g) * rho(h) == lhs);
}

TEST_CASE("homomorphism check over sampled pairs") {
  Char2CheckResult r = rho_homomorphism_check(2025, 40, 3, false);
  CHECK(r.ok);
  CHECK(r.witness.empty());
}

TEST_CASE("perturbed map fails multiplicativity") {
  Char2CheckResult r = rho_homomorphism_check(2025, 40, 3, true);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.witness.empty());
  // even a tiny sample budget catches it
  Char2CheckResult tiny = rho_homomorphism_check(909, 1, 1, true);
  CHECK_FALSE(tiny.ok);
}

TEST_CASE("sampling is deterministic and in the group") {
  auto a = sample_sl2_f2t(77, 8, 3);
  auto b = sample_sl2_f2t(77, 8, 3);
  REQUIRE(a.size() == 8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].m.det() == one2());
    CHECK(a[i].m == b[i].m);
  }
}

TEST_CASE("unipotent part of the torus image") {
  CentralUnipotent cu = central_unipotent(tvar());
  CHECK(cu.unipotent);
  CHECK(cu.square_is_identity);
  // v = I + (D(u)/u) E_{0,3}; at u = t the corner is 1/t
  Matrix2 expect = Matrix2::identity(4, 1);
  expect(0, 3) = tvar().inverse();
  CHECK(cu.v == expect);
  CHECK_FALSE(cu.v.is_identity());
  Matrix2 dm = cu.v - Matrix2::identity(4, 1);
  CHECK(dm * dm == Matrix2(4, 1));
  CHECK((cu.v * cu.v).is_identity());
  // squares have zero derivative, so v is trivial on them
  CentralUnipotent sq = central_unipotent(tvar() * tvar());
  CHECK(sq.v.is_identity());
}

TEST_CASE("square-class invariance of the unipotent part") {
  RatFunc2 t = tvar();
  RatFunc2 u = t * t + t;
  RatFunc2 w = t + one2();
  CHECK(central_unipotent(u * w * w).v == central_unipotent(u).v);
  // multiplicativity in the parameter
  Matrix2 lhs = central_unipotent(u).v * central_unipotent(w).v;
  CHECK(lhs == central_unipotent(u * w).v);
}

TEST_CASE("unipotent part is central against the representation") {
  RatFunc2 t = tvar();
  CHECK(central_unipotent_check(t, 404, 25, 3));
  CHECK(central_unipotent_check(t * t + t, 404, 25, 3));
  CentralUnipotent cu = central_unipotent(t);
  CHECK(commutes_with_rho_of(cu.v, sl2f2_upper(t)));
  CHECK(commutes_with_rho_of(cu.v, sl2f2_lower(t * t)));
  CHECK(commutes_with_rho_of(cu.v, sl2f2_torus(t + one2())));
}
