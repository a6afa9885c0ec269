#include "doctest.h"

#include <diffext/linearization.hpp>
#include <diffext/parse.hpp>

using namespace diffext;

namespace {

RatFuncQ rq(const std::string& s) { return parse_ratfunc(s, 2); }

DerivationCocycle nat_c1() {
  return DerivationCocycle(DerivationQ::partial(2, 0), natural_rep());
}
DerivationCocycle nat_c2() {
  return DerivationCocycle(DerivationQ::partial(2, 1), natural_rep());
}

MatrixQ e_mat(int i, int j) {
  MatrixQ m(2, 2);
  m(i, j) = rq("1");
  return m;
}

}  // namespace

TEST_CASE("action on (0, 1) picks out the cocycle") {
  DerivationCocycle c = nat_c1();
  GroupElement g = rep_torus(natural_rep(), rq("t1"));
  UVector u{MatrixQ(2, 2), rq("1")};
  UVector v = l_action(c, g, u);
  // oracle: the matrix part must be d(rho) rho^{-1} computed directly
  DerivationQ d = DerivationQ::partial(2, 0);
  MatrixQ expect = g.mat().derived(d) * g.inv();
  CHECK(v.A == expect);
  CHECK(v.A(0, 0) == rq("1/t1"));
  CHECK(v.A(1, 1) == rq("-1/t1"));
  CHECK(v.a == rq("1"));
}

TEST_CASE("pairing fixed values") {
  UVector u{e_mat(0, 1), rq("1")};
  UVector v{e_mat(1, 0), rq("t1")};
  // oracle: tr(E12 E21) = 1, so the pairing is 1 + 1 * t1
  CHECK(trace_of_product(e_mat(0, 1), e_mat(1, 0)) == rq("1"));
  CHECK(pairing(u, v) == rq("1 + t1"));
  UVector id{MatrixQ::identity(2, 2), rq("1")};
  CHECK(pairing(id, id) == rq("3"));
  UVector w{e_mat(0, 1), rq("0")};
  CHECK(pairing(w, w).is_zero());
}

TEST_CASE("pairing is invariant under the paired actions") {
  DerivationCocycle c = nat_c1();
  auto raw = sample_sl2(1201, 8, 2, 2);
  UVector u{e_mat(0, 1) + e_mat(0, 0).scaled(rq("t2")), rq("t1")};
  UVector v{e_mat(1, 0) + e_mat(1, 1).scaled(rq("3")), rq("1/t1")};
  for (const GroupElement& raw_g : raw) {
    GroupElement g = apply_rep(natural_rep(), raw_g);
    CHECK(pairing(l_action(c, g, u), l_dual_action(c, g, v)) == pairing(u, v));
  }
}

TEST_CASE("duality spot value: paired images stay orthogonal") {
  DerivationCocycle c = nat_c1();
  GroupElement g = apply_rep(natural_rep(), sl2_elem_upper(rq("t1")) *
                                                sl2_elem_lower(rq("t2")));
  MatrixQ b = e_mat(1, 0);
  UVector u{MatrixQ(2, 2), rq("1")};
  UVector v{b, rq("0")};
  // pairing starts at tr(0 * B) + 1 * 0 = 0
  CHECK(pairing(u, v).is_zero());
  // oracle route: invariance means the images pair to
  // tr(c(g) gBg^{-1}) + tr(c(g^{-1}) B), which cancels by the inverse rule
  RatFuncQ first = trace_of_product(c(g), g.mat() * b * g.inv());
  RatFuncQ second = trace_of_product(c(g.inverse()), b);
  CHECK(first + second == rq("0"));
  CHECK(pairing(l_action(c, g, u), l_dual_action(c, g, v)).is_zero());
}

TEST_CASE("matrix forms of the actions are multiplicative") {
  DerivationCocycle c = nat_c1();
  auto raw = sample_sl2(1202, 6, 2, 2);
  for (std::size_t i = 0; i + 1 < raw.size(); i += 2) {
    GroupElement g = apply_rep(natural_rep(), raw[i]);
    GroupElement h = apply_rep(natural_rep(), raw[i + 1]);
    CHECK(l_matrix(c, g * h) == l_matrix(c, g) * l_matrix(c, h));
    CHECK(l_dual_matrix(c, g * h) == l_dual_matrix(c, g) * l_dual_matrix(c, h));
  }
  CHECK(l_matrix(c, GroupElement::identity(2, 2)).is_identity());
}

TEST_CASE("matrix form matches the action on coordinates") {
  DerivationCocycle c = nat_c1();
  GroupElement g = apply_rep(natural_rep(), sl2_elem_upper(rq("t2")));
  UVector u{e_mat(0, 0).scaled(rq("t1")) + e_mat(1, 0), rq("2")};
  UVector moved = l_action(c, g, u);
  MatrixQ lm = l_matrix(c, g);
  // flatten (A, a) row-major with a last
  std::vector<RatFuncQ> coords{u.A(0, 0), u.A(0, 1), u.A(1, 0), u.A(1, 1), u.a};
  std::vector<RatFuncQ> out(5, RatFuncQ::zero(2));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i] += lm(i, j) * coords[j];
  CHECK(out[0] == moved.A(0, 0));
  CHECK(out[1] == moved.A(0, 1));
  CHECK(out[2] == moved.A(1, 0));
  CHECK(out[3] == moved.A(1, 1));
  CHECK(out[4] == moved.a);
}

TEST_CASE("section operator on the middle block") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement g = apply_rep(natural_rep(), sl2_torus(rq("t1")) *
                                                sl2_elem_upper(rq("t2")));
  MatrixQ a = e_mat(0, 1).scaled(rq("t1")) + e_mat(1, 1);
  WVector w{rq("0"), a, rq("0")};
  WVector out = apply_w(make_p_g(c1, c2, g), w);
  // oracle componentwise: (tr(c2(g^{-1}) A), g A g^{-1}, 0)
  CHECK(out.b == trace_of_product(c2(g.inverse()), a));
  CHECK(out.A == g.mat() * a * g.inv());
  CHECK(out.a.is_zero());
  // flatten and unflatten round trip
  WVector back = unflatten_w(flatten_w(out), 2);
  CHECK(back.b == out.b);
  CHECK(back.A == out.A);
  CHECK(back.a == out.a);
}

TEST_CASE("kernel operators form a one-parameter group") {
  MatrixQ ps = make_p_t(rq("t1"), 2);
  MatrixQ pt = make_p_t(rq("1/t2"), 2);
  CHECK(ps * pt == make_p_t(rq("t1 + 1/t2"), 2));
  CHECK(ps * pt == pt * ps);
  CHECK(make_p_t(rq("0"), 2).is_identity());
  // explicit shape: identity plus the corner entry
  CHECK(ps(0, 5) == rq("t1"));
  FlagSpec flag{2};
  CHECK(preserves_flag(ps, flag));
  auto t = kernel_parameter(ps);
  REQUIRE(t.has_value());
  CHECK(*t == rq("t1"));
  CHECK(kernel_parameter(make_p_t(rq("0"), 2)).has_value());
}

TEST_CASE("kernel operators commute with sections") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  auto raw = sample_sl2(1203, 6, 2, 2);
  MatrixQ pt = make_p_t(rq("t1*t2"), 2);
  for (const GroupElement& raw_g : raw) {
    GroupElement g = apply_rep(natural_rep(), raw_g);
    MatrixQ pg = make_p_g(c1, c2, g);
    CHECK(pt * pg == pg * pt);
  }
}

TEST_CASE("sections are invertible flag-preserving operators") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement g = apply_rep(natural_rep(), sl2_elem_lower(rq("t1")) *
                                                sl2_torus(rq("t2")));
  MatrixQ pg = make_p_g(c1, c2, g);
  FlagSpec flag{2};
  CHECK(preserves_flag(pg, flag));
  auto dit = det_inv_trace(pg);
  CHECK(dit.det == rq("1"));
  REQUIRE(dit.inverse.has_value());
  CHECK((pg * *dit.inverse).is_identity());
}

TEST_CASE("membership: sections and their kernel translates pass") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  auto raw = sample_sl2(1204, 6, 2, 2);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    GroupElement g = apply_rep(natural_rep(), raw[i]);
    MatrixQ pg = make_p_g(c1, c2, g);
    CHECK(membership_check({g, pg}, c1, c2));
    MatrixQ shifted = pg * make_p_t(rq("t1"), 2);
    CHECK(membership_check({g, shifted}, c1, c2));
    CHECK(membership_check({g, make_p_g_corrected(c1, c2, g)}, c1, c2));
  }
  // identity with a bare kernel operator is a member
  GroupElement e = GroupElement::identity(2, 2);
  CHECK(membership_check({e, make_p_t(rq("t2"), 2)}, c1, c2));
}

TEST_CASE("membership rejects mismatches and broken flags") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement g = apply_rep(natural_rep(), sl2_elem_upper(rq("t1")));
  GroupElement h = apply_rep(natural_rep(), sl2_elem_lower(rq("t2")));
  MatrixQ pg = make_p_g(c1, c2, g);
  // right operator, wrong group element
  CHECK_FALSE(membership_check({h, pg}, c1, c2));
  // flag-preserving perturbation that is not in the image
  MatrixQ bumped = pg;
  bumped(0, 1) = bumped(0, 1) + rq("1");
  CHECK_FALSE(membership_check({g, bumped}, c1, c2));
  // flag-breaking perturbation
  MatrixQ broken = pg;
  broken(1, 0) = rq("1");
  CHECK_THROWS_AS(membership_check({g, broken}, c1, c2), NotInP);
  CHECK_THROWS_AS(pi_star(broken), NotInP);
}

TEST_CASE("restriction and quotient maps recover the two actions") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement g = apply_rep(natural_rep(), sl2_torus(rq("t1*t2")));
  MatrixQ pg = make_p_g(c1, c2, g);
  CHECK(pi_star(pg) == l_matrix(c1, g));
  CHECK(iota_star(pg) == l_dual_matrix(c2, g));
}

TEST_CASE("key identity on a fixed torus pair") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement g = rep_torus(natural_rep(), rq("t2"));
  GroupElement h = rep_torus(natural_rep(), rq("t1"));
  KeyIdentityResult res = key_identity_check(c1, c2, g, h);
  CHECK(res.holds);
  CHECK(res.raw_identity);
  CHECK(res.shift_bridge);
  CHECK(res.corrected_identity);
  CHECK(res.corrected_matches);
  // alpha(h, g) for fixed partials on this pair
  CHECK(res.alpha_value == rq("2/(t1*t2)"));
  CHECK(res.t == res.alpha_value);
  // the displayed sections happen to cancel the corner on this pair
  CHECK(res.t_raw.is_zero());
  // cross-check the bridge with the corner shift by hand
  RatFuncQ bridge = res.alpha_value + corner_shift(c1, c2, g) -
                    corner_shift(c1, c2, h * g) + corner_shift(c1, c2, h);
  CHECK(res.t_raw == bridge);
}

TEST_CASE("key identity on sampled pairs") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  AlphaRef alpha =
      make_alpha(c1.derivation(), c2.derivation(), natural_rep());
  auto raw = sample_sl2(1205, 10, 2, 2);
  for (std::size_t i = 0; i + 1 < raw.size(); i += 2) {
    GroupElement g = apply_rep(natural_rep(), raw[i]);
    GroupElement h = apply_rep(natural_rep(), raw[i + 1]);
    KeyIdentityResult res = key_identity_check(c1, c2, g, h);
    CHECK(res.holds);
    CHECK(res.t == (*alpha)(h, g));
    // the product relation itself, replayed on the corrected sections
    MatrixQ lhs = make_p_g_corrected(c1, c2, h) * make_p_g_corrected(c1, c2, g);
    MatrixQ rhs = make_p_g_corrected(c1, c2, h * g) * make_p_t(res.t, 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("kernel parameter characterizes the kernel") {
  DerivationCocycle c1 = nat_c1(), c2 = nat_c2();
  GroupElement e = GroupElement::identity(2, 2);
  // a section at the identity is the identity operator
  MatrixQ pe = make_p_g(c1, c2, e);
  auto t0 = kernel_parameter(pe);
  REQUIRE(t0.has_value());
  CHECK(t0->is_zero());
  CHECK(membership_check({e, pe}, c1, c2));
  // a section at g != e is not in the kernel
  GroupElement g = apply_rep(natural_rep(), sl2_elem_upper(rq("t1")));
  CHECK_FALSE(kernel_parameter(make_p_g(c1, c2, g)).has_value());
  // flag-preserving but off-pattern operators are excluded
  MatrixQ off = make_p_t(rq("t1"), 2);
  off(0, 1) = rq("1");
  CHECK_FALSE(kernel_parameter(off).has_value());
  CHECK_FALSE(membership_check({e, off}, c1, c2));
}
