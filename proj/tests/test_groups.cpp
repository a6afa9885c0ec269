#include "doctest.h"

#include <diffext/groups.hpp>
#include <diffext/parse.hpp>

using namespace diffext;

namespace {

RatFuncQ rq(const std::string& s) { return parse_ratfunc(s, 2); }

}  // namespace

TEST_CASE("generators have determinant one") {
  GroupElement u = sl2_elem_upper(rq("t1^2"));
  GroupElement l = sl2_elem_lower(rq("1/t2"));
  GroupElement h = sl2_torus(rq("t1*t2"));
  for (const GroupElement& g : {u, l, h}) {
    CHECK(g.mat().det() == rq("1"));
    CHECK(is_sl2(g.mat()));
    CHECK((g.mat() * g.inv()).is_identity());
  }
  // products of generators stay in the group
  GroupElement p = u * l * h;
  CHECK(p.mat().det() == rq("1"));
  CHECK(is_sl2(p.mat()));
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(sl2_torus(rq("0")), NotInvertible);
}

TEST_CASE("is_sl2 rejects wrong shape and wrong determinant") {
  MatrixQ d = MatrixQ::identity(2, 2);
  d(0, 0) = rq("2");
  CHECK_FALSE(is_sl2(d));
  CHECK_FALSE(is_sl2(MatrixQ::identity(3, 2)));
  CHECK(is_sl2(MatrixQ::identity(2, 2)));
}

TEST_CASE("group element algebra") {
  GroupElement a = sl2_elem_upper(rq("t1"));
  GroupElement b = sl2_elem_lower(rq("t2"));
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  CHECK(GroupElement::identity(2, 2).is_identity());
  CHECK(a * GroupElement::identity(2, 2) == a);
  CHECK(a != b);
}

TEST_CASE("natural representation is the identity functor on matrices") {
  const Representation& rep = natural_rep();
  CHECK(rep.dim == 2);
  CHECK(rep.torus_weights == std::vector<int>{1, -1});
  GroupElement g = sl2_elem_upper(rq("t1"));
  CHECK(apply_rep(rep, g).mat() == g.mat());
}

TEST_CASE("adjoint image of a torus element is diagonal with weights 2,0,-2") {
  const Representation& rep = adjoint_rep();
  CHECK(rep.dim == 3);
  CHECK(rep.torus_weights == std::vector<int>{2, 0, -2});
  RatFuncQ u = rq("t1");
  GroupElement img = rep_torus(rep, u);
  // oracle: conjugate the basis (E12, H, E21) by diag(u, 1/u) directly
  MatrixQ h = sl2_torus(u).mat();
  MatrixQ hinv = sl2_torus(u).inv();
  MatrixQ e12(2, 2), e21(2, 2), hh(2, 2);
  e12(0, 1) = rq("1");
  e21(1, 0) = rq("1");
  hh(0, 0) = rq("1");
  hh(1, 1) = rq("-1");
  CHECK(h * e12 * hinv == e12.scaled(u * u));
  CHECK(h * hh * hinv == hh);
  CHECK(h * e21 * hinv == e21.scaled((u * u).inverse()));
  MatrixQ expect(3, 2);
  expect(0, 0) = u * u;
  expect(1, 1) = rq("1");
  expect(2, 2) = (u * u).inverse();
  CHECK(img.mat() == expect);
  // generic parameter too
  GroupElement img2 = rep_torus(rep, rq("t1*t2 + 1"));
  CHECK(img2.mat()(0, 0) == rq("(t1*t2 + 1)^2"));
}

TEST_CASE("adjoint representation is a homomorphism") {
  const Representation& rep = adjoint_rep();
  auto gs = sample_sl2(2024, 12, 2, 2);
  for (std::size_t i = 0; i + 1 < gs.size(); i += 2) {
    GroupElement a = apply_rep(rep, gs[i]);
    GroupElement b = apply_rep(rep, gs[i + 1]);
    GroupElement ab = apply_rep(rep, gs[i] * gs[i + 1]);
    CHECK(ab == a * b);
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("weight square sums") {
  CHECK(weight_square_sum(natural_rep()) == 2);   // 1 + 1
  CHECK(weight_square_sum(adjoint_rep()) == 8);   // 4 + 0 + 4
}

TEST_CASE("representation lookup by name") {
  CHECK(rep_by_name("natural").dim == 2);
  CHECK(rep_by_name("adjoint").dim == 3);
  CHECK_THROWS_AS(rep_by_name("spin"), Error);
}

TEST_CASE("sampling is deterministic and lands in the group") {
  auto a = sample_sl2(99, 10, 3, 2);
  auto b = sample_sl2(99, 10, 3, 2);
  auto c = sample_sl2(100, 10, 3, 2);
  REQUIRE(a.size() == 10);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(is_sl2(a[i].mat()));
    CHECK((a[i].mat() * a[i].inv()).is_identity());
    if (a[i] != b[i]) all_equal = false;
  }
  CHECK(all_equal);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c[i]) differs = true;
  CHECK(differs);
}
