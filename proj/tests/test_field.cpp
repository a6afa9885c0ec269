#include "doctest.h"

#include <diffext/derivation.hpp>
#include <diffext/parse.hpp>
#include <diffext/rng.hpp>
#include <diffext/sampling.hpp>
#include <diffext/types.hpp>

using namespace diffext;

namespace {

RatFuncQ rq(const std::string& s) { return parse_ratfunc(s, 2); }

}  // namespace

TEST_CASE("polynomial arithmetic is canonical") {
  PolyQ t1 = PolyQ::variable(2, 0);
  PolyQ t2 = PolyQ::variable(2, 1);
  CHECK((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
  CHECK((t1 - t1).is_zero());
  CHECK((t1 * t2).str() == "t1*t2");
  CHECK((t1 * t1 + PolyQ::from_long(2, 1)).str() == "t1^2+1");
  CHECK((t2 - t1).str() == "-t1+t2");
  // grlex with t1 > t2: the t1 term leads
  CHECK((t1 + t2).leading_mono() == Mono{1, 0});
}

TEST_CASE("difference of squares divides exactly") {
  PolyQ t1 = PolyQ::variable(2, 0);
  PolyQ t2 = PolyQ::variable(2, 1);
  PolyQ num = t1 * t1 - t2 * t2;
  PolyQ den = t1 - t2;
  // oracle: expand the claimed quotient times the divisor first
  PolyQ claimed = t1 + t2;
  CHECK(claimed * den == num);
  CHECK(divexact(num, den) == claimed);
  RatFuncQ q = rq("(t1^2 - t2^2) / (t1 - t2)");
  CHECK(q == RatFuncQ(claimed));
  CHECK(q.str() == "(t1+t2)/(1)");
}

TEST_CASE("non-exact division throws") {
  PolyQ t1 = PolyQ::variable(2, 0);
  PolyQ t2 = PolyQ::variable(2, 1);
  CHECK_THROWS_AS(divexact(t1 * t1 + t2, t1 - t2), Error);
}

TEST_CASE("gcd and lcm structure") {
  Rng rng(case_rng(7, "unit/gcd"));
  for (int i = 0; i < 40; ++i) {
    PolyQ a = random_poly_q(rng, 2, 3, 3, true);
    PolyQ b = random_poly_q(rng, 2, 3, 3, true);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(divexact(a * b, b) == a);
    CHECK(gcd(a * b, b) == normalize_monic(b));
    PolyQ g = gcd(a, b);
    PolyQ l = poly_lcm(a, b);
    CHECK(normalize_monic(l * g) == normalize_monic(a * b));
  }
}

TEST_CASE("rational functions reduce to lowest terms with monic denominator") {
  PolyQ t1 = PolyQ::variable(2, 0);
  PolyQ t2 = PolyQ::variable(2, 1);
  RatFuncQ r(t1.scaled(Rat(2)), t2.scaled(Rat(4)));
  CHECK(r.str() == "(1/2*t1)/(t2)");
  RatFuncQ s = rq("1/t1") + rq("1/t2");
  CHECK(s.str() == "(t1+t2)/(t1*t2)");
  CHECK(rq("t1/t2") * rq("t2/t1") == RatFuncQ::one(2));
  CHECK((rq("t1") - rq("t1")).is_zero());
  CHECK(rq("2*t1*t2").str() == "(2*t1*t2)/(1)");
  CHECK(rq("1/(t1*t2)").str() == "(1)/(t1*t2)");
  CHECK(rq("(t1 + t2)^2") == rq("t1^2 + 2*t1*t2 + t2^2"));
}

TEST_CASE("field axioms on random elements") {
  Rng rng(case_rng(7, "unit/field-axioms"));
  for (int i = 0; i < 40; ++i) {
    RatFuncQ a = random_ratfunc_q(rng, 2, 2);
    RatFuncQ b = random_ratfunc_q(rng, 2, 2);
    RatFuncQ c = random_ratfunc_q(rng, 2, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFuncQ::one(2));
      CHECK(a / a == RatFuncQ::one(2));
    }
  }
  CHECK_THROWS_AS(rq("t1").inverse() * rq("1") / rq("0"), DivisionByZero);
}

TEST_CASE("partial derivatives, fixed values") {
  RatFuncQ f = rq("t1^2 * t2");
  CHECK(f.partial(0) == rq("2*t1*t2"));
  CHECK(f.partial(1) == rq("t1^2"));
  CHECK(rq("t1").partial(1).is_zero());
  CHECK(rq("1/t1").partial(0) == rq("-1/t1^2"));
  CHECK(rq("t1/t2").partial(1) == rq("-t1/t2^2"));
}

TEST_CASE("Leibniz and quotient rules") {
  // fixed pair first: d1(f*g) expanded by hand
  RatFuncQ f = rq("t1*t2");
  RatFuncQ g = rq("t1 + t2");
  CHECK((f * g).partial(0) == rq("2*t1*t2 + t2^2"));
  Rng rng(case_rng(7, "unit/leibniz"));
  for (int i = 0; i < 60; ++i) {
    RatFuncQ a = random_ratfunc_q(rng, 2, 2);
    RatFuncQ b = random_ratfunc_q(rng, 2, 2);
    int v = static_cast<int>(i % 2);
    CHECK((a * b).partial(v) == a.partial(v) * b + a * b.partial(v));
    CHECK((a + b).partial(v) == a.partial(v) + b.partial(v));
    if (!b.is_zero()) {
      CHECK((a / b).partial(v) ==
            (a.partial(v) * b - a * b.partial(v)) / (b * b));
    }
  }
}

TEST_CASE("partials commute") {
  Rng rng(case_rng(7, "unit/commute"));
  for (int i = 0; i < 60; ++i) {
    RatFuncQ a = random_ratfunc_q(rng, 2, 3);
    CHECK(a.partial(0).partial(1) == a.partial(1).partial(0));
  }
}

TEST_CASE("derivations: linear combinations of partials") {
  DerivationQ d = parse_derivation("t2,t1", 2);
  CHECK(d(rq("t1")) == rq("t2"));
  CHECK(d(rq("t1*t2")) == rq("t1^2 + t2^2"));
  // Euler-style derivation scales a monomial by its degree
  DerivationQ euler = parse_derivation("t1,t2", 2);
  CHECK(euler(rq("t1^3")) == rq("3*t1^3"));
  CHECK(euler(rq("t1*t2")) == rq("2*t1*t2"));
  // a 1-variable derivation cannot act on 2-variable elements
  DerivationQ one_var =
      DerivationQ::from_coeffs({parse_ratfunc("1", 1)});
  CHECK_THROWS_AS(one_var(rq("t1")), ArityMismatch);
  CHECK(derive(euler, rq("t2^2")) == rq("2*t2^2"));
}

TEST_CASE("derivation independence test") {
  DerivationQ p1 = DerivationQ::partial(2, 0);
  DerivationQ p2 = DerivationQ::partial(2, 1);
  CHECK(derivations_independent(p1, p2));
  CHECK_FALSE(derivations_independent(p1, p1));
  // d2 = t2 * d1 is a multiple, so dependent
  DerivationQ dep = DerivationQ::from_coeffs({rq("t2"), rq("0")});
  CHECK_FALSE(derivations_independent(p1, dep));
  // (p1 + p2, p1 - p2): the coefficient matrix has determinant -2
  DerivationQ s = DerivationQ::from_coeffs({rq("1"), rq("1")});
  DerivationQ t = DerivationQ::from_coeffs({rq("1"), rq("-1")});
  RatFuncQ det =
      s.coeffs()[0] * t.coeffs()[1] - s.coeffs()[1] * t.coeffs()[0];
  CHECK(det == rq("-2"));
  CHECK(derivations_independent(s, t));
  DerivationQ z = DerivationQ::from_coeffs({rq("0"), rq("0")});
  CHECK_FALSE(derivations_independent(z, p1));
}

TEST_CASE("parser accepts the expression grammar") {
  CHECK(rq("-t1^2") == RatFuncQ::zero(2) - rq("t1")*rq("t1"));
  CHECK(rq("  ( t1 + 1 ) * ( t1 - 1 )  ") == rq("t1^2 - 1"));
  CHECK(rq("3/2") == RatFuncQ::constant(2, Rat(3) / Rat(2)));
  CHECK(rq("t1^0") == RatFuncQ::one(2));
  CHECK_THROWS_AS(rq("t3"), ParseError);
  CHECK_THROWS_AS(rq("1 +"), ParseError);
  CHECK_THROWS_AS(rq("(t1"), ParseError);
  CHECK_THROWS_AS(rq("t1^65"), ParseError);
  CHECK_THROWS_AS(rq("t1^^2"), ParseError);
  CHECK_THROWS_AS(rq(""), ParseError);
  CHECK_THROWS_WITH_AS(rq("1/(t1 - t1)"), "at position 11: division by zero in expression",
                       ParseError);
  // parse errors carry a position
  try {
    rq("t1 + @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("derivation spec parser") {
  CHECK(parse_derivation("p1", 2).str() == DerivationQ::partial(2, 0).str());
  CHECK(parse_derivation("P2", 2)(rq("t2")) == rq("1"));
  CHECK(parse_derivation("1,0", 2)(rq("t1")) == rq("1"));
  CHECK(parse_derivation("t2,t1", 2)(rq("t2")) == rq("t1"));
  CHECK_THROWS_AS(parse_derivation("p3", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("1", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("1,2,3", 2), ParseError);
  CHECK_THROWS_AS(parse_derivation("", 2), ParseError);
}

TEST_CASE("characteristic two coefficients") {
  Poly2 t = Poly2::variable(1, 0);
  Poly2 one = Poly2::from_long(1, 1);
  CHECK((t + one) * (t + one) == t * t + one);
  CHECK((one + one).is_zero());
  CHECK((t * t).derivative(0).is_zero());
  CHECK((t * t * t).derivative(0) == t * t);
  CHECK(divexact(t * t + t, t) == t + one);
  RatFunc2 r(t * t + one, t);
  CHECK(r.str() == "(t1^2+1)/(t1)");
  RatFunc2 sq = RatFunc2(t) * RatFunc2(t);
  CHECK((RatFunc2(t) + RatFunc2(t)).is_zero());
  CHECK(sq.partial(0).is_zero());
}
