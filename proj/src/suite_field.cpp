#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

namespace {

RatFuncQ rq(const std::string& text) { return parse_ratfunc(text, kNumVars); }

}  // namespace

void suite_field(SuiteRun& s) {
  const int cap = s.cfg().degree_cap;

  {
    Rng rng = s.rng("leibniz_product_rule");
    const int n = s.scaled(200);
    std::vector<DerivationQ> ds;
    std::vector<RatFuncQ> fs, gs;
    for (int i = 0; i < n; ++i) {
      ds.push_back(random_derivation_q(rng, kNumVars, cap));
      fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      gs.push_back(random_ratfunc_q(rng, kNumVars, cap));
    }
    s.sweep("leibniz_product_rule", n, [&](std::size_t i) -> std::optional<std::string> {
      const auto& d = ds[i];
      if (d(fs[i] * gs[i]) != d(fs[i]) * gs[i] + fs[i] * d(gs[i]))
        return "d(fg) != d(f)g + f d(g) for f = " + fs[i].str() + ", g = " + gs[i].str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("quotient_rule");
    const int n = s.scaled(100);
    std::vector<DerivationQ> ds;
    std::vector<RatFuncQ> fs, gs;
    for (int i = 0; i < n; ++i) {
      ds.push_back(random_derivation_q(rng, kNumVars, cap));
      fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      gs.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    s.sweep("quotient_rule", n, [&](std::size_t i) -> std::optional<std::string> {
      const auto& d = ds[i];
      RatFuncQ lhs = d(fs[i] / gs[i]);
      RatFuncQ rhs = (d(fs[i]) * gs[i] - fs[i] * d(gs[i])) / (gs[i] * gs[i]);
      if (lhs != rhs) return "quotient rule fails for f = " + fs[i].str() + ", g = " + gs[i].str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("partials_commute");
    const int n = s.scaled(200);
    std::vector<RatFuncQ> fs;
    for (int i = 0; i < n; ++i) fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
    s.sweep("partials_commute", n, [&](std::size_t i) -> std::optional<std::string> {
      if (fs[i].partial(0).partial(1) != fs[i].partial(1).partial(0))
        return "mixed partials differ for f = " + fs[i].str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("canonical_form_routes");
    const int n = s.scaled(200);
    std::vector<RatFuncQ> fs, gs;
    for (int i = 0; i < n; ++i) {
      fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      gs.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    auto canonical = [](const RatFuncQ& h) {
      if (h.is_zero()) return h.den().is_one();
      return gcd(h.num(), h.den()).is_one() && h.den().leading_coeff() == Rat(1);
    };
    s.sweep("canonical_form_routes", n, [&](std::size_t i) -> std::optional<std::string> {
      RatFuncQ prod = (fs[i] * gs[i]) / gs[i];
      if (prod != fs[i]) return "(f*g)/g != f for f = " + fs[i].str() + ", g = " + gs[i].str();
      RatFuncQ sum = (fs[i] + gs[i]) - gs[i];
      if (sum != fs[i]) return "(f+g)-g != f for f = " + fs[i].str() + ", g = " + gs[i].str();
      for (const RatFuncQ& h : {fs[i] + gs[i], fs[i] * gs[i], fs[i] / gs[i]})
        if (!canonical(h)) return "result not in lowest terms: " + h.str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("field_axioms");
    const int n = s.scaled(100);
    std::vector<RatFuncQ> fs, gs, hs;
    for (int i = 0; i < n; ++i) {
      fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      gs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      hs.push_back(random_ratfunc_q(rng, kNumVars, cap));
    }
    s.sweep("field_axioms", n, [&](std::size_t i) -> std::optional<std::string> {
      const RatFuncQ &f = fs[i], &g = gs[i], &h = hs[i];
      if ((f + g) + h != f + (g + h)) return "addition not associative";
      if ((f * g) * h != f * (g * h)) return "multiplication not associative";
      if (f + g != g + f) return "addition not commutative";
      if (f * g != g * f) return "multiplication not commutative";
      if (f * (g + h) != f * g + f * h) return "distributivity fails";
      if (!(f + (-f)).is_zero()) return "additive inverse fails";
      if (!f.is_zero() && !(f * f.inverse()).is_one()) return "multiplicative inverse fails";
      return std::nullopt;
    });
  }

  s.check("arith_fixed_examples", [&]() -> std::optional<std::string> {
    RatFuncQ t1 = rq("t1"), t2 = rq("t2");
    if (!((t1 / t2) * (t2 / t1)).is_one()) return "(t1/t2)(t2/t1) != 1";
    if (!(t1 + (-t1)).is_zero()) return "t1 - t1 != 0";
    RatFuncQ diff_sq = rq("t1^2 - t2^2");
    RatFuncQ sum = t1 + t2, diff = t1 - t2;
    if (sum * diff != diff_sq) return "(t1+t2)(t1-t2) != t1^2 - t2^2";
    if (diff_sq / diff != sum) return "(t1^2-t2^2)/(t1-t2) != t1+t2";
    if (rq("1/(t1*t2)").str() != "(1)/(t1*t2)") return "display form drift: " + rq("1/(t1*t2)").str();
    if (rq("2*t1*t2").str() != "(2*t1*t2)/(1)") return "display form drift: " + rq("2*t1*t2").str();
    return std::nullopt;
  });

  s.check("derive_fixed_examples", [&]() -> std::optional<std::string> {
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    if (p1(rq("t1^2*t2")) != rq("2*t1*t2")) return "d1(t1^2 t2) != 2 t1 t2";
    if (!p2(rq("t1")).is_zero()) return "d2(t1) != 0";
    if (p1(rq("1/t1")) != rq("-1/t1^2")) return "d1(1/t1) != -1/t1^2";
    DerivationQ e = DerivationQ::from_coeffs({rq("t1"), rq("t2")});
    if (e(rq("t1*t2")) != rq("2*t1*t2")) return "euler derivation misses t1 t2";
    return std::nullopt;
  });

  {
    Rng rng = s.rng("derivation_linearity");
    const int n = s.scaled(100);
    std::vector<DerivationQ> ds;
    std::vector<RatFuncQ> fs, gs;
    std::vector<long> ks;
    for (int i = 0; i < n; ++i) {
      ds.push_back(random_derivation_q(rng, kNumVars, cap));
      fs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      gs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      ks.push_back(rng.range(-5, 5));
    }
    s.sweep("derivation_linearity", n, [&](std::size_t i) -> std::optional<std::string> {
      const auto& d = ds[i];
      if (d(fs[i] + gs[i]) != d(fs[i]) + d(gs[i])) return "d(f+g) != d(f) + d(g)";
      RatFuncQ k = RatFuncQ::from_long(kNumVars, ks[i]);
      if (d(k * fs[i]) != k * d(fs[i])) return "d(kf) != k d(f)";
      if (!d(k).is_zero()) return "d(constant) != 0";
      return std::nullopt;
    });
  }

  s.check("derivations_independent_examples", [&]() -> std::optional<std::string> {
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    if (!derivations_independent(p1, p2)) return "d/dt1, d/dt2 reported dependent";
    DerivationQ scaled = DerivationQ::from_coeffs({rq("t2"), rq("0")});
    if (derivations_independent(p1, scaled)) return "d/dt1, t2 d/dt1 reported independent";
    DerivationQ sum = DerivationQ::from_coeffs({rq("1"), rq("1")});
    DerivationQ diff = DerivationQ::from_coeffs({rq("1"), rq("-1")});
    // coefficient determinant 1*(-1) - 1*1 = -2, nonzero
    RatFuncQ det = sum.coeffs()[0] * diff.coeffs()[1] - sum.coeffs()[1] * diff.coeffs()[0];
    if (det != rq("-2")) return "2x2 coefficient determinant drifted: " + det.str();
    if (!derivations_independent(sum, diff)) return "d1+d2, d1-d2 reported dependent";
    DerivationQ zero = DerivationQ::from_coeffs({rq("0"), rq("0")});
    if (derivations_independent(zero, p1)) return "zero derivation reported independent";
    return std::nullopt;
  });

  s.check("gf2_basics", [&]() -> std::optional<std::string> {
    const int nv = 1;
    RatFunc2 t = RatFunc2::variable(nv, 0);
    RatFunc2 one = RatFunc2::one(nv);
    if ((t + one) * (t + one) != t * t + one) return "(t+1)^2 != t^2 + 1 in char 2";
    if (!(one + one).is_zero()) return "1 + 1 != 0 in char 2";
    if (!(t * t).partial(0).is_zero()) return "d(t^2) != 0 in char 2";
    if ((t * t * t).partial(0) != t * t) return "d(t^3) != t^2 in char 2";
    if ((t * t + t) / t != t + one) return "(t^2+t)/t != t+1 in char 2";
    return std::nullopt;
  });
}

}  // namespace diffext
