#include "diffext/extension.hpp"
#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

namespace {

ExtElement torus_lift(const AlphaRef& alpha, const Representation& rep, const RatFuncQ& u,
                      const RatFuncQ& x) {
  return ext_element(alpha, rep_torus(rep, u), x);
}

}  // namespace

void suite_commutator(SuiteRun& s) {
  const QCtx ctx = q_context(s.cfg());
  const Representation& rep = *ctx.rep;
  const int cap = s.cfg().degree_cap;
  AlphaRef alpha = make_alpha(ctx.d1, ctx.d2, rep);
  const bool independent = derivations_independent(ctx.d1, ctx.d2);

  {
    Rng rng = s.rng("torus_commutator_closed_form");
    const int count = s.scaled(50);
    std::vector<RatFuncQ> ss, ts, xs, ys;
    for (int i = 0; i < count; ++i) {
      ss.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      ts.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      xs.push_back(random_ratfunc_q(rng, kNumVars, cap));
      ys.push_back(random_ratfunc_q(rng, kNumVars, cap));
    }
    s.sweep("torus_commutator_closed_form", count,
            [&](std::size_t i) -> std::optional<std::string> {
              // arbitrary central coordinates: the commutator must kill them
              ExtElement a = torus_lift(alpha, rep, ss[i], xs[i]);
              ExtElement b = torus_lift(alpha, rep, ts[i], ys[i]);
              ExtElement c = ext_commutator(a, b);
              if (!c.g.is_identity()) return "torus commutator left the center";
              RatFuncQ want = torus_commutator_closed_form(rep, ctx.d1, ctx.d2, ss[i], ts[i]);
              if (c.x != want)
                return "central coordinate " + c.x.str() + ", closed form " + want.str();
              return std::nullopt;
            });
  }

  s.check("commutator_fixed_values", [&]() -> std::optional<std::string> {
    // pinned to the formal partials
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    RatFuncQ t1 = parse_ratfunc("t1", kNumVars), t2 = parse_ratfunc("t2", kNumVars);
    RatFuncQ zero = RatFuncQ::zero(kNumVars);
    for (const Representation* r : {&natural_rep(), &adjoint_rep()}) {
      AlphaRef a = make_alpha(p1, p2, *r);
      ExtElement c = ext_commutator(torus_lift(a, *r, t1, zero), torus_lift(a, *r, t2, zero));
      std::string num = r->name == "natural" ? "2" : "8";
      RatFuncQ want = parse_ratfunc(num + "/(t1*t2)", kNumVars);
      if (!c.g.is_identity()) return r->name + " commutator not central";
      if (c.x != want) return r->name + " central value " + c.x.str();
      if (c.x.is_zero()) return r->name + " commutator collapsed to the identity";
    }
    return std::nullopt;
  });

  if (independent) {
    s.check("nonsplit_witness_present", [&]() -> std::optional<std::string> {
      Rng rng = s.rng("nonsplit_witness_present");
      auto w = nonsplit_witness(rep, ctx.d1, ctx.d2, rng.next());
      if (!w) return "independent derivations but no witness found";
      if (w->value.is_zero()) return "witness value is zero";
      if (w->value != torus_commutator_closed_form(rep, ctx.d1, ctx.d2, w->s, w->t))
        return "witness value disagrees with the closed form";
      ExtElement c = ext_commutator(torus_lift(alpha, rep, w->s, RatFuncQ::zero(kNumVars)),
                                    torus_lift(alpha, rep, w->t, RatFuncQ::zero(kNumVars)));
      if (!c.g.is_identity() || c.x != w->value)
        return "witness does not reproduce through the group law";
      return std::nullopt;
    });
  } else {
    s.check("degenerate_derivations_commutators_vanish", [&]() -> std::optional<std::string> {
      Rng rng = s.rng("degenerate_derivations_commutators_vanish");
      const int count = s.scaled(50);
      for (int i = 0; i < count; ++i) {
        RatFuncQ u = random_ratfunc_q_nonzero(rng, kNumVars, cap);
        RatFuncQ v = random_ratfunc_q_nonzero(rng, kNumVars, cap);
        ExtElement c = ext_commutator(torus_lift(alpha, rep, u, RatFuncQ::zero(kNumVars)),
                                      torus_lift(alpha, rep, v, RatFuncQ::zero(kNumVars)));
        if (!c.g.is_identity() || !c.x.is_zero())
          return "dependent derivations but commutator " + ext_str(c);
      }
      return std::nullopt;
    });
    s.check("nonsplit_witness_absent", [&]() -> std::optional<std::string> {
      Rng rng = s.rng("nonsplit_witness_absent");
      if (nonsplit_witness(rep, ctx.d1, ctx.d2, rng.next()))
        return "witness produced for dependent derivations";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("dependent_multiplier_degenerates");
    const int count = s.scaled(20);
    std::vector<RatFuncQ> fs, us, vs;
    for (int i = 0; i < count; ++i) {
      fs.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      us.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      vs.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    const std::uint64_t wseed = rng.next();
    s.check("dependent_multiplier_degenerates", [&]() -> std::optional<std::string> {
      for (int i = 0; i < count; ++i) {
        std::vector<RatFuncQ> coeffs;
        for (int k = 0; k < kNumVars; ++k) coeffs.push_back(fs[i] * ctx.d1.coeffs()[k]);
        DerivationQ dprop = DerivationQ::from_coeffs(coeffs);
        if (derivations_independent(ctx.d1, dprop))
          return "f*d reported independent of d, f = " + fs[i].str();
        AlphaRef adeg = make_alpha(ctx.d1, dprop, rep);
        ExtElement c = ext_commutator(torus_lift(adeg, rep, us[i], RatFuncQ::zero(kNumVars)),
                                      torus_lift(adeg, rep, vs[i], RatFuncQ::zero(kNumVars)));
        if (!c.g.is_identity() || !c.x.is_zero())
          return "proportional pair gave commutator " + ext_str(c);
        if (nonsplit_witness(rep, ctx.d1, dprop, wseed + static_cast<std::uint64_t>(i)))
          return "witness produced for a proportional pair";
      }
      return std::nullopt;
    });
  }

  s.check("perfectness_family_examples", [&]() -> std::optional<std::string> {
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    AlphaRef a = make_alpha(p1, p2, natural_rep());
    RatFuncQ t1 = parse_ratfunc("t1", kNumVars), t2 = parse_ratfunc("t2", kNumVars);

    PerfectnessSample ps = perfectness_family(a, t1, t2);
    if (!ps.matches) return "family member (t1, t2) does not match";
    if (ps.expected_center != parse_ratfunc("2/(t1*t2)", kNumVars))
      return "(t1, t2) center " + ps.expected_center.str();

    ps = perfectness_family(a, t1, t1);
    if (!ps.matches) return "family member (t1, t1) does not match";
    if (!ps.expected_center.is_zero()) return "(t1, t1) center nonzero";

    ps = perfectness_family(a, t1 * t1, t2);
    if (!ps.matches) return "family member (t1^2, t2) does not match";
    if (ps.expected_center != parse_ratfunc("4/(t1*t2)", kNumVars))
      return "(t1^2, t2) center " + ps.expected_center.str();
    return std::nullopt;
  });

  {
    Rng rng = s.rng("perfectness_family_random");
    const int count = s.scaled(50);
    std::vector<RatFuncQ> ss, ts;
    for (int i = 0; i < count; ++i) {
      ss.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      ts.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    s.sweep("perfectness_family_random", count, [&](std::size_t i) -> std::optional<std::string> {
      PerfectnessSample ps = perfectness_family(alpha, ss[i], ts[i]);
      if (!ps.matches)
        return "commutator " + ext_str(ps.commutator) + " vs center " +
               ps.expected_center.str();
      return std::nullopt;
    });
  }
}

}  // namespace diffext
