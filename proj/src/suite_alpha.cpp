#include "diffext/extension.hpp"
#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

void suite_alpha(SuiteRun& s) {
  const QCtx ctx = q_context(s.cfg());
  const Representation& rep = *ctx.rep;
  const int cap = s.cfg().degree_cap;
  DerivationCocycle c1(ctx.d1, rep), c2(ctx.d2, rep);
  AlphaCocycle alpha(c1, c2);

  {
    Rng rng = s.rng("two_forms_agree");
    const int count = s.scaled(100);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    s.sweep("two_forms_agree", count, [&](std::size_t i) -> std::optional<std::string> {
      const GroupElement &g = gs[2 * i], &h = gs[2 * i + 1];
      RatFuncQ a = alpha(g, h), b = alpha.second_form(g, h);
      if (a != b) return "conjugated form " + a.str() + " vs inverse form " + b.str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("vanishes_with_identity");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), count, cap);
    GroupElement e = GroupElement::identity(rep.dim, kNumVars);
    s.sweep("vanishes_with_identity", count, [&](std::size_t i) -> std::optional<std::string> {
      if (!alpha(e, gs[i]).is_zero()) return "alpha(e, g) != 0";
      if (!alpha(gs[i], e).is_zero()) return "alpha(g, e) != 0";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("is_2_cocycle");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 3 * count, cap);
    std::vector<std::vector<GroupElement>> triples;
    for (int i = 0; i < count; ++i) triples.push_back({gs[3 * i], gs[3 * i + 1], gs[3 * i + 2]});
    s.check("is_2_cocycle", [&]() -> std::optional<std::string> {
      CocycleCheck r = is_cocycle(alpha.as_cochain(), triples);
      if (!r.ok) return "d(alpha) != 0, value " + mv_str(r.witness->value);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("torus_closed_form_generic");
    const int count = s.scaled(50);
    std::vector<RatFuncQ> ss, ts;
    for (int i = 0; i < count; ++i) {
      ss.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      ts.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    RatFuncQ wsum = RatFuncQ::from_long(kNumVars, weight_square_sum(rep));
    s.sweep("torus_closed_form_generic", count, [&](std::size_t i) -> std::optional<std::string> {
      const RatFuncQ &u = ss[i], &v = ts[i];
      RatFuncQ direct = alpha(rep_torus(rep, u), rep_torus(rep, v));
      RatFuncQ closed = torus_alpha_closed_form(rep, ctx.d1, ctx.d2, u, v);
      RatFuncQ inline_form = wsum * ctx.d1(u) * ctx.d2(v) / (u * v);
      if (direct != closed)
        return "alpha on torus " + direct.str() + " vs closed form " + closed.str();
      if (closed != inline_form) return "closed form helper drifted";
      return std::nullopt;
    });
  }

  s.check("torus_fixed_values", [&]() -> std::optional<std::string> {
    // pinned to the formal partials and both built-in representations
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    RatFuncQ t1 = parse_ratfunc("t1", kNumVars), t2 = parse_ratfunc("t2", kNumVars);

    AlphaCocycle an(DerivationCocycle(p1, natural_rep()), DerivationCocycle(p2, natural_rep()));
    RatFuncQ vn = an(rep_torus(natural_rep(), t1), rep_torus(natural_rep(), t2));
    RatFuncQ expect_n = parse_ratfunc("2/(t1*t2)", kNumVars);
    if (vn != expect_n) return "natural torus value " + vn.str() + ", expected " + expect_n.str();
    if (vn.str() != "(2)/(t1*t2)") return "display form drift: " + vn.str();

    AlphaCocycle aa(DerivationCocycle(p1, adjoint_rep()), DerivationCocycle(p2, adjoint_rep()));
    RatFuncQ va = aa(rep_torus(adjoint_rep(), t1), rep_torus(adjoint_rep(), t2));
    RatFuncQ expect_a = parse_ratfunc("8/(t1*t2)", kNumVars);
    if (va != expect_a) return "adjoint torus value " + va.str() + ", expected " + expect_a.str();
    return std::nullopt;
  });

  {
    Rng rng = s.rng("symmetric_when_equal_derivations");
    const int count = s.scaled(20);
    std::vector<RatFuncQ> ss, ts;
    for (int i = 0; i < count; ++i) {
      ss.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
      ts.push_back(random_ratfunc_q_nonzero(rng, kNumVars, cap));
    }
    AlphaCocycle sym(c1, c1);
    s.sweep("symmetric_when_equal_derivations", count,
            [&](std::size_t i) -> std::optional<std::string> {
              GroupElement a = rep_torus(rep, ss[i]), b = rep_torus(rep, ts[i]);
              if (sym(a, b) != sym(b, a)) return "alpha(d, d) not symmetric on the torus";
              return std::nullopt;
            });
  }

  {
    Rng rng = s.rng("additive_in_first_derivation");
    const int count = s.scaled(20);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    std::vector<RatFuncQ> sum_coeffs;
    for (int i = 0; i < kNumVars; ++i)
      sum_coeffs.push_back(ctx.d1.coeffs()[i] + ctx.d2.coeffs()[i]);
    DerivationCocycle csum(DerivationQ::from_coeffs(sum_coeffs), rep);
    AlphaCocycle a_sum(csum, c2), a_1(c1, c2), a_2(c2, c2);
    s.sweep("additive_in_first_derivation", count,
            [&](std::size_t i) -> std::optional<std::string> {
              const GroupElement &g = gs[2 * i], &h = gs[2 * i + 1];
              if (a_sum(g, h) != a_1(g, h) + a_2(g, h))
                return "alpha not additive in the first derivation";
              return std::nullopt;
            });
  }

  s.check("weight_square_sums", [&]() -> std::optional<std::string> {
    if (natural_rep().torus_weights != std::vector<int>{1, -1})
      return "natural weights drifted";
    if (adjoint_rep().torus_weights != std::vector<int>{2, 0, -2})
      return "adjoint weights drifted";
    if (weight_square_sum(natural_rep()) != 2) return "natural weight square sum != 2";
    if (weight_square_sum(adjoint_rep()) != 8) return "adjoint weight square sum != 8";
    return std::nullopt;
  });
}

}  // namespace diffext
