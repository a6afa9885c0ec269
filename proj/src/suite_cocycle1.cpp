#include "diffext/extension.hpp"
#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

namespace {

// c(gh) = c(g) + g c(h) g^{-1}, checked entrywise.
std::optional<std::string> cocycle_identity_at(const DerivationCocycle& c, const GroupElement& g,
                                               const GroupElement& h) {
  MatrixQ lhs = c(g * h);
  MatrixQ rhs = c(g) + g.mat() * c(h) * g.inv();
  if (lhs != rhs) return "c(gh) != c(g) + g c(h) g^-1 at g = " + g.str() + ", h = " + h.str();
  return std::nullopt;
}

}  // namespace

void suite_cocycle1(SuiteRun& s) {
  const QCtx ctx = q_context(s.cfg());
  const int cap = s.cfg().degree_cap;

  for (const Representation* rep : {&natural_rep(), &adjoint_rep()}) {
    const std::string name = "cocycle_identity_" + rep->name;
    Rng rng = s.rng(name);
    const int count = s.scaled(100);
    auto gs = rep_samples(*rep, rng.next(), 2 * count, cap);
    DerivationCocycle c(ctx.d1, *rep);
    s.sweep(name, count, [&](std::size_t i) -> std::optional<std::string> {
      return cocycle_identity_at(c, gs[2 * i], gs[2 * i + 1]);
    });
  }

  s.check("cocycle_at_identity", [&]() -> std::optional<std::string> {
    for (const Representation* rep : {&natural_rep(), &adjoint_rep()})
      for (const DerivationQ* d : {&ctx.d1, &ctx.d2}) {
        DerivationCocycle c(*d, *rep);
        if (!c(GroupElement::identity(rep->dim, kNumVars)).is_zero())
          return "c(e) != 0 in the " + rep->name + " representation";
      }
    return std::nullopt;
  });

  {
    Rng rng = s.rng("cocycle_inverse_relation");
    const int count = s.scaled(50);
    auto gs = rep_samples(*ctx.rep, rng.next(), count, cap);
    DerivationCocycle c(ctx.d1, *ctx.rep);
    s.sweep("cocycle_inverse_relation", count, [&](std::size_t i) -> std::optional<std::string> {
      const GroupElement& g = gs[i];
      MatrixQ lhs = c(g.inverse());
      MatrixQ rhs = -(g.inv() * c(g) * g.mat());
      if (lhs != rhs) return "c(g^-1) != -g^-1 c(g) g at g = " + g.str();
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("is_cocycle_via_bar");
    const int count = s.scaled(100);
    auto gs = rep_samples(*ctx.rep, rng.next(), 2 * count, cap);
    DerivationCocycle c(ctx.d1, *ctx.rep);
    std::vector<std::vector<GroupElement>> pairs;
    for (int i = 0; i < count; ++i) pairs.push_back({gs[2 * i], gs[2 * i + 1]});
    s.check("is_cocycle_via_bar", [&]() -> std::optional<std::string> {
      CocycleCheck r = is_cocycle(c.as_cochain(), pairs);
      if (!r.ok) return "bar differential of c is nonzero, value " + mv_str(r.witness->value);
      return std::nullopt;
    });
  }

  s.check("cocycle_fixed_values", [&]() -> std::optional<std::string> {
    // pinned to the formal partials, independent of the configured derivations
    DerivationQ p1 = DerivationQ::partial(kNumVars, 0);
    DerivationQ p2 = DerivationQ::partial(kNumVars, 1);
    GroupElement nu = sl2_torus(parse_ratfunc("t1", kNumVars));

    DerivationCocycle cn(p1, natural_rep());
    MatrixQ want(2, kNumVars);
    want(0, 0) = parse_ratfunc("1/t1", kNumVars);
    want(1, 1) = parse_ratfunc("-1/t1", kNumVars);
    MatrixQ got = cn(nu);
    if (got != want) return "natural value at nu(t1): " + got.str();

    DerivationCocycle ca(p1, adjoint_rep());
    MatrixQ wa(3, kNumVars);
    wa(0, 0) = parse_ratfunc("2/t1", kNumVars);
    wa(2, 2) = parse_ratfunc("-2/t1", kNumVars);
    MatrixQ ga = ca(apply_rep(adjoint_rep(), nu));
    if (ga != wa) return "adjoint value at nu(t1): " + ga.str();

    DerivationCocycle cz(p2, natural_rep());
    if (!cz(nu).is_zero()) return "derivation missing t1 produced a nonzero value";
    return std::nullopt;
  });
}

}  // namespace diffext
