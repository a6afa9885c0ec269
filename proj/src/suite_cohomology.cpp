#include "diffext/cohomology.hpp"

#include <array>
#include <utility>

#include "diffext/extension.hpp"
#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

namespace {

// Scalar 1-cochain reading two fixed entries of the argument. Generic enough
// that its differential is nonzero unless the weights vanish.
Cochain entry_cochain(const CoeffModule& mod, long a, long b) {
  RatFuncQ wa = RatFuncQ::from_long(kNumVars, a);
  RatFuncQ wb = RatFuncQ::from_long(kNumVars, b);
  return Cochain(1, mod, [wa, wb](std::span<const GroupElement> g) -> MValue {
    return MValue::scalar(wa * g[0].mat()(0, 0) + wb * g[0].inv()(0, 1));
  });
}

// Matrix 1-cochain g -> w1 g + w2 g^{-1} into the conjugation module.
Cochain matrix_cochain(const CoeffModule& mod, long w1, long w2) {
  RatFuncQ a = RatFuncQ::from_long(kNumVars, w1);
  RatFuncQ b = RatFuncQ::from_long(kNumVars, w2);
  return Cochain(1, mod, [a, b](std::span<const GroupElement> g) -> MValue {
    return MValue::matrix(g[0].mat().scaled(a) + g[0].inv().scaled(b));
  });
}

}  // namespace

void suite_cohomology(SuiteRun& s) {
  const QCtx ctx = q_context(s.cfg());
  const Representation& rep = *ctx.rep;
  const int n = rep.dim;
  const int cap = s.cfg().degree_cap;
  const CoeffModule smod = scalar_module(kNumVars);
  const CoeffModule mmod = endconj_module(n, kNumVars);

  {
    Rng rng = s.rng("dd_zero_trivial_arity0");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    std::vector<RatFuncQ> ws;
    for (int i = 0; i < count; ++i) ws.push_back(random_ratfunc_q(rng, kNumVars, cap));
    s.sweep("dd_zero_trivial_arity0", count, [&](std::size_t i) -> std::optional<std::string> {
      RatFuncQ w = ws[i];
      Cochain f(0, smod, [w](std::span<const GroupElement>) { return MValue::scalar(w); });
      MValue v = differential(differential(f))({gs[2 * i], gs[2 * i + 1]});
      if (!mv_is_zero(v)) return "dd(constant) = " + mv_str(v);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("dd_zero_trivial_arity1");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 3 * count, cap);
    std::vector<std::pair<long, long>> ws;
    for (int i = 0; i < count; ++i) {
      long a = rng.range(-4, 4), b = rng.range(-4, 4);
      ws.emplace_back(a, b);
    }
    s.sweep("dd_zero_trivial_arity1", count, [&](std::size_t i) -> std::optional<std::string> {
      Cochain f = entry_cochain(smod, ws[i].first, ws[i].second);
      MValue v = differential(differential(f))({gs[3 * i], gs[3 * i + 1], gs[3 * i + 2]});
      if (!mv_is_zero(v)) return "dd(f) = " + mv_str(v);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("dd_zero_conjugation_arity0");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    std::vector<MatrixQ> ms;
    for (int i = 0; i < count; ++i) ms.push_back(random_matrix_q(rng, n, kNumVars, cap));
    s.sweep("dd_zero_conjugation_arity0", count, [&](std::size_t i) -> std::optional<std::string> {
      MatrixQ m = ms[i];
      Cochain f(0, mmod, [m](std::span<const GroupElement>) { return MValue::matrix(m); });
      MValue v = differential(differential(f))({gs[2 * i], gs[2 * i + 1]});
      if (!mv_is_zero(v)) return "dd(constant matrix) = " + mv_str(v);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("dd_zero_conjugation_arity1");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 3 * count, cap);
    std::vector<std::pair<long, long>> ws;
    for (int i = 0; i < count; ++i) {
      long a = rng.range(-4, 4), b = rng.range(-4, 4);
      ws.emplace_back(a, b);
    }
    s.sweep("dd_zero_conjugation_arity1", count, [&](std::size_t i) -> std::optional<std::string> {
      Cochain f = matrix_cochain(mmod, ws[i].first, ws[i].second);
      MValue v = differential(differential(f))({gs[3 * i], gs[3 * i + 1], gs[3 * i + 2]});
      if (!mv_is_zero(v)) return "dd(f) = " + mv_str(v);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("z1_homomorphism_characterization");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    std::vector<std::pair<long, long>> ws;
    for (int i = 0; i < count; ++i) {
      long a = rng.range(-4, 4), b = rng.range(-4, 4);
      ws.emplace_back(a, b);
    }
    s.sweep("z1_homomorphism_characterization", count,
            [&](std::size_t i) -> std::optional<std::string> {
              Cochain f = entry_cochain(smod, ws[i].first, ws[i].second);
              const GroupElement &g = gs[2 * i], &h = gs[2 * i + 1];
              bool vanishes = mv_is_zero(differential(f)({g, h}));
              bool additive = mv_equal(f({g * h}), mv_add(f({g}), f({h})));
              if (vanishes != additive) return "df = 0 and additivity disagree";
              return std::nullopt;
            });
  }

  {
    Rng rng = s.rng("trace_of_cocycle_is_homomorphism");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    DerivationCocycle c(ctx.d1, rep);
    Cochain f(1, smod, [c](std::span<const GroupElement> g) -> MValue {
      return MValue::scalar(c(g[0]).trace());
    });
    s.sweep("trace_of_cocycle_is_homomorphism", count,
            [&](std::size_t i) -> std::optional<std::string> {
              const GroupElement &g = gs[2 * i], &h = gs[2 * i + 1];
              if (!mv_is_zero(differential(f)({g, h}))) return "d(tr c) != 0";
              if (!mv_equal(f({g * h}), mv_add(f({g}), f({h})))) return "tr c not additive";
              return std::nullopt;
            });
  }

  {
    Rng rng = s.rng("cup_trivial_action_product");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    std::vector<std::array<long, 4>> ws;
    for (int i = 0; i < count; ++i)
      ws.push_back({rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4)});
    PairingFn mul = [](const MValue& a, const MValue& b) { return MValue::scalar(a.s() * b.s()); };
    s.sweep("cup_trivial_action_product", count, [&](std::size_t i) -> std::optional<std::string> {
      Cochain f = entry_cochain(smod, ws[i][0], ws[i][1]);
      Cochain h = entry_cochain(smod, ws[i][2], ws[i][3]);
      Cochain fh = cup(f, h, mul, smod);
      const GroupElement &g0 = gs[2 * i], &g1 = gs[2 * i + 1];
      MValue lhs = fh({g0, g1});
      MValue rhs = MValue::scalar(f({g0}).s() * h({g1}).s());
      if (!mv_equal(lhs, rhs)) return "cup into trivial module is not the product";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("cup_zero_absorbs");
    const int count = s.scaled(20);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    Cochain f = entry_cochain(smod, 2, -3);
    Cochain z(1, smod,
              [](std::span<const GroupElement>) { return MValue::scalar(RatFuncQ::zero(kNumVars)); });
    PairingFn mul = [](const MValue& a, const MValue& b) { return MValue::scalar(a.s() * b.s()); };
    s.sweep("cup_zero_absorbs", count, [&](std::size_t i) -> std::optional<std::string> {
      const GroupElement &g0 = gs[2 * i], &g1 = gs[2 * i + 1];
      if (!mv_is_zero(cup(f, z, mul, smod)({g0, g1}))) return "f cup 0 != 0";
      if (!mv_is_zero(cup(z, f, mul, smod)({g0, g1}))) return "0 cup f != 0";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("cup_of_cocycles_is_cocycle");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 3 * count, cap);
    DerivationCocycle c1(ctx.d1, rep), c2(ctx.d2, rep);
    Cochain cupc = cup(c1.as_cochain(), c2.as_cochain(), trace_pairing(), smod);
    std::vector<std::vector<GroupElement>> triples;
    for (int i = 0; i < count; ++i)
      triples.push_back({gs[3 * i], gs[3 * i + 1], gs[3 * i + 2]});
    s.check("cup_of_cocycles_is_cocycle", [&]() -> std::optional<std::string> {
      CocycleCheck r = is_cocycle(cupc, triples);
      if (!r.ok) return "d(c1 cup c2) != 0, value " + mv_str(r.witness->value);
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("cup_matches_alpha");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    DerivationCocycle c1(ctx.d1, rep), c2(ctx.d2, rep);
    AlphaCocycle alpha(c1, c2);
    Cochain cupc = cup(c1.as_cochain(), c2.as_cochain(), trace_pairing(), smod);
    s.sweep("cup_matches_alpha", count, [&](std::size_t i) -> std::optional<std::string> {
      const GroupElement &g = gs[2 * i], &h = gs[2 * i + 1];
      RatFuncQ via_cup = cupc({g, h}).s();
      RatFuncQ direct = alpha(g, h);
      if (via_cup != direct)
        return "cup value " + via_cup.str() + " vs direct " + direct.str();
      if (direct != alpha.second_form(g, h)) return "second form disagrees";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("trace_form_equivariance");
    const int count = s.scaled(50);
    auto gs = rep_samples(rep, rng.next(), count, cap);
    std::vector<MatrixQ> as, bs;
    for (int i = 0; i < count; ++i) {
      as.push_back(random_matrix_q(rng, n, kNumVars, cap));
      bs.push_back(random_matrix_q(rng, n, kNumVars, cap));
    }
    s.sweep("trace_form_equivariance", count, [&](std::size_t i) -> std::optional<std::string> {
      const GroupElement& g = gs[i];
      MatrixQ ca = g.mat() * as[i] * g.inv();
      MatrixQ cb = g.mat() * bs[i] * g.inv();
      if (trace_of_product(ca, cb) != trace_of_product(as[i], bs[i]))
        return "tr(AB) moved under conjugation";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("noncocycle_witness");
    const int count = s.scaled(20);
    auto gs = rep_samples(rep, rng.next(), 2 * count, cap);
    s.check("noncocycle_witness", [&]() -> std::optional<std::string> {
      Cochain f(1, smod, [](std::span<const GroupElement> g) -> MValue {
        return MValue::scalar(g[0].mat()(0, 0));
      });
      std::vector<std::vector<GroupElement>> pairs;
      // pinned pair with a visibly non-additive corner entry
      pairs.push_back({apply_rep(rep, sl2_elem_upper(parse_ratfunc("t1", kNumVars))),
                       apply_rep(rep, sl2_elem_lower(parse_ratfunc("t2", kNumVars)))});
      for (int i = 0; i < count; ++i) pairs.push_back({gs[2 * i], gs[2 * i + 1]});
      CocycleCheck r = is_cocycle(f, pairs);
      if (r.ok) return "corner-entry cochain passed as a cocycle";
      if (!r.witness) return "failure reported without a witness";
      if (mv_is_zero(r.witness->value)) return "witness value is zero";
      return std::nullopt;
    });
  }

  s.check("differential_fixed_examples", [&]() -> std::optional<std::string> {
    // these pin the bar formula on 2x2 inputs, independent of the
    // configured representation
    CoeffModule sm = scalar_module(kNumVars);
    Cochain f(1, sm, [](std::span<const GroupElement> g) -> MValue {
      return MValue::scalar(g[0].mat()(0, 0));
    });
    GroupElement u = sl2_elem_upper(parse_ratfunc("t1", kNumVars));
    GroupElement l = sl2_elem_lower(parse_ratfunc("t2", kNumVars));
    MValue df = differential(f)({u, l});
    RatFuncQ expect = parse_ratfunc("1 - t1*t2", kNumVars);
    if (!mv_equal(df, MValue::scalar(expect)))
      return "df(u(t1), l(t2)) = " + mv_str(df) + ", expected " + expect.str();

    CoeffModule mm = endconj_module(2, kNumVars);
    MatrixQ e12(2, kNumVars);
    e12(0, 1) = RatFuncQ::one(kNumVars);
    Cochain h(0, mm, [e12](std::span<const GroupElement>) { return MValue::matrix(e12); });
    GroupElement nu = sl2_torus(parse_ratfunc("t1", kNumVars));
    MValue dh = differential(h)({nu});
    MatrixQ want = e12.scaled(parse_ratfunc("t1^2 - 1", kNumVars));
    if (!mv_equal(dh, MValue::matrix(want))) return "dh(nu(t1)) = " + mv_str(dh);
    return std::nullopt;
  });
}

}  // namespace diffext
