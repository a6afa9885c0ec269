#include "diffext/char2.hpp"

#include "diffext/sampling.hpp"
#include "suite_harness.hpp"

namespace diffext {

namespace {

RatFunc2 rf2(const Poly2& num, const Poly2& den) { return RatFunc2(num, den); }

}  // namespace

void suite_char2(SuiteRun& s) {
  const int cap = s.cfg().degree_cap;
  const int nv = 1;
  const RatFunc2 t = RatFunc2::variable(nv, 0);
  const RatFunc2 one = RatFunc2::one(nv);

  s.check("rho_homomorphism", [&]() -> std::optional<std::string> {
    Rng rng = s.rng("rho_homomorphism");
    Char2CheckResult r = rho_homomorphism_check(rng.next(), s.scaled(100), cap, false);
    if (!r.ok) return "multiplicativity fails: " + r.witness;
    return std::nullopt;
  });

  s.check("rho_mutation_caught", [&]() -> std::optional<std::string> {
    Rng rng = s.rng("rho_mutation_caught");
    Char2CheckResult r = rho_homomorphism_check(rng.next(), s.scaled(100), cap, true);
    if (r.ok) return "perturbed map passed as multiplicative";
    if (r.witness.empty()) return "perturbed map failed without a witness";
    return std::nullopt;
  });

  s.check("rho_fixed_values", [&]() -> std::optional<std::string> {
    Matrix2 id4 = Matrix2::identity(4, nv);
    if (rho(make_sl2_f2t(Matrix2::identity(2, nv))) != id4) return "rho(1) != 1";

    Matrix2 want(4, nv);
    want(0, 0) = one;
    want(0, 2) = t;
    want(1, 1) = one;
    want(1, 2) = t * t;
    want(1, 3) = one;
    want(2, 2) = one;
    want(3, 3) = one;
    Matrix2 got = rho(sl2f2_upper(t));
    if (got != want) return "rho(upper(t)) = " + got.str();

    // the torus image splits as diag(1, u^2, u^-2, 1) times 1 + (u'/u) E_{0,3}
    Matrix2 wt(4, nv);
    wt(0, 0) = one;
    wt(0, 3) = t.inverse();
    wt(1, 1) = t * t;
    wt(2, 2) = (t * t).inverse();
    wt(3, 3) = one;
    Matrix2 gt = rho(sl2f2_torus(t));
    if (gt != wt) return "rho(torus(t)) = " + gt.str();
    return std::nullopt;
  });

  s.check("unipotent_structure", [&]() -> std::optional<std::string> {
    CentralUnipotent cu = central_unipotent(t);
    if (!cu.unipotent) return "(v-1)^4 != 0";
    if (!cu.square_is_identity) return "v^2 != 1";
    Matrix2 nil = cu.v - Matrix2::identity(4, nv);
    if (!(nil * nil).is_zero()) return "(v-1)^2 != 0";
    if (cu.v.is_identity()) return "v(t) collapsed to the identity";
    Matrix2 want = Matrix2::identity(4, nv);
    want(0, 3) = t.inverse();  // dlog of the parameter
    if (cu.v != want) return "v(t) = " + cu.v.str();
    CentralUnipotent sq = central_unipotent(t * t);
    if (!sq.v.is_identity()) return "v(t^2) != 1, the square should die";
    return std::nullopt;
  });

  s.check("central_unipotent_commutes", [&]() -> std::optional<std::string> {
    Rng rng = s.rng("central_unipotent_commutes");
    if (!central_unipotent_check(t, rng.next(), s.scaled(20), cap))
      return "v(t) fails to commute with the image";
    if (!central_unipotent_check(t * t + t, rng.next(), s.scaled(20), cap))
      return "v(t^2+t) fails to commute with the image";
    return std::nullopt;
  });

  {
    Rng rng = s.rng("square_class_invariance");
    const int count = s.scaled(20);
    std::vector<RatFunc2> us, wsq;
    for (int i = 0; i < count; ++i) {
      us.push_back(random_ratfunc_f2_nonzero(rng, nv, cap));
      wsq.push_back(random_ratfunc_f2_nonzero(rng, nv, cap));
    }
    s.sweep("square_class_invariance", count, [&](std::size_t i) -> std::optional<std::string> {
      const RatFunc2 &u = us[i], &w = wsq[i];
      Matrix2 vu = central_unipotent(u).v;
      Matrix2 vuw = central_unipotent(u * w * w).v;
      if (vu != vuw) return "v moved within a square class, u = " + u.str();
      Matrix2 vw = central_unipotent(w).v;
      Matrix2 vprod = central_unipotent(u * w).v;
      if (vu * vw != vprod) return "v(u)v(w) != v(uw)";
      return std::nullopt;
    });
  }

  {
    Rng rng = s.rng("frobenius_and_derivative");
    const int count = s.scaled(50);
    std::vector<RatFunc2> fs, gs;
    for (int i = 0; i < count; ++i) {
      fs.push_back(random_ratfunc_f2(rng, nv, cap));
      gs.push_back(random_ratfunc_f2(rng, nv, cap));
    }
    s.sweep("frobenius_and_derivative", count, [&](std::size_t i) -> std::optional<std::string> {
      const RatFunc2 &f = fs[i], &g = gs[i];
      if ((f + g) * (f + g) != f * f + g * g) return "(f+g)^2 != f^2 + g^2 in char 2";
      if (!(f * f).partial(0).is_zero()) return "d(f^2) != 0 in char 2";
      return std::nullopt;
    });
  }

  s.check("char2_display_form", [&]() -> std::optional<std::string> {
    Poly2 num = Poly2::variable(nv, 0) * Poly2::variable(nv, 0) + Poly2::from_long(nv, 1);
    Poly2 den = Poly2::variable(nv, 0);
    RatFunc2 f = rf2(num, den);
    if (f.str() != "(t1^2+1)/(t1)") return "display form drift: " + f.str();
    return std::nullopt;
  });
}

}  // namespace diffext
