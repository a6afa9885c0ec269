#include "diffext/extension.hpp"

#include "diffext/rng.hpp"
#include "diffext/sampling.hpp"

namespace diffext {

DerivationCocycle::DerivationCocycle(DerivationQ d, const Representation& rep)
    : d_(std::move(d)), rep_(&rep) {}

MatrixQ DerivationCocycle::operator()(const GroupElement& g) const {
  if (g.dim() != rep_->dim) throw ShapeError("cocycle argument has wrong size");
  if (g.nvars() != d_.nvars()) throw ArityMismatch("cocycle argument has wrong variable count");
  return g.mat().derived(d_) * g.inv();
}

Cochain DerivationCocycle::as_cochain() const {
  DerivationCocycle self = *this;
  return Cochain(1, endconj_module(dim(), nvars()),
                 [self](std::span<const GroupElement> g) -> MValue {
                   return MValue::matrix(self(g[0]));
                 });
}

AlphaCocycle::AlphaCocycle(DerivationCocycle c1, DerivationCocycle c2)
    : c1_(std::move(c1)), c2_(std::move(c2)) {
  if (c1_.dim() != c2_.dim()) throw ShapeError("cocycle pair across representations");
  if (c1_.nvars() != c2_.nvars()) throw ArityMismatch("cocycle pair across variable counts");
}

RatFuncQ AlphaCocycle::operator()(const GroupElement& g, const GroupElement& h) const {
  MatrixQ conj = g.mat() * c2_(h) * g.inv();
  return trace_of_product(c1_(g), conj);
}

RatFuncQ AlphaCocycle::second_form(const GroupElement& g, const GroupElement& h) const {
  return -trace_of_product(c1_(g.inverse()), c2_(h));
}

Cochain AlphaCocycle::as_cochain() const {
  AlphaCocycle self = *this;
  return Cochain(2, scalar_module(nvars()), [self](std::span<const GroupElement> g) -> MValue {
    return MValue::scalar(self(g[0], g[1]));
  });
}

AlphaRef make_alpha(const DerivationQ& d1, const DerivationQ& d2, const Representation& rep) {
  return std::make_shared<const AlphaCocycle>(DerivationCocycle(d1, rep),
                                              DerivationCocycle(d2, rep));
}

ExtElement ext_element(AlphaRef alpha, GroupElement g, RatFuncQ x) {
  if (!alpha) throw IncompatibleExtension("extension element without a cocycle");
  if (g.dim() != alpha->dim()) throw ShapeError("extension element has wrong size");
  if (g.nvars() != alpha->nvars() || x.nvars() != alpha->nvars())
    throw ArityMismatch("extension element has wrong variable count");
  return ExtElement{std::move(g), std::move(x), std::move(alpha)};
}

ExtElement ext_identity(const AlphaRef& alpha) {
  if (!alpha) throw IncompatibleExtension("extension element without a cocycle");
  return ExtElement{GroupElement::identity(alpha->dim(), alpha->nvars()),
                    RatFuncQ::zero(alpha->nvars()), alpha};
}

namespace {
void require_compatible(const ExtElement& a, const ExtElement& b) {
  if (a.alpha.get() != b.alpha.get())
    throw IncompatibleExtension("combining elements of different extensions");
}
}  // namespace

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  require_compatible(a, b);
  return ExtElement{a.g * b.g, a.x + b.x + (*a.alpha)(a.g, b.g), a.alpha};
}

ExtElement ext_inverse(const ExtElement& a) {
  GroupElement gi = a.g.inverse();
  RatFuncQ x = -a.x - (*a.alpha)(a.g, gi);
  return ExtElement{std::move(gi), std::move(x), a.alpha};
}

ExtElement ext_commutator(const ExtElement& a, const ExtElement& b) {
  return ext_mul(ext_mul(a, b), ext_mul(ext_inverse(a), ext_inverse(b)));
}

bool ext_equal(const ExtElement& a, const ExtElement& b) {
  return a.alpha.get() == b.alpha.get() && a.g == b.g && a.x == b.x;
}

std::string ext_str(const ExtElement& a) { return "(" + a.g.str() + ", " + a.x.str() + ")"; }

RatFuncQ torus_alpha_closed_form(const Representation& rep, const DerivationQ& d1,
                                 const DerivationQ& d2, const RatFuncQ& s, const RatFuncQ& t) {
  if (s.is_zero() || t.is_zero()) throw DivisionByZero("torus parameter is zero");
  RatFuncQ w = RatFuncQ::from_long(s.nvars(), weight_square_sum(rep));
  return w * d1(s) * d2(t) / (s * t);
}

RatFuncQ torus_commutator_closed_form(const Representation& rep, const DerivationQ& d1,
                                      const DerivationQ& d2, const RatFuncQ& s,
                                      const RatFuncQ& t) {
  if (s.is_zero() || t.is_zero()) throw DivisionByZero("torus parameter is zero");
  RatFuncQ w = RatFuncQ::from_long(s.nvars(), weight_square_sum(rep));
  return w * (d1(s) * d2(t) - d1(t) * d2(s)) / (s * t);
}

std::optional<NonsplitWitness> nonsplit_witness(const Representation& rep, const DerivationQ& d1,
                                                const DerivationQ& d2, std::uint64_t seed) {
  if (weight_square_sum(rep) == 0) return std::nullopt;
  if (!derivations_independent(d1, d2)) return std::nullopt;
  const int nv = d1.nvars();
  auto try_pair = [&](const RatFuncQ& s, const RatFuncQ& t) -> std::optional<NonsplitWitness> {
    RatFuncQ v = torus_commutator_closed_form(rep, d1, d2, s, t);
    if (v.is_zero()) return std::nullopt;
    return NonsplitWitness{s, t, v};
  };
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (i == j) continue;
      if (auto w = try_pair(RatFuncQ::variable(nv, i), RatFuncQ::variable(nv, j))) return w;
    }
  Rng rng(seed);
  for (int k = 0; k < 20; ++k) {
    RatFuncQ s = random_ratfunc_q_nonzero(rng, nv, 2);
    RatFuncQ t = random_ratfunc_q_nonzero(rng, nv, 2);
    if (auto w = try_pair(s, t)) return w;
  }
  return std::nullopt;
}

PerfectnessSample perfectness_family(const AlphaRef& alpha, const RatFuncQ& s, const RatFuncQ& t) {
  const Representation& rep = alpha->c1().rep();
  ExtElement ls = ext_element(alpha, rep_torus(rep, s), RatFuncQ::zero(s.nvars()));
  ExtElement lt = ext_element(alpha, rep_torus(rep, t), RatFuncQ::zero(t.nvars()));
  PerfectnessSample out{ext_commutator(ls, lt),
                        torus_commutator_closed_form(rep, alpha->c1().derivation(),
                                                     alpha->c2().derivation(), s, t),
                        false};
  out.matches = out.commutator.g.is_identity() && out.commutator.x == out.expected_center;
  return out;
}

}  // namespace diffext
