#include "diffext/cohomology.hpp"

#include "diffext/parallel.hpp"

namespace diffext {

CoeffModule scalar_module(int nvars) { return CoeffModule{ModuleKind::ScalarTrivial, 1, nvars}; }

CoeffModule endconj_module(int dim, int nvars) {
  return CoeffModule{ModuleKind::EndConj, dim, nvars};
}

void validate_value(const CoeffModule& mod, const MValue& v) {
  if (mod.kind == ModuleKind::ScalarTrivial) {
    if (!v.is_scalar()) throw ModuleMismatch("expected a scalar value");
    if (v.s().nvars() != mod.nvars) throw ModuleMismatch("scalar value has wrong variable count");
    return;
  }
  if (v.is_scalar()) throw ModuleMismatch("expected a matrix value");
  if (v.m().size() != mod.dim) throw ModuleMismatch("matrix value has wrong size");
  if (v.m().nvars() != mod.nvars) throw ModuleMismatch("matrix value has wrong variable count");
}

MValue mv_add(const MValue& a, const MValue& b) {
  if (a.is_scalar() != b.is_scalar()) throw ModuleMismatch("adding values from different modules");
  if (a.is_scalar()) return MValue::scalar(a.s() + b.s());
  return MValue::matrix(a.m() + b.m());
}

MValue mv_sub(const MValue& a, const MValue& b) {
  if (a.is_scalar() != b.is_scalar())
    throw ModuleMismatch("subtracting values from different modules");
  if (a.is_scalar()) return MValue::scalar(a.s() - b.s());
  return MValue::matrix(a.m() - b.m());
}

MValue mv_neg(const MValue& a) {
  if (a.is_scalar()) return MValue::scalar(-a.s());
  return MValue::matrix(-a.m());
}

bool mv_is_zero(const MValue& a) { return a.is_scalar() ? a.s().is_zero() : a.m().is_zero(); }

bool mv_equal(const MValue& a, const MValue& b) {
  if (a.is_scalar() != b.is_scalar()) return false;
  return a.is_scalar() ? a.s() == b.s() : a.m() == b.m();
}

std::string mv_str(const MValue& a) { return a.is_scalar() ? a.s().str() : a.m().str(); }

MValue mv_zero(const CoeffModule& mod) {
  if (mod.kind == ModuleKind::ScalarTrivial) return MValue::scalar(RatFuncQ::zero(mod.nvars));
  return MValue::matrix(MatrixQ(mod.dim, mod.nvars));
}

MValue module_act(const CoeffModule& mod, const GroupElement& g, const MValue& v) {
  validate_value(mod, v);
  if (mod.kind == ModuleKind::ScalarTrivial) return v;
  if (g.dim() != mod.dim) throw ModuleMismatch("acting element has wrong size");
  return MValue::matrix(g.mat() * v.m() * g.inv());
}

Cochain::Cochain(int arity, CoeffModule module, Eval eval)
    : arity_(arity), module_(module), eval_(std::move(eval)) {
  if (arity < 0) throw ArityMismatch("negative cochain arity");
}

MValue Cochain::operator()(std::span<const GroupElement> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw ArityMismatch("cochain applied to wrong tuple length");
  MValue v = eval_(args);
  validate_value(module_, v);
  return v;
}

MValue Cochain::operator()(std::initializer_list<GroupElement> args) const {
  std::vector<GroupElement> v(args);
  return (*this)(std::span<const GroupElement>(v.data(), v.size()));
}

Cochain differential(const Cochain& f) {
  const int n = f.arity();
  CoeffModule mod = f.module();
  Cochain base = f;
  return Cochain(n + 1, mod, [base, mod, n](std::span<const GroupElement> g) -> MValue {
    std::vector<GroupElement> head(g.begin() + 1, g.end());
    MValue acc = module_act(mod, g[0], base(std::span<const GroupElement>(head)));
    std::vector<GroupElement> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      t.assign(g.begin(), g.end());
      t[static_cast<std::size_t>(i) - 1] = g[i - 1] * g[i];
      t.erase(t.begin() + i);
      MValue v = base(std::span<const GroupElement>(t));
      acc = (i % 2 == 1) ? mv_sub(acc, v) : mv_add(acc, v);
    }
    t.assign(g.begin(), g.end() - 1);
    MValue last = base(std::span<const GroupElement>(t));
    acc = ((n + 1) % 2 == 1) ? mv_sub(acc, last) : mv_add(acc, last);
    return acc;
  });
}

CocycleCheck is_cocycle(const Cochain& f, const std::vector<std::vector<GroupElement>>& samples) {
  Cochain df = differential(f);
  std::vector<std::optional<CocycleWitness>> slots(samples.size());
  std::vector<std::string> errors(samples.size());
  par::for_each_index(samples.size(), [&](std::size_t i) {
    try {
      MValue v = df(std::span<const GroupElement>(samples[i].data(), samples[i].size()));
      if (!mv_is_zero(v)) slots[i] = CocycleWitness{samples[i], v};
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!errors[i].empty()) throw Error(errors[i]);
    if (slots[i]) return CocycleCheck{false, std::move(slots[i])};
  }
  return CocycleCheck{};
}

Cochain cup(const Cochain& f, const Cochain& h, const PairingFn& pair, CoeffModule target) {
  const int p = f.arity(), q = h.arity();
  Cochain fa = f, ha = h;
  return Cochain(p + q, target, [fa, ha, pair, p, q](std::span<const GroupElement> g) -> MValue {
    MValue left = fa(g.subspan(0, static_cast<std::size_t>(p)));
    MValue right = ha(g.subspan(static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
    if (p > 0) {
      GroupElement prod = g[0];
      for (int i = 1; i < p; ++i) prod = prod * g[i];
      right = module_act(ha.module(), prod, right);
    }
    return pair(left, right);
  });
}

PairingFn trace_pairing() {
  return [](const MValue& a, const MValue& b) -> MValue {
    if (a.is_scalar() || b.is_scalar()) throw ModuleMismatch("trace pairing needs matrix values");
    return MValue::scalar(trace_of_product(a.m(), b.m()));
  };
}

}  // namespace diffext
