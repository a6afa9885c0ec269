#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "diffext/groups.hpp"
#include "diffext/types.hpp"

namespace diffext {

// Coefficient modules for group cochains: the trivial scalar module, and
// square matrices acted on by conjugation.
enum class ModuleKind { ScalarTrivial, EndConj };

struct CoeffModule {
  ModuleKind kind = ModuleKind::ScalarTrivial;
  int dim = 1;  // matrix size for EndConj, 1 for scalars
  int nvars = 0;
  bool operator==(const CoeffModule&) const = default;
};

CoeffModule scalar_module(int nvars);
CoeffModule endconj_module(int dim, int nvars);

// A value in a coefficient module.
class MValue {
 public:
  static MValue scalar(RatFuncQ s) { return MValue(std::move(s)); }
  static MValue matrix(MatrixQ m) { return MValue(std::move(m)); }

  bool is_scalar() const { return std::holds_alternative<RatFuncQ>(v_); }
  const RatFuncQ& s() const { return std::get<RatFuncQ>(v_); }
  const MatrixQ& m() const { return std::get<MatrixQ>(v_); }

 private:
  explicit MValue(RatFuncQ s) : v_(std::move(s)) {}
  explicit MValue(MatrixQ m) : v_(std::move(m)) {}
  std::variant<RatFuncQ, MatrixQ> v_;
};

void validate_value(const CoeffModule& mod, const MValue& v);
MValue mv_add(const MValue& a, const MValue& b);
MValue mv_sub(const MValue& a, const MValue& b);
MValue mv_neg(const MValue& a);
bool mv_is_zero(const MValue& a);
bool mv_equal(const MValue& a, const MValue& b);
std::string mv_str(const MValue& a);
MValue mv_zero(const CoeffModule& mod);

// Left action of g on a module value.
MValue module_act(const CoeffModule& mod, const GroupElement& g, const MValue& v);

// Group cochain of fixed arity with values in a coefficient module.
class Cochain {
 public:
  using Eval = std::function<MValue(std::span<const GroupElement>)>;

  Cochain(int arity, CoeffModule module, Eval eval);

  int arity() const { return arity_; }
  const CoeffModule& module() const { return module_; }

  MValue operator()(std::span<const GroupElement> args) const;
  MValue operator()(std::initializer_list<GroupElement> args) const;

 private:
  int arity_;
  CoeffModule module_;
  Eval eval_;
};

// Bar-resolution differential: for an n-cochain f,
//   (df)(g0..gn) = g0 . f(g1..gn)
//                + sum_{i=1..n} (-1)^i f(.., g_{i-1} g_i, ..)
//                + (-1)^{n+1} f(g0..g_{n-1}).
Cochain differential(const Cochain& f);

struct CocycleWitness {
  std::vector<GroupElement> tuple;
  MValue value;
};

struct CocycleCheck {
  bool ok = true;
  std::optional<CocycleWitness> witness;
};

// Evaluate df on each sample tuple (arity + 1 elements each); the first
// nonzero value, in input order, becomes the witness.
CocycleCheck is_cocycle(const Cochain& f, const std::vector<std::vector<GroupElement>>& samples);

// Cup product against an explicit pairing of coefficient modules:
//   (f cup h)(g1..g_{p+q}) = pair(f(g1..gp), (g1...gp) . h(g_{p+1}..g_{p+q})).
using PairingFn = std::function<MValue(const MValue&, const MValue&)>;
Cochain cup(const Cochain& f, const Cochain& h, const PairingFn& pair, CoeffModule target);

// (A, B) -> tr(A*B), the conjugation-invariant pairing on matrix modules.
PairingFn trace_pairing();

}  // namespace diffext
