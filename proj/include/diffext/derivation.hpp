#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffext/ratfunc.hpp"

namespace diffext {

// A derivation d = sum_i a_i * d/dt_i with rational-function coefficients.
// Acts on rational functions by linearity over the partials, so the Leibniz
// and quotient rules are inherited from them.
template <class C>
class Derivation {
 public:
  Derivation() = default;

  static Derivation partial(int nvars, int var) {
    std::vector<RatFunc<C>> cs;
    cs.reserve(nvars);
    for (int i = 0; i < nvars; ++i)
      cs.push_back(i == var ? RatFunc<C>::one(nvars) : RatFunc<C>::zero(nvars));
    if (var < 0 || var >= nvars) throw ArityMismatch("partial index out of range");
    return Derivation(std::move(cs));
  }

  static Derivation from_coeffs(std::vector<RatFunc<C>> cs) { return Derivation(std::move(cs)); }

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<RatFunc<C>>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  RatFunc<C> operator()(const RatFunc<C>& f) const {
    if (f.nvars() != nvars()) throw ArityMismatch("derivation applied across variable counts");
    RatFunc<C> out = RatFunc<C>::zero(nvars());
    for (int i = 0; i < nvars(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      out += coeffs_[i] * f.partial(i);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[i].str() + ")*d/dt" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }

 private:
  explicit Derivation(std::vector<RatFunc<C>> cs) : coeffs_(std::move(cs)) {
    int n = static_cast<int>(coeffs_.size());
    for (const auto& c : coeffs_)
      if (c.nvars() != n) throw ArityMismatch("derivation coefficient arity mismatch");
  }

  std::vector<RatFunc<C>> coeffs_;
};

template <class C>
RatFunc<C> derive(const Derivation<C>& d, const RatFunc<C>& f) {
  return d(f);
}

// True when no field scalar c satisfies d2 = c * d1 (and symmetrically):
// some 2x2 minor of the coefficient matrix is nonzero. Zero derivations are
// never counted as independent.
template <class C>
bool derivations_independent(const Derivation<C>& d1, const Derivation<C>& d2) {
  if (d1.nvars() != d2.nvars())
    throw ArityMismatch("independence check across variable counts");
  if (d1.is_zero() || d2.is_zero()) return false;
  int m = d1.nvars();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RatFunc<C> minor = d1.coeffs()[i] * d2.coeffs()[j] - d1.coeffs()[j] * d2.coeffs()[i];
      if (!minor.is_zero()) return true;
    }
  return false;
}

}  // namespace diffext
