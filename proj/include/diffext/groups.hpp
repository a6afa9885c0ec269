#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "diffext/types.hpp"

namespace diffext {

// Invertible matrix with its inverse threaded alongside, so group arithmetic
// never triggers a fresh matrix inversion.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(MatrixQ m) : m_(std::move(m)) { inv_ = m_.inverse(); }
  GroupElement(MatrixQ m, MatrixQ inv) : m_(std::move(m)), inv_(std::move(inv)) {}

  static GroupElement identity(int n, int nvars) {
    MatrixQ i = MatrixQ::identity(n, nvars);
    return GroupElement(i, i);
  }

  const MatrixQ& mat() const { return m_; }
  const MatrixQ& inv() const { return inv_; }
  int dim() const { return m_.size(); }
  int nvars() const { return m_.nvars(); }

  GroupElement inverse() const { return GroupElement(inv_, m_); }
  bool is_identity() const { return m_.is_identity(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_, b.inv_ * a.inv_);
  }

  bool operator==(const GroupElement& o) const { return m_ == o.m_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  std::string str() const { return m_.str(); }

 private:
  MatrixQ m_;
  MatrixQ inv_;
};

bool is_sl2(const MatrixQ& m);

// Standard generators of SL2 over the rational-function field, with inverses
// written down directly.
GroupElement sl2_elem_upper(const RatFuncQ& f);
GroupElement sl2_elem_lower(const RatFuncQ& f);
GroupElement sl2_torus(const RatFuncQ& u);  // u must be nonzero

// Finite-dimensional representation given by an explicit matrix formula. The
// evaluator receives both the 2x2 matrix and its inverse.
struct Representation {
  std::string name;
  int dim = 0;
  std::vector<int> torus_weights;
  std::function<MatrixQ(const MatrixQ&, const MatrixQ&)> eval;
};

const Representation& natural_rep();
const Representation& adjoint_rep();
const Representation& rep_by_name(const std::string& name);

long weight_square_sum(const Representation& rep);

// Image of g under rep, as a group element (inverse = image of g^{-1}).
GroupElement apply_rep(const Representation& rep, const GroupElement& g);

// Image of the torus element diag(u, u^{-1}).
GroupElement rep_torus(const Representation& rep, const RatFuncQ& u);

// Deterministic sample of SL2 elements: short products of the generators
// with random low-degree parameters.
std::vector<GroupElement> sample_sl2(std::uint64_t seed, int count, int degree_cap, int nvars);

}  // namespace diffext
