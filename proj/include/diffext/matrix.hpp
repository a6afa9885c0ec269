#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffext/derivation.hpp"
#include "diffext/ratfunc.hpp"

namespace diffext {

// Dense square matrix over the rational-function field.
template <class C>
class Matrix {
 public:
  using Scalar = RatFunc<C>;

  Matrix() : n_(0), nvars_(0) {}
  Matrix(int n, int nvars)
      : n_(n), nvars_(nvars), e_(static_cast<std::size_t>(n) * n, Scalar::zero(nvars)) {
    if (n < 0) throw ShapeError("negative matrix size");
  }

  static Matrix identity(int n, int nvars) {
    Matrix m(n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(nvars);
    return m;
  }

  int size() const { return n_; }
  int nvars() const { return nvars_; }

  Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  Scalar& operator()(int i, int j) { return at(i, j); }
  const Scalar& operator()(int i, int j) const { return at(i, j); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  Matrix operator-() const {
    Matrix r(n_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same(b);
    Matrix r(a.n_, a.nvars_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same(b);
    Matrix r(a.n_, a.nvars_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same(b);
    Matrix r(a.n_, a.nvars_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r(n_, nvars_);
    if (c.is_zero()) return r;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
  }

  Scalar trace() const {
    Scalar t = Scalar::zero(nvars_);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  // Entry-wise application of a derivation.
  Matrix derived(const Derivation<C>& d) const {
    Matrix r(n_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = d(e_[k]);
    return r;
  }

  // Fraction-free determinant: clear denominators per row, run Bareiss on the
  // polynomial matrix, divide the cleared factors back out at the end.
  Scalar det() const {
    if (n_ == 0) return Scalar::one(nvars_);
    if (n_ == 1) return at(0, 0);
    std::vector<Poly<C>> p(e_.size(), Poly<C>(nvars_));
    Poly<C> cleared = Poly<C>::from_long(nvars_, 1);
    for (int i = 0; i < n_; ++i) {
      Poly<C> l = Poly<C>::from_long(nvars_, 1);
      for (int j = 0; j < n_; ++j) l = poly_lcm(l, at(i, j).den());
      for (int j = 0; j < n_; ++j)
        p[idx(i, j)] = at(i, j).num() * divexact(l, at(i, j).den());
      cleared = cleared * l;
    }
    Poly<C> prev = Poly<C>::from_long(nvars_, 1);
    bool negate = false;
    for (int k = 0; k + 1 < n_; ++k) {
      if (p[idx(k, k)].is_zero()) {
        int r = -1;
        for (int i = k + 1; i < n_; ++i)
          if (!p[idx(i, k)].is_zero()) {
            r = i;
            break;
          }
        if (r < 0) return Scalar::zero(nvars_);
        for (int j = 0; j < n_; ++j) std::swap(p[idx(k, j)], p[idx(r, j)]);
        negate = !negate;
      }
      for (int i = k + 1; i < n_; ++i) {
        for (int j = k + 1; j < n_; ++j)
          p[idx(i, j)] = divexact(p[idx(i, j)] * p[idx(k, k)] - p[idx(i, k)] * p[idx(k, j)], prev);
        p[idx(i, k)] = Poly<C>(nvars_);
      }
      prev = p[idx(k, k)];
    }
    Poly<C> d = p[idx(n_ - 1, n_ - 1)];
    if (negate) d = -d;
    return Scalar(std::move(d), std::move(cleared));
  }

  // Gauss-Jordan over the fraction field.
  Matrix inverse() const {
    Matrix a = *this;
    Matrix r = identity(n_, nvars_);
    for (int k = 0; k < n_; ++k) {
      int piv = -1;
      for (int i = k; i < n_; ++i)
        if (!a.at(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) throw NotInvertible("singular matrix");
      if (piv != k) {
        for (int j = 0; j < n_; ++j) {
          std::swap(a.at(k, j), a.at(piv, j));
          std::swap(r.at(k, j), r.at(piv, j));
        }
      }
      Scalar ip = a.at(k, k).inverse();
      for (int j = 0; j < n_; ++j) {
        a.at(k, j) *= ip;
        r.at(k, j) *= ip;
      }
      for (int i = 0; i < n_; ++i) {
        if (i == k || a.at(i, k).is_zero()) continue;
        Scalar f = a.at(i, k);
        for (int j = 0; j < n_; ++j) {
          a.at(i, j) -= f * a.at(k, j);
          r.at(i, j) -= f * r.at(k, j);
        }
      }
    }
    return r;
  }

  bool operator==(const Matrix& o) const {
    return n_ == o.n_ && nvars_ == o.nvars_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
      out += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) {
        if (j) out += ", ";
        out += at(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  void require_same(const Matrix& o) const {
    if (n_ != o.n_) throw ShapeError("matrix size mismatch");
    if (nvars_ != o.nvars_) throw ArityMismatch("matrix variable count mismatch");
  }

  int n_;
  int nvars_;
  std::vector<Scalar> e_;
};

template <class C>
Matrix<C> mat_derive(const Derivation<C>& d, const Matrix<C>& m) {
  return m.derived(d);
}

template <class C>
struct DetInvTrace {
  RatFunc<C> det;
  std::optional<Matrix<C>> inverse;  // absent when det = 0
  RatFunc<C> trace;
};

template <class C>
DetInvTrace<C> det_inv_trace(const Matrix<C>& a) {
  DetInvTrace<C> r{a.det(), std::nullopt, a.trace()};
  if (!r.det.is_zero()) r.inverse = a.inverse();
  return r;
}

// The flag spanned by the first coordinate line and the first n^2 + 1
// coordinates inside the (n^2 + 2)-dimensional ambient space.
struct FlagSpec {
  int n = 0;  // size of the middle matrix block
  int ambient() const { return n * n + 2; }
};

// True when p maps the first basis line into itself and the span of the
// first n^2 + 1 coordinates into itself.
template <class C>
bool preserves_flag(const Matrix<C>& p, const FlagSpec& flag) {
  const int N = flag.ambient();
  if (p.size() != N) throw ShapeError("flag check on matrix of wrong size");
  for (int i = 1; i < N; ++i)
    if (!p(i, 0).is_zero()) return false;
  for (int j = 0; j + 1 < N; ++j)
    if (!p(N - 1, j).is_zero()) return false;
  return true;
}

// tr(a*b) without forming the product matrix.
template <class C>
RatFunc<C> trace_of_product(const Matrix<C>& a, const Matrix<C>& b) {
  if (a.size() != b.size()) throw ShapeError("trace of product: size mismatch");
  RatFunc<C> t = RatFunc<C>::zero(a.nvars());
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k) {
      if (a(i, k).is_zero() || b(k, i).is_zero()) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

}  // namespace diffext
