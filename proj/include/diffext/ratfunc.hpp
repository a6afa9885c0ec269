#pragma once

#include <string>
#include <utility>

#include "diffext/poly.hpp"

namespace diffext {

// Rational function held in canonical form: gcd(num, den) = 1, den has
// graded-lex leading coefficient 1, and zero is 0/1. Structural equality of
// (num, den) is therefore equality in the field.
template <class C>
class RatFunc {
 public:
  using Traits = FieldTraits<C>;

  RatFunc() : num_(0), den_(Poly<C>::from_long(0, 1)) {}

  explicit RatFunc(Poly<C> p)
      : num_(std::move(p)), den_(Poly<C>::from_long(num_.nvars(), 1)) {}

  RatFunc(Poly<C> n, Poly<C> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static RatFunc zero(int nvars) { return RatFunc(Poly<C>(nvars)); }
  static RatFunc one(int nvars) { return RatFunc(Poly<C>::from_long(nvars, 1)); }
  static RatFunc constant(int nvars, const C& c) { return RatFunc(Poly<C>::constant(nvars, c)); }
  static RatFunc from_long(int nvars, long k) { return RatFunc(Poly<C>::from_long(nvars, k)); }
  static RatFunc variable(int nvars, int var) { return RatFunc(Poly<C>::variable(nvars, var)); }

  const Poly<C>& num() const { return num_; }
  const Poly<C>& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  C constant_value() const { return num_.constant_value(); }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    a.require_same(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RatFunc r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      if (r.num_.is_zero()) r.den_ = Poly<C>::from_long(a.nvars(), 1);
      return r;
    }
    Poly<C> g = gcd(a.den_, b.den_);
    if (g.is_one()) {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
      if (r.num_.is_zero()) r.den_ = Poly<C>::from_long(a.nvars(), 1);
      return r;  // coprime denominators: the sum is already reduced
    }
    Poly<C> da = divexact(a.den_, g), db = divexact(b.den_, g);
    Poly<C> t = a.num_ * db + b.num_ * da;
    if (t.is_zero()) return zero(a.nvars());
    Poly<C> h = gcd(t, g);
    r.num_ = divexact(t, h);
    r.den_ = da * divexact(b.den_, h);
    return r;
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    a.require_same(b);
    if (a.is_zero() || b.is_zero()) return zero(a.nvars());
    RatFunc r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.num_ = a.num_ * b.num_;
      r.den_ = a.den_;
      return r;
    }
    // Cross-cancel before multiplying so the product needs no further gcd.
    Poly<C> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    return r;
  }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize_lc();
    return r;
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // Partial derivative by the quotient rule.
  RatFunc partial(int var) const {
    Poly<C> dn = num_.derivative(var);
    if (den_.is_one()) return RatFunc(std::move(dn));
    Poly<C> dd = den_.derivative(var);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
  }

  bool operator==(const RatFunc& o) const {
    return nvars() == o.nvars() && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Report form is always "(num)/(den)", even for denominator 1.
  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  void require_same(const RatFunc& o) const {
    if (nvars() != o.nvars())
      throw ArityMismatch("mixed variable counts in rational arithmetic");
  }

  void normalize_lc() {
    const C& lc = den_.leading_coeff();
    if (Traits::is_one(lc)) return;
    C ilc = Traits::inv(lc);
    num_ = num_.scaled(ilc);
    den_ = den_.scaled(ilc);
  }

  void reduce() {
    if (num_.nvars() != den_.nvars())
      throw ArityMismatch("mixed variable counts between numerator and denominator");
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<C>::from_long(num_.nvars(), 1);
      return;
    }
    if (!den_.is_constant()) {
      Poly<C> g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
      }
    }
    normalize_lc();
  }

  Poly<C> num_;
  Poly<C> den_;
};

}  // namespace diffext
