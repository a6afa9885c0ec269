#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffext/coeff.hpp"
#include "diffext/errors.hpp"

namespace diffext {

// Exponent vector; length equals the variable count of the ambient ring.
using Mono = std::vector<std::uint32_t>;

inline std::uint64_t mono_degree(const Mono& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lexicographic order with t1 > t2 > ... > tm.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    std::uint64_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_quot(const Mono& b, const Mono& a) {
  Mono r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

// Sparse multivariate polynomial over a coefficient field C. The term map
// stores only nonzero coefficients, keyed by exponent vector in graded-lex
// order, so structural equality is canonical equality.
template <class C>
class Poly {
 public:
  using Traits = FieldTraits<C>;
  using TermMap = std::map<Mono, C, GrlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(checked(nvars)) {}

  static Poly constant(int nvars, const C& c) {
    Poly p(nvars);
    if (!Traits::is_zero(c)) p.terms_.emplace(Mono(nvars, 0), c);
    return p;
  }

  static Poly from_long(int nvars, long k) { return constant(nvars, Traits::from_long(k)); }

  static Poly variable(int nvars, int var) {
    Poly p(nvars);
    if (var < 0 || var >= nvars) throw ArityMismatch("variable index out of range");
    Mono m(nvars, 0);
    m[var] = 1;
    p.terms_.emplace(std::move(m), Traits::one());
    return p;
  }

  static Poly monomial(int nvars, Mono m, const C& c) {
    Poly p(nvars);
    if (static_cast<int>(m.size()) != nvars) throw ArityMismatch("monomial arity mismatch");
    if (!Traits::is_zero(c)) p.terms_.emplace(std::move(m), c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  bool is_one() const {
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0 &&
           Traits::is_one(terms_.begin()->second);
  }
  C constant_value() const {
    if (terms_.empty()) return Traits::zero();
    auto it = terms_.find(Mono(nvars_, 0));
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  std::uint64_t total_degree() const {
    return terms_.empty() ? 0 : mono_degree(terms_.rbegin()->first);
  }
  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const C& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Mono& m, const C& c) {
    if (Traits::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      C s = C(it->second + c);
      if (Traits::is_zero(s))
        terms_.erase(it);
      else
        it->second = std::move(s);
    }
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(-c));
    return r;
  }

  Poly& operator+=(const Poly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), C(ca * cb));
    return r;
  }

  // this * c * x^m
  Poly mul_term(const Mono& m, const C& c) const {
    Poly r(nvars_);
    if (Traits::is_zero(c)) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), C(cc * c));
    return r;
  }

  Poly scaled(const C& c) const {
    Poly r(nvars_);
    if (Traits::is_zero(c)) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, C(cc * c));
    return r;
  }

  // Formal partial derivative with respect to variable var.
  Poly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw ArityMismatch("derivative variable out of range");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      C nc = C(c * Traits::from_long(static_cast<long>(m[var])));
      if (Traits::is_zero(nc)) continue;
      Mono mm = m;
      mm[var] -= 1;
      r.add_term(mm, nc);
    }
    return r;
  }

  std::uint32_t deg_in(int var) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  // Coefficient of var^k, with the exponent of var cleared.
  Poly coeff_in(int var, std::uint32_t k) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != k) continue;
      Mono mm = m;
      mm[var] = 0;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  // Multiply by var^k.
  Poly shifted(int var, std::uint32_t k) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm[var] += k;
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  // Exponent-wise minimum over all terms (the common monomial factor).
  Mono common_mono() const {
    Mono r(nvars_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first) {
        r = m;
        first = false;
      } else {
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], m[i]);
      }
      if (mono_degree(r) == 0) break;
    }
    return r;
  }

  Poly mono_shift_down(const Mono& m) const {
    Poly r(nvars_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mono_quot(mm, m), c);
    return r;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string t = term_str(it->first, it->second);
      if (out.empty()) {
        out = t;
      } else if (!t.empty() && t[0] == '-') {
        out += t;
      } else {
        out += "+" + t;
      }
    }
    return out;
  }

 private:
  static int checked(int n) {
    if (n < 0) throw ArityMismatch("negative variable count");
    return n;
  }
  void require_same(const Poly& o) const {
    if (nvars_ != o.nvars_) throw ArityMismatch("mixed variable counts in polynomial arithmetic");
  }
  static std::string term_str(const Mono& m, const C& c) {
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "t" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) return Traits::str(c);
    if (Traits::is_one(c)) return vars;
    C neg = C(-Traits::one());
    if (c == neg) return "-" + vars;
    return Traits::str(c) + "*" + vars;
  }

  int nvars_;
  TermMap terms_;
};

// Quotient when the division is exact in the polynomial ring, absent when it
// is not.
template <class C>
std::optional<Poly<C>> try_divexact(const Poly<C>& a, const Poly<C>& b) {
  using Traits = FieldTraits<C>;
  if (a.nvars() != b.nvars()) throw ArityMismatch("mixed variable counts in division");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly<C> q(a.nvars());
  if (a.is_zero()) return q;
  if (b.is_constant()) return a.scaled(Traits::inv(b.constant_value()));
  Poly<C> r = a;
  const Mono& lb = b.leading_mono();
  while (!r.is_zero()) {
    const Mono& lr = r.leading_mono();
    if (!mono_divides(lb, lr)) return std::nullopt;
    C qc = C(r.leading_coeff() * Traits::inv(b.leading_coeff()));
    Mono qm = mono_quot(lr, lb);
    q.add_term(qm, qc);
    r -= b.mul_term(qm, qc);
  }
  return q;
}

// Exact division; the divisor must divide the dividend in the polynomial ring.
template <class C>
Poly<C> divexact(const Poly<C>& a, const Poly<C>& b) {
  auto q = try_divexact(a, b);
  if (!q) throw Error("non-exact polynomial division");
  return *std::move(q);
}

// Divide out the scalar content (and align the sign of the leading
// coefficient). Over a field this is a free rescaling; it keeps the
// coefficients of remainder sequences from snowballing.
template <class C>
Poly<C> strip_scalar_content(const Poly<C>& p) {
  using Traits = FieldTraits<C>;
  if (p.is_zero()) return p;
  C acc = Traits::zero();
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    acc = first ? c : Traits::scalar_gcd(acc, c);
    first = false;
  }
  if (Traits::is_negative(acc) != Traits::is_negative(p.leading_coeff()))
    acc = C(-acc);
  if (Traits::is_one(acc)) return p;
  return p.scaled(Traits::inv(acc));
}

template <class C>
Poly<C> poly_pow(const Poly<C>& p, std::uint32_t e) {
  Poly<C> acc = Poly<C>::from_long(p.nvars(), 1);
  for (std::uint32_t k = 0; k < e; ++k) acc = acc * p;
  return acc;
}

// Pseudo-remainder lc_var(b)^(d+1) * a mod b where d = deg_var(a) - deg_var(b).
// Requires deg_var(a) >= deg_var(b) >= 1. The scale is exact: the subresultant
// divisions downstream depend on it.
template <class C>
Poly<C> prem(Poly<C> r, const Poly<C>& b, int var) {
  const std::uint32_t db = b.deg_in(var);
  Poly<C> lcb = b.coeff_in(var, db);
  std::uint32_t pad = r.deg_in(var) - db + 1;
  while (!r.is_zero() && r.deg_in(var) >= db) {
    std::uint32_t dr = r.deg_in(var);
    Poly<C> lcr = r.coeff_in(var, dr);
    r = r * lcb - b * lcr.shifted(var, dr - db);
    --pad;
  }
  for (; pad > 0 && !r.is_zero(); --pad) r = r * lcb;
  return r;
}

template <class C>
Poly<C> normalize_monic(const Poly<C>& p) {
  using Traits = FieldTraits<C>;
  if (p.is_zero() || Traits::is_one(p.leading_coeff())) return p;
  return p.scaled(Traits::inv(p.leading_coeff()));
}

template <class C>
Poly<C> gcd_rec(const Poly<C>& a, const Poly<C>& b, int var);

// Content of p viewed as a univariate polynomial in var with coefficients in
// the remaining (later) variables.
template <class C>
Poly<C> content_in(const Poly<C>& p, int var) {
  Poly<C> acc(p.nvars());
  std::uint32_t d = p.deg_in(var);
  for (std::uint32_t k = 0; k <= d; ++k) {
    Poly<C> ck = p.coeff_in(var, k);
    if (ck.is_zero()) continue;
    acc = acc.is_zero() ? std::move(ck) : gcd_rec(acc, ck, var + 1);
    if (acc.is_constant() && !acc.is_zero()) break;
  }
  return acc;
}

// Degree of gcd(a(., point), b(., point)) in var after substituting the one
// remaining later variable; absent when the point kills a leading term.
// Only called when the variables of a and b are exactly {var, var + 1}.
template <class C>
std::optional<std::uint32_t> specialized_gcd_degree(const Poly<C>& a, const Poly<C>& b,
                                                    int var, const C& point) {
  using Traits = FieldTraits<C>;
  const int cvar = var + 1;
  auto specialize = [&](const Poly<C>& p, std::vector<C>& out) {
    std::vector<C> powers{Traits::one()};
    powers.reserve(p.deg_in(cvar) + 1);
    for (std::uint32_t k = 1; k <= p.deg_in(cvar); ++k)
      powers.push_back(C(powers.back() * point));
    out.assign(p.deg_in(var) + 1, Traits::zero());
    for (const auto& [m, c] : p.terms())
      out[m[var]] = C(out[m[var]] + C(c * powers[m[cvar]]));
    while (!out.empty() && Traits::is_zero(out.back())) out.pop_back();
  };
  std::vector<C> u, v;
  specialize(a, u);
  specialize(b, v);
  if (u.size() != a.deg_in(var) + 1 || v.size() != b.deg_in(var) + 1)
    return std::nullopt;  // a leading coefficient vanished at the point
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    // replace u by u mod v, dense with degree = index
    const C lead = Traits::inv(v.back());
    for (std::size_t i = u.size(); i >= v.size(); --i) {
      C q = C(u[i - 1] * lead);
      if (Traits::is_zero(q)) continue;
      const std::size_t off = i - v.size();
      for (std::size_t j = 0; j < v.size(); ++j)
        u[off + j] = C(u[off + j] - C(q * v[j]));
    }
    while (!u.empty() && Traits::is_zero(u.back())) u.pop_back();
    std::swap(u, v);
  }
  return static_cast<std::uint32_t>(u.size() - 1);
}

// Subresultant pseudo-remainder sequence, recursing through the variables.
// Assumes a and b involve no variable with index < var.
template <class C>
Poly<C> gcd_rec(const Poly<C>& a, const Poly<C>& b, int var) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant() || var >= a.nvars())
    return Poly<C>::from_long(a.nvars(), 1);
  std::uint32_t da = a.deg_in(var), db = b.deg_in(var);
  if (da == 0 && db == 0) return gcd_rec(a, b, var + 1);
  if (da == 0) return gcd_rec(a, content_in(b, var), var + 1);
  if (db == 0) return gcd_rec(content_in(a, var), b, var + 1);

  Poly<C> ca = content_in(a, var), cb = content_in(b, var);
  Poly<C> pa = strip_scalar_content(divexact(a, ca));
  Poly<C> pb = strip_scalar_content(divexact(b, cb));
  Poly<C> cg = gcd_rec(ca, cb, var + 1);
  if (pa.deg_in(var) < pb.deg_in(var)) std::swap(pa, pb);
  if (try_divexact(pa, pb)) return cg * pb;  // pb is primitive, so pb | pa settles it
  if (FieldTraits<C>::characteristic == 0 && var + 2 == a.nvars()) {
    // evaluation certificate: a degree-zero specialized gcd proves the
    // primitive parts coprime, skipping the remainder sequence entirely
    int tried = 0;
    for (long pt : {3L, 5L, 7L, 11L, 13L}) {
      auto d = specialized_gcd_degree(pa, pb, var, FieldTraits<C>::from_long(pt));
      if (!d) continue;
      if (*d == 0) return cg;
      if (++tried == 2) break;
    }
  }
  // subresultant sequence: each pseudo-remainder is shrunk by an exact
  // division with a predictable divisor, so no content gcds are needed
  // until the sequence terminates
  Poly<C> g = Poly<C>::from_long(a.nvars(), 1);
  Poly<C> h = g;
  for (;;) {
    const std::uint32_t delta = pa.deg_in(var) - pb.deg_in(var);
    Poly<C> r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (r.deg_in(var) == 0) return cg;  // primitive parts coprime in var
    Poly<C> next = divexact(r, g * poly_pow(h, delta));
    pa = std::move(pb);
    g = pa.coeff_in(var, pa.deg_in(var));
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = divexact(poly_pow(g, delta), poly_pow(h, delta - 1));
    pb = std::move(next);
  }
  return cg * strip_scalar_content(divexact(pb, content_in(pb, var)));
}

// GCD in C[t1..tm], normalized so the graded-lex leading coefficient is 1.
template <class C>
Poly<C> gcd(const Poly<C>& a, const Poly<C>& b) {
  if (a.nvars() != b.nvars()) throw ArityMismatch("mixed variable counts in gcd");
  if (a.is_zero()) return normalize_monic(b);
  if (b.is_zero()) return normalize_monic(a);
  if (a.is_constant() || b.is_constant()) return Poly<C>::from_long(a.nvars(), 1);
  if (a == b) return normalize_monic(a);
  {
    // when one argument divides the other it is the gcd, and denominators
    // produced by field arithmetic divide each other constantly
    const bool a_big = a.total_degree() >= b.total_degree();
    const Poly<C>& big = a_big ? a : b;
    const Poly<C>& small = a_big ? b : a;
    if (try_divexact(big, small)) return normalize_monic(small);
  }
  Mono ma = a.common_mono(), mb = b.common_mono();
  Mono mg(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) mg[i] = std::min(ma[i], mb[i]);
  Poly<C> core = gcd_rec(a.mono_shift_down(ma), b.mono_shift_down(mb), 0);
  return normalize_monic(core.mul_term(mg, FieldTraits<C>::one()));
}

template <class C>
Poly<C> poly_lcm(const Poly<C>& a, const Poly<C>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<C>(a.nvars());
  return normalize_monic(divexact(a * b, gcd(a, b)));
}

}  // namespace diffext
