#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "diffext/errors.hpp"

namespace diffext {

// Exact rational coefficients. mpq_class keeps every value as a reduced
// fraction with positive denominator, which is precisely the invariant the
// coefficient field needs.
using Rat = mpq_class;

// The field with two elements.
struct GF2 {
  std::uint8_t v = 0;

  constexpr GF2() = default;
  constexpr explicit GF2(long x) : v(static_cast<std::uint8_t>(((x % 2) + 2) % 2)) {}

  friend constexpr GF2 operator+(GF2 a, GF2 b) {
    GF2 r;
    r.v = a.v ^ b.v;
    return r;
  }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return a + b; }
  friend constexpr GF2 operator*(GF2 a, GF2 b) {
    GF2 r;
    r.v = a.v & b.v;
    return r;
  }
  friend constexpr GF2 operator-(GF2 a) { return a; }
  friend constexpr bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
  friend constexpr bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

template <class C>
struct FieldTraits;

template <>
struct FieldTraits<Rat> {
  static constexpr int characteristic = 0;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long k) { return Rat(k); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static bool is_one(const Rat& a) { return a == 1; }
  static Rat inv(const Rat& a) {
    if (is_zero(a)) throw DivisionByZero();
    return Rat(1) / a;
  }
  static std::string str(const Rat& a) { return a.get_str(); }
  static bool is_negative(const Rat& a) { return sgn(a) < 0; }
  // Positive scalar dividing both arguments with integral, coprime quotients:
  // gcd of the numerators over lcm of the denominators.
  static Rat scalar_gcd(const Rat& a, const Rat& b) {
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rat r(n, d);
    r.canonicalize();
    return r;
  }
};

template <>
struct FieldTraits<GF2> {
  static constexpr int characteristic = 2;
  static GF2 zero() { return GF2(0); }
  static GF2 one() { return GF2(1); }
  static GF2 from_long(long k) { return GF2(k); }
  static bool is_zero(GF2 a) { return a.v == 0; }
  static bool is_one(GF2 a) { return a.v == 1; }
  static GF2 inv(GF2 a) {
    if (a.v == 0) throw DivisionByZero();
    return a;
  }
  static std::string str(GF2 a) { return a.v ? "1" : "0"; }
  static bool is_negative(GF2) { return false; }
  static GF2 scalar_gcd(GF2, GF2) { return one(); }
};

}  // namespace diffext
