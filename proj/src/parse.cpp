#include "diffext/parse.hpp"

#include <cctype>
#include <vector>

namespace diffext {

namespace {

class RatParser {
 public:
  RatParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

  RatFuncQ parse() {
    RatFuncQ v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  RatFuncQ expr() {
    RatFuncQ v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFuncQ term() {
    RatFuncQ v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        RatFuncQ d = unary();
        if (d.is_zero()) fail("division by zero in expression");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFuncQ unary() {
    skip_ws();
    if (accept('-')) return -unary();
    return power();
  }

  RatFuncQ power() {
    RatFuncQ base = atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    unsigned long e = read_uint("exponent");
    if (e > 64) fail("exponent too large");
    RatFuncQ v = RatFuncQ::one(nvars_);
    for (unsigned long i = 0; i < e; ++i) v *= base;
    return v;
  }

  RatFuncQ atom() {
    skip_ws();
    if (accept('(')) {
      RatFuncQ v = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && (s_[pos_] == 't' || s_[pos_] == 'T')) {
      ++pos_;
      unsigned long k = read_uint("variable index");
      if (k < 1 || static_cast<long>(k) > nvars_) fail("variable index out of range");
      return RatFuncQ::variable(nvars_, static_cast<int>(k) - 1);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      return RatFuncQ::constant(nvars_, Rat(z));
    }
    fail("expected a number, variable, or '('");
    return RatFuncQ::zero(nvars_);  // unreachable
  }

  unsigned long read_uint(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 1000000) fail(std::string(what) + " too large");
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("at position " + std::to_string(pos_) + ": " + why);
  }

  const std::string& s_;
  int nvars_;
  std::size_t pos_ = 0;
};

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

RatFuncQ parse_ratfunc(const std::string& text, int nvars) {
  return RatParser(text, nvars).parse();
}

DerivationQ parse_derivation(const std::string& spec, int nvars) {
  std::string s = trimmed(spec);
  if (s.empty()) throw ParseError("empty derivation spec");
  if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'P')) {
    bool digits = true;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) {
      long k = std::stol(s.substr(1));
      if (k < 1 || k > nvars) throw ParseError("partial index out of range in: " + spec);
      return DerivationQ::partial(nvars, static_cast<int>(k) - 1);
    }
  }
  std::vector<RatFuncQ> coeffs;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      coeffs.push_back(parse_ratfunc(s.substr(start, i - start), nvars));
      start = i + 1;
    }
  }
  if (static_cast<int>(coeffs.size()) != nvars)
    throw ParseError("derivation spec needs " + std::to_string(nvars) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  return DerivationQ::from_coeffs(std::move(coeffs));
}

}  // namespace diffext
