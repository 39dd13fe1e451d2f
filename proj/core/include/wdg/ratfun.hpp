#pragma once

#include <string>

#include "wdg/poly.hpp"

namespace wdg {

// Element of Q(u) in canonical reduced form: gcd(num, den) = 1, den monic,
// zero stored as 0/1. Equality is therefore structural.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}
  RatFun(const Poly& num, const Poly& den);  // throws std::domain_error if den = 0

  static RatFun u() { return RatFun(Poly::u()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);  // throws std::domain_error on zero divisor

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

  RatFun inverse() const;  // throws std::domain_error on zero
  RatFun pow(int k) const;

  // Exact evaluation; throws std::domain_error if den vanishes at t.
  Rational operator()(const Rational& t) const;

  bool operator==(const RatFun&) const = default;

  // Canonical textual form with integer coefficients, e.g. "(u^2-u)/(u+1)",
  // "-1/u^2", "3/2". Reparseable by parse_ratfun.
  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

// Parses the textual syntax: integer literals, `u`, + - * / ^ and
// parentheses; whitespace-insensitive. `^` takes a nonnegative integer
// exponent only (negative powers must be written as fractions).
// Throws std::invalid_argument with a description on malformed input.
RatFun parse_ratfun(const std::string& text);

}  // namespace wdg
