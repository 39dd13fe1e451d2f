#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wdg/rational.hpp"

namespace wdg {

// Dense univariate polynomial over Q in the indeterminate u. coeff(i) is the
// coefficient of u^i; trailing zeros are stripped, so zero has no coefficients
// and degree() == -1.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly u();
  static Poly monomial(std::size_t k, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;  // requires nonzero
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly monic() const;  // requires nonzero
  Poly pow(unsigned k) const;
  Rational operator()(const Rational& t) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  bool operator==(const Poly&) const = default;

  // Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Division that must be exact; throws std::logic_error on a nonzero
  // remainder (only reachable through an internal bug).
  static Poly exact_div(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  void normalize();
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Monic lcm; lcm with 0 is 0.
Poly lcm(const Poly& a, const Poly& b);

}  // namespace wdg
