#include "wdg/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace wdg {

Poly::Poly(long c) {
  if (c != 0) coeffs_.push_back(Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::u() { return monomial(1); }

Poly Poly::monomial(std::size_t k, const Rational& c) {
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = c;
  }
  return p;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& Poly::coeff(std::size_t i) const {
  // function-local so the zero exists before any cross-unit static init
  static const Rational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("poly: leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("poly: monic of zero");
  Poly r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly: division by zero");
  Poly q;
  Poly r = a;
  const int db = b.degree();
  const Rational& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
    const Rational c = r.leading() / lb;
    q += monomial(shift, c);
    // r -= c * u^shift * b, updating in place from the top
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      r.coeffs_[i + shift] -= c * b.coeffs_[i];
    r.normalize();
  }
  return {q, r};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("poly: division not exact");
  return q;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? '-' : '+');
    }
    const Rational mag = neg ? Rational(-c) : c;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'u';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = Poly::divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return Poly::exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace wdg
