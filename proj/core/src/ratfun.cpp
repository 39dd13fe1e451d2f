#include "wdg/ratfun.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wdg {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("ratfun: zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  const Rational lc = den_.leading();
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

bool RatFun::is_one() const { return num_.is_one() && den_.is_one(); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("ratfun: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("ratfun: inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFun result(1);
  RatFun base = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Rational RatFun::operator()(const Rational& t) const {
  const Rational d = den_(t);
  if (d == 0) throw std::domain_error("ratfun: pole at evaluation point");
  return num_(t) / d;
}

namespace {

// Scales p by c and returns the integer-coefficient result.
Poly scaled(const Poly& p, const Int& c) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) out.push_back(q * Rational(c));
  return Poly(std::move(out));
}

Int coeff_den_lcm(const Poly& p, Int acc) {
  for (const auto& c : p.coeffs()) {
    Int l;
    mpz_lcm(l.get_mpz_t(), acc.get_mpz_t(), c.get_den().get_mpz_t());
    acc = l;
  }
  return acc;
}

Int int_content(const Poly& p) {
  Int g(0);
  for (const auto& c : p.coeffs()) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    g = gg;
  }
  return g;
}

// True when the printed form is a single atom with optional power (an
// integer, u, or u^k) and so needs no parentheses as a divisor.
bool atom_like(const Poly& p) {
  int nonzero = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeff(i) != 0) {
      ++nonzero;
      last = i;
    }
  }
  if (nonzero != 1) return p.is_zero();
  if (last == 0) return p.coeff(0) > 0;
  return p.coeff(last) == 1;
}

bool single_term(const Poly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

}  // namespace

std::string RatFun::str() const {
  if (is_zero()) return "0";
  Int scale = coeff_den_lcm(num_, coeff_den_lcm(den_, Int(1)));
  Poly n = scaled(num_, scale);
  Poly d = scaled(den_, scale);
  Int g;
  mpz_gcd(g.get_mpz_t(), int_content(n).get_mpz_t(), int_content(d).get_mpz_t());
  if (g > 1) {
    Rational inv = make_rational(Int(1), g);
    n *= inv;
    d *= inv;
  }
  if (d.is_one()) return n.str();
  std::ostringstream os;
  if (single_term(n))
    os << n.str();
  else
    os << '(' << n.str() << ')';
  os << '/';
  if (atom_like(d))
    os << d.str();
  else
    os << '(' << d.str() << ')';
  return os.str();
}

namespace {

// Recursive-descent parser for the textual syntax.
class FunParser {
 public:
  explicit FunParser(const std::string& text) : text_(text) {}

  RatFun parse() {
    RatFun v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad rational function '" + text_ +
                                "' at position " + std::to_string(pos_) + ": " +
                                why);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  RatFun term() {
    RatFun v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        RatFun d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFun factor() {
    if (eat('-')) return -factor();
    RatFun v = primary();
    if (eat('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-')
        fail("negative exponents are not allowed; write an explicit fraction");
      v = v.pow(static_cast<int>(integer()));
    }
    return v;
  }

  RatFun primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFun v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'u') {
      ++pos_;
      return RatFun::u();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RatFun(Rational(Int(digits())));
    fail("expected integer, 'u', or '('");
  }

  unsigned long integer() {
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stoul(d);
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }
};

}  // namespace

RatFun parse_ratfun(const std::string& text) { return FunParser(text).parse(); }

}  // namespace wdg
