#include "wdg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wdg {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad rational '" + text + "': " + why);
  };
  auto digits = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) fail("expected digits");
    return text.substr(start, i - start);
  };

  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  Int num(digits());
  Int den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = Int(digits());
    if (den == 0) fail("zero denominator");
  }
  if (i != text.size()) fail("trailing characters");
  if (neg) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace wdg
