#pragma once

#include <gmpxx.h>

#include <string>

namespace wdg {

using Int = mpz_class;
using Rational = mpq_class;

// Canonical rational from a num/den pair; throws std::domain_error if den = 0.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

// Strict syntax: -?digits or -?digits/digits. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace wdg
