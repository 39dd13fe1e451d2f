#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "wdg/ratfun.hpp"

using namespace wdg;

namespace {

Poly make_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(v);
}

struct Rnd {
  std::mt19937_64 rng{2024};
  long draw(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  }
  Poly poly(int max_deg, bool nonzero = false) {
    for (;;) {
      std::vector<Rational> c;
      const long deg = draw(0, max_deg);
      for (long i = 0; i <= deg; ++i) c.emplace_back(draw(-4, 4));
      Poly p(c);
      if (!nonzero || !p.is_zero()) return p;
    }
  }
  RatFun ratfun(bool nonzero = false) {
    for (;;) {
      RatFun f(poly(2), poly(2, true));
      if (!nonzero || !f.is_zero()) return f;
    }
  }
};

const Poly u = Poly::u();

}  // namespace

TEST_CASE("poly gcd examples") {
  CHECK(gcd(u * u - Poly(1), u - Poly(1)) == u - Poly(1));
  CHECK(gcd(Poly(), Poly()) == Poly());
  // gcd with zero is the monic associate
  const Poly p = make_poly({2, 0, 4});  // 4u^2 + 2
  CHECK(gcd(p, Poly()) == p.monic());
  CHECK(gcd(Poly(), p) == p.monic());
  CHECK(gcd(u * u + Poly(1), u * u - u) == Poly(1));
}

TEST_CASE("poly division") {
  const Poly a = (u + Poly(1)) * (u - Poly(2)) + Poly(5);
  const auto [q, r] = Poly::divrem(a, u + Poly(1));
  CHECK(q == u - Poly(2));
  CHECK(r == Poly(5));
  CHECK_THROWS_AS(Poly::divrem(a, Poly()), std::domain_error);
  CHECK_THROWS_AS(Poly::exact_div(a, u + Poly(1)), std::logic_error);
  CHECK(Poly::exact_div((u + Poly(1)) * (u - Poly(2)), u + Poly(1)) ==
        u - Poly(2));
}

TEST_CASE("ratfun canonical form") {
  CHECK(RatFun(u * u - Poly(1), u - Poly(1)) == RatFun(u + Poly(1)));
  CHECK(RatFun(Poly(2) * u, Poly(2)) == RatFun(u));
  const RatFun f(u + Poly(1), u * u - u);
  CHECK(f.num() == u + Poly(1));
  CHECK(f.den() == u * u - u);
  CHECK_THROWS_AS(RatFun(u, Poly()), std::domain_error);
  // canonical zero
  CHECK(RatFun(Poly(), u + Poly(1)) == RatFun());
  CHECK(RatFun().den() == Poly(1));
}

TEST_CASE("ratfun arithmetic examples") {
  const RatFun U = RatFun::u();
  const RatFun one(1);
  CHECK((-(one / (U * U))) * (-(U * U)) == one);
  const RatFun a = -((U + one) / (U * U - U));
  const RatFun b = -((U * U - U) / (U + one));
  CHECK(a * b == one);
  CHECK(U * U + RatFun(-1) == U * U - one);
  CHECK_THROWS_AS(one / RatFun(), std::domain_error);
  CHECK_THROWS_AS(RatFun().inverse(), std::domain_error);
}

TEST_CASE("ratfun evaluation") {
  const RatFun U = RatFun::u();
  const RatFun f = (U * U - U) / (U + RatFun(1));
  CHECK(f(Rational(3)) == make_rational(3, 2));
  CHECK(f(Rational(0)) == Rational(0));
  const RatFun g = RatFun(1) / (U - RatFun(1));
  CHECK_THROWS_AS(g(Rational(1)), std::domain_error);
}

TEST_CASE("canonical-form uniqueness property") {
  Rnd rnd;
  for (int i = 0; i < 200; ++i) {
    const Poly p = rnd.poly(2);
    const Poly r = rnd.poly(2, true);
    const Poly q = rnd.poly(2, true);
    CHECK(RatFun(p * q, r * q) == RatFun(p, r));
  }
}

TEST_CASE("field axioms on random samples") {
  Rnd rnd;
  for (int i = 0; i < 100; ++i) {
    const RatFun a = rnd.ratfun(), b = rnd.ratfun(), c = rnd.ratfun();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const RatFun nz = rnd.ratfun(true);
    CHECK(nz * nz.inverse() == RatFun(1));
  }
}

TEST_CASE("evaluation is a homomorphism") {
  Rnd rnd;
  for (int i = 0; i < 100; ++i) {
    const RatFun a = rnd.ratfun(), b = rnd.ratfun();
    const Rational t(rnd.draw(2, 40));
    if (a.den()(t) == 0 || b.den()(t) == 0) continue;
    if ((a * b).den()(t) != 0) CHECK((a * b)(t) == a(t) * b(t));
    if ((a + b).den()(t) != 0) CHECK((a + b)(t) == a(t) + b(t));
  }
}

TEST_CASE("ratfun parser accepts the documented syntax") {
  const RatFun U = RatFun::u();
  CHECK(parse_ratfun("(u^2-u)/(u+1)") == (U * U - U) / (U + RatFun(1)));
  CHECK(parse_ratfun("-1/u^2") == -(RatFun(1) / (U * U)));
  CHECK(parse_ratfun("3/2") == RatFun(make_rational(3, 2)));
  CHECK(parse_ratfun("  ( u ^ 2 - u )  /  ( u + 1 ) ") ==
        (U * U - U) / (U + RatFun(1)));
  CHECK(parse_ratfun("2*u^3+u-4") ==
        RatFun(2) * U.pow(3) + U - RatFun(4));
  CHECK(parse_ratfun("0") == RatFun());
  CHECK_THROWS_AS(parse_ratfun("u^-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfun("u +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfun("1/(u-u)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfun("v"), std::invalid_argument);
}

TEST_CASE("printer emits reparseable canonical text") {
  Rnd rnd;
  for (int i = 0; i < 200; ++i) {
    const RatFun f = rnd.ratfun();
    CHECK(parse_ratfun(f.str()) == f);
  }
  // rational coefficients are cleared into integer syntax
  const RatFun half(make_rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK(parse_ratfun(half.str()) == half);
  const RatFun U = RatFun::u();
  CHECK((U * U).str() == "u^2");
  CHECK((-(RatFun(1) / (U * U))).str() == "-1/u^2");
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}
