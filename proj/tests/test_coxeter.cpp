#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wdg/builders.hpp"
#include "wdg/coxeter.hpp"
#include "wdg/wgraph.hpp"

using namespace wdg;

namespace {

const RatFun U = RatFun::u();
const RatFun U2 = U * U;

CoxeterMatrix dihedral_cm(unsigned m) {
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, m);
  return cm;
}

}  // namespace

TEST_CASE("coxeter matrix validation") {
  CHECK(validate_coxeter_matrix(dihedral_cm(3)).empty());
  CHECK_FALSE(validate_coxeter_matrix(dihedral_cm(1)).empty());
  const CoxeterMatrix inf_cm = dihedral_cm(kInfiniteOrder);
  CHECK(validate_coxeter_matrix(inf_cm).empty());
  CHECK_FALSE(validate_coxeter_matrix(inf_cm, true).empty());
  CoxeterMatrix unset({"s", "t"});
  CHECK_FALSE(validate_coxeter_matrix(unset).empty());
  CHECK_THROWS_AS(CoxeterMatrix({"s", "s"}), std::invalid_argument);
  CoxeterMatrix cm = dihedral_cm(3);
  CHECK_THROWS_AS(cm.set_order(0, 1, 4), std::invalid_argument);
}

TEST_CASE("coxeter restriction") {
  const CoxeterMatrix cm = dihedral_cm(5);
  const CoxeterMatrix r = cm.restricted(1);  // {s}
  CHECK(r.size() == 1);
  CHECK(r.name(0) == "s");
  CHECK(cm.restricted(cm.full_set()) == cm);
}

TEST_CASE("braid words") {
  const auto [a, b] = braid_word("s", "t", 3);
  CHECK(a == Word{"s", "t", "s"});
  CHECK(b == Word{"t", "s", "t"});
  const auto [c, d] = braid_word("s", "t", 2);
  CHECK(c == Word{"s", "t"});
  CHECK(d == Word{"t", "s"});
  const auto [e, f] = braid_word("s", "t", 5);
  CHECK(e == Word{"s", "t", "s", "t", "s"});
  CHECK(f == Word{"t", "s", "t", "s", "t"});
  CHECK_THROWS_AS(braid_word("s", "t", 1), std::invalid_argument);
}

TEST_CASE("linear characters on words") {
  const CoxeterMatrix cm = dihedral_cm(3);
  CHECK(char_on_word(ind_char(cm), {"s", "t", "s"}) == U2.pow(3));
  CHECK(char_on_word(sgn_char(cm), {"s", "t", "s"}) == RatFun(-1));
  CHECK(char_on_word(ind_char(cm), {}) == RatFun(1));
  CHECK_THROWS_AS(char_on_word(ind_char(cm), {"x"}), std::invalid_argument);
  // ind at u = 1 is the trivial character
  for (const Word w : {Word{"s"}, Word{"s", "t"}, Word{"t", "s", "t", "s"}})
    CHECK(char_on_word(ind_char(cm), w)(Rational(1)) == Rational(1));
}

TEST_CASE("check_representation examples") {
  // A1 solid block
  const WDigraph a1 = build_a1(EdgeKind::solid);
  CHECK(check_representation(a1.cm(), digraph_action(a1)).ok());

  // dihedral m=3 regular module
  const WDigraph dih = build_dihedral_regular(3);
  const RepCheck dih_check = check_representation(dih.cm(), digraph_action(dih));
  CHECK(dih_check.ok());
  CHECK(dih_check.unchecked.empty());

  // rho(T_s) = u^2 I passes, rho(T_t) = 0 fails the quadratic
  const CoxeterMatrix cm = dihedral_cm(3);
  Rep rho{U2 * Matrix::identity(2), Matrix(2, 2)};
  const RepCheck bad = check_representation(cm, rho);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations[0].find("quadratic") != std::string::npos);
  CHECK(bad.violations[0].find("t") != std::string::npos);
}

TEST_CASE("infinite orders leave the braid unchecked") {
  const CoxeterMatrix cm = dihedral_cm(kInfiniteOrder);
  const Rep rho{U2 * Matrix::identity(2), U2 * Matrix::identity(2)};
  const RepCheck check = check_representation(cm, rho);
  CHECK(check.ok());
  REQUIRE(check.unchecked.size() == 1);
  CHECK(check.unchecked[0] == std::pair<std::string, std::string>{"s", "t"});
}

TEST_CASE("char_trace examples") {
  const WDigraph dih = build_dihedral_regular(3);
  const Rep rho = digraph_action(dih);
  CHECK(char_trace(dih.cm(), rho, {}) == RatFun(6));
  CHECK(char_trace(dih.cm(), rho, {"s"}) == RatFun(3) * (U2 - RatFun(1)));

  const WGraph a1w = build_a1_wgraph(1);
  const Rep rho_w = wgraph_action(a1w);
  CHECK(char_trace(a1w.cm(), rho_w, {"s"}) == U2 - RatFun(1));
}

TEST_CASE("braid words have equal traces on valid representations") {
  for (unsigned m = 2; m <= 5; ++m) {
    const WDigraph g = build_dihedral_regular(m);
    const Rep rho = digraph_action(g);
    REQUIRE(check_representation(g.cm(), rho).ok());
    const auto [w1, w2] = braid_word("s", "t", m);
    CHECK(char_trace(g.cm(), rho, w1) == char_trace(g.cm(), rho, w2));
  }
}

TEST_CASE("subset rendering") {
  const CoxeterMatrix cm = dihedral_cm(3);
  CHECK(subset_to_string(cm, 0) == "{}");
  CHECK(subset_to_string(cm, 1) == "{s}");
  CHECK(subset_to_string(cm, 3) == "{s,t}");
  const auto subsets = subsets_sorted(cm);
  REQUIRE(subsets.size() == 4);
  CHECK(subsets[0] == 0);
  CHECK(subsets[3] == 3);
}
