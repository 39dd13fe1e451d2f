#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wdg/builders.hpp"
#include "wdg/linalg.hpp"
#include "wdg/wgraph.hpp"

using namespace wdg;

namespace {

const RatFun U = RatFun::u();
const RatFun U2 = U * U;

WGraph reflection_wgraph(unsigned m, const Rational& mu_xy,
                         const Rational& mu_yx) {
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, m);
  WGraph p(cm);
  p.add_vertex("x", 1);
  p.add_vertex("y", 2);
  if (mu_xy != 0) p.set_mu("x", "y", mu_xy);
  if (mu_yx != 0) p.set_mu("y", "x", mu_yx);
  return p;
}

std::vector<WGraph> small_corpus() {
  std::vector<WGraph> corpus;
  for (const long mu : {0L, 1L, 2L}) corpus.push_back(build_a1_wgraph(mu));
  corpus.push_back(reflection_wgraph(3, 1, 1));
  corpus.push_back(reflection_wgraph(4, 1, 2));
  corpus.push_back(product(build_a1_wgraph(1, "s", "x1", "y1"),
                           build_a1_wgraph(1, "t", "x2", "y2")));
  {
    CoxeterMatrix cm({"s", "t"});
    cm.set_order(0, 1, 3);
    WGraph sgn_line(cm);
    sgn_line.add_vertex("w", 3);
    corpus.push_back(sgn_line);
  }
  return corpus;
}

std::vector<RatFun> char_vals(const CoxeterMatrix& cm, const LinearChar& chi) {
  std::vector<RatFun> v;
  for (const auto& name : cm.generators()) v.push_back(chi.values.at(name));
  return v;
}

}  // namespace

TEST_CASE("wgraph action examples") {
  // all labels full: T_s x = -x, so the vertex spans a sgn line
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, 3);
  WGraph sgn_line(cm);
  sgn_line.add_vertex("x", 3);
  const Rep rho = wgraph_action(sgn_line);
  CHECK(rho[0].at(0, 0) == RatFun(-1));
  CHECK(rho[1].at(0, 0) == RatFun(-1));
  CHECK(eigenspace_dim(rho, char_vals(cm, sgn_char(cm)), 1) == 1);

  // A1 graph: T_s x = u^2 x + u y
  const WGraph a1 = build_a1_wgraph(1);
  const Rep rho_a1 = wgraph_action(a1);
  CHECK(rho_a1[0].at(0, 0) == U2);
  CHECK(rho_a1[0].at(1, 0) == U);
  CHECK(rho_a1[0].at(0, 1) == RatFun(0));
  CHECK(rho_a1[0].at(1, 1) == RatFun(-1));

  // mu = 0 and empty labels: the action is u^2 I
  WGraph lines{CoxeterMatrix({"s"})};
  lines.add_vertex("x", 0);
  lines.add_vertex("y", 0);
  const Rep rho_lines = wgraph_action(lines);
  CHECK(rho_lines[0] == U2 * Matrix::identity(2));
}

TEST_CASE("wgraph validation") {
  for (const long mu : {-3L, 0L, 1L, 5L})
    CHECK(validate_wgraph(build_a1_wgraph(mu)).ok());

  WGraph single{CoxeterMatrix({"s"})};
  single.add_vertex("x", 0);
  CHECK(validate_wgraph(single).ok());

  // the braid for m=3 needs mu(x,y) mu(y,x) = 1; these weights break it
  CHECK_FALSE(validate_wgraph(reflection_wgraph(3, 2, 1)).ok());
  CHECK(validate_wgraph(reflection_wgraph(3, 1, 1)).ok());
  CHECK(validate_wgraph(reflection_wgraph(4, 1, 2)).ok());
  CHECK_FALSE(validate_wgraph(reflection_wgraph(4, 1, 1)).ok());
}

TEST_CASE("wgraph counts") {
  const auto counts = wgraph_counts(build_a1_wgraph(1));
  CHECK(counts.at(0) == 1);
  CHECK(counts.at(1) == 1);

  WGraph lines{CoxeterMatrix({"s"})};
  for (const auto* v : {"a", "b", "c"}) lines.add_vertex(v, 0);
  CHECK(wgraph_counts(lines).at(0) == 3);

  const WGraph prod = product(build_a1_wgraph(1, "s", "x1", "y1"),
                              build_a1_wgraph(1, "t", "x2", "y2"));
  const auto prod_counts = wgraph_counts(prod);
  for (GenSet J = 0; J < 4; ++J) CHECK(prod_counts.at(J) == 1);
}

TEST_CASE("wgraph restriction") {
  const WGraph prod = product(build_a1_wgraph(1, "s", "x1", "y1"),
                              build_a1_wgraph(1, "t", "x2", "y2"));
  CHECK(restrict_wgraph(prod, prod.cm().full_set()) == prod);

  const WGraph none = restrict_wgraph(prod, 0);
  for (std::size_t x = 0; x < none.vertex_count(); ++x)
    CHECK(none.labels(x) == 0);

  CHECK_THROWS_AS(restrict_wgraph(build_a1_wgraph(1), 2), std::invalid_argument);

  // restriction/count identity
  for (const auto& p : small_corpus()) {
    const auto counts = wgraph_counts(p);
    for (const GenSet J : subsets_sorted(p.cm())) {
      std::size_t expected = 0;
      for (const GenSet K : subsets_sorted(p.cm()))
        if ((J & K) == J && counts.count(K)) expected += counts.at(K);
      const WGraph pj = restrict_wgraph(p, J);
      const auto pj_counts = wgraph_counts(pj);
      const auto it = pj_counts.find(pj.cm().full_set());
      CHECK((it == pj_counts.end() ? 0 : it->second) == expected);
    }
  }
}

TEST_CASE("ind support check") {
  const IndSupportCheck a1 = ind_support_check(build_a1_wgraph(1));
  CHECK(a1.ok);
  CHECK(a1.ind_dim == 1);
  CHECK(a1.has_empty_label);

  // the ind eigenvector is x + (u mu / (u^2+1)) y
  const Rep rho = wgraph_action(build_a1_wgraph(2));
  const Subspace ind = eigenspace(
      {rho[0]}, {U2}, 2);
  REQUIRE(ind.dim() == 1);
  CHECK(ind.basis[0][1] / ind.basis[0][0] ==
        U * RatFun(2) / (U2 + RatFun(1)));

  WGraph single{CoxeterMatrix({"s"})};
  single.add_vertex("x", 1);
  const IndSupportCheck s = ind_support_check(single);
  CHECK(s.ok);
  CHECK(s.ind_dim == 0);

  // every valid corpus W-graph with all labels nonempty has ind dim 0
  for (const auto& p : small_corpus()) {
    REQUIRE(validate_wgraph(p).ok());
    const IndSupportCheck check = ind_support_check(p);
    CHECK(check.ok);
    bool all_nonempty = true;
    for (std::size_t x = 0; x < p.vertex_count(); ++x)
      if (p.labels(x) == 0) all_nonempty = false;
    if (all_nonempty) CHECK(check.ind_dim == 0);
  }
}

TEST_CASE("m0 invariance") {
  CHECK(m0_invariance_check(build_a1_wgraph(1)).ok);
  CHECK(m0_invariance_check(build_a1_wgraph(-5)).ok);
  for (const auto& p : small_corpus()) CHECK(m0_invariance_check(p).ok);
}

TEST_CASE("sgn multiplicity equals the full-label count") {
  for (const auto& p : small_corpus()) {
    const Rep rho = wgraph_action(p);
    const auto counts = wgraph_counts(p);
    const auto it = counts.find(p.cm().full_set());
    const std::size_t expected = it == counts.end() ? 0 : it->second;
    CHECK(eigenspace_dim(rho, char_vals(p.cm(), sgn_char(p.cm())),
                         p.vertex_count()) == expected);
  }
}

TEST_CASE("ind multiplicity bounded by the empty-label count") {
  for (const auto& p : small_corpus()) {
    const Rep rho = wgraph_action(p);
    const auto counts = wgraph_counts(p);
    const auto it = counts.find(0);
    const std::size_t empties = it == counts.end() ? 0 : it->second;
    CHECK(eigenspace_dim(rho, char_vals(p.cm(), ind_char(p.cm())),
                         p.vertex_count()) <= empties);
  }
}

TEST_CASE("self-weights are stored but ignored by the action") {
  WGraph p{CoxeterMatrix({"s"})};
  p.add_vertex("x", 0);
  p.add_vertex("y", 1);
  p.set_mu("y", "x", 1);
  p.set_mu("x", "x", 1);
  CHECK(p.mu(0, 0) == 1);
  const Rep rho = wgraph_action(p);
  CHECK(rho[0] == wgraph_action(build_a1_wgraph(1))[0]);
  CHECK_THROWS_AS(p.set_mu("x", "x", 2), std::invalid_argument);
}

TEST_CASE("quadratic relation always holds for wgraph actions") {
  for (const auto& p : small_corpus()) {
    const Rep rho = wgraph_action(p);
    const Matrix id = Matrix::identity(p.vertex_count());
    for (const auto& m : rho) CHECK(((m - U2 * id) * (m + id)).is_zero());
  }
  // even for weights that break the braid relation
  const Rep rho = wgraph_action(reflection_wgraph(3, 2, 1));
  const Matrix id = Matrix::identity(2);
  for (const auto& m : rho) CHECK(((m - U2 * id) * (m + id)).is_zero());
}
