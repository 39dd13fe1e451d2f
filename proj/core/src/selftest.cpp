#include "wdg/selftest.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "wdg/builders.hpp"
#include "wdg/cli.hpp"
#include "wdg/compare.hpp"
#include "wdg/io.hpp"
#include "wdg/linalg.hpp"
#include "wdg/search.hpp"

namespace wdg {

namespace {

class Harness {
 public:
  explicit Harness(std::ostream& out) : out_(out) {}

  void criterion(int number, const std::string& name,
                 const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    out_ << (ok ? "PASS" : "FAIL") << " " << number << ": " << name;
    if (!detail.empty()) out_ << " [" << detail << "]";
    out_ << "\n";
    all_ok_ = all_ok_ && ok;
  }

  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

// ---------------------------------------------------------------------
// Independent oracles. These stay off the implementation paths they check:
// the action-block solver uses only rref-based solving, and the cofactor
// determinant is a direct Laplace expansion.

RatFun det_cofactor(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return RatFun(1);
  if (n == 1) return m.at(0, 0);
  RatFun acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    RatFun term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Rational det_cofactor_rational(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor(n - 1,
                                             std::vector<Rational>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = m[i][c];
      }
    }
    const Rational term = m[0][j] * det_cofactor_rational(minor);
    acc += (j % 2 == 1) ? Rational(-term) : term;
  }
  return acc;
}

// Solves for the unique 2x2 matrix with prescribed eigenvectors
// (1,1) -> u^2 and (1,c) -> -1, via an rref-based linear solve.
std::optional<Matrix> solve_action_block(const RatFun& c) {
  const RatFun u2 = RatFun::u() * RatFun::u();
  Matrix sys(4, 4);
  Vec rhs(4);
  // unknowns (m00, m01, m10, m11)
  sys.at(0, 0) = RatFun(1);
  sys.at(0, 1) = RatFun(1);
  rhs[0] = u2;
  sys.at(1, 2) = RatFun(1);
  sys.at(1, 3) = RatFun(1);
  rhs[1] = u2;
  sys.at(2, 0) = RatFun(1);
  sys.at(2, 1) = c;
  rhs[2] = RatFun(-1);
  sys.at(3, 2) = RatFun(1);
  sys.at(3, 3) = c;
  rhs[3] = -c;
  const auto x = solve_unique(sys, rhs);
  if (!x) return std::nullopt;
  Matrix m(2, 2);
  m.at(0, 0) = (*x)[0];
  m.at(0, 1) = (*x)[1];
  m.at(1, 0) = (*x)[2];
  m.at(1, 1) = (*x)[3];
  return m;
}

// ---------------------------------------------------------------------
// Corpus shared by several criteria.

WGraph reflection_wgraph(unsigned m, const Rational& mu_xy,
                         const Rational& mu_yx) {
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, m);
  WGraph p(cm);
  p.add_vertex("x", 1);  // {s}
  p.add_vertex("y", 2);  // {t}
  if (mu_xy != 0) p.set_mu("x", "y", mu_xy);
  if (mu_yx != 0) p.set_mu("y", "x", mu_yx);
  return p;
}

std::vector<WDigraph> digraph_corpus() {
  std::vector<WDigraph> corpus;
  corpus.push_back(build_a1(EdgeKind::solid));
  corpus.push_back(build_a1(EdgeKind::dashed));
  for (unsigned m = 2; m <= 6; ++m) corpus.push_back(build_dihedral_regular(m));
  for (const EdgeKind ka : {EdgeKind::solid, EdgeKind::dashed})
    for (const EdgeKind kb : {EdgeKind::solid, EdgeKind::dashed})
      corpus.push_back(
          product(build_a1(ka, "s", "a", "b"), build_a1(kb, "t", "c", "d")));
  corpus.push_back(product(
      product(build_a1(EdgeKind::solid, "r", "a", "b"),
              build_a1(EdgeKind::solid, "s", "c", "d")),
      build_a1(EdgeKind::dashed, "t", "e", "f")));

  const CoxeterMatrix cm1({"s"});
  for (auto& g : search_valid_digraphs(cm1, 4)) corpus.push_back(std::move(g));
  for (const unsigned order : {2u, 3u}) {
    CoxeterMatrix cm2({"s", "t"});
    cm2.set_order(0, 1, order);
    for (auto& g : search_valid_digraphs(cm2, 4)) corpus.push_back(std::move(g));
  }
  return corpus;
}

std::vector<WGraph> wgraph_corpus() {
  std::vector<WGraph> corpus;
  for (const long mu : {0L, 1L, 2L, -1L})
    corpus.push_back(build_a1_wgraph(Rational(mu)));
  corpus.push_back(build_a1_wgraph(make_rational(3, 2)));
  {
    WGraph single{CoxeterMatrix({"s"})};
    single.add_vertex("x", 0);
    corpus.push_back(single);
  }
  {
    WGraph single{CoxeterMatrix({"s"})};
    single.add_vertex("x", 1);
    corpus.push_back(single);
  }
  {
    CoxeterMatrix cm({"s", "t"});
    cm.set_order(0, 1, 3);
    WGraph sgn_line(cm);
    sgn_line.add_vertex("x", 3);
    corpus.push_back(sgn_line);
  }
  corpus.push_back(reflection_wgraph(3, 1, 1));
  corpus.push_back(reflection_wgraph(4, 1, 2));
  {
    CoxeterMatrix cm({"s", "t"});
    cm.set_order(0, 1, 3);
    WGraph ind_lines(cm);
    ind_lines.add_vertex("x", 0);
    ind_lines.add_vertex("y", 0);
    ind_lines.add_vertex("z", 0);
    corpus.push_back(ind_lines);
  }
  corpus.push_back(product(build_a1_wgraph(1, "s", "x1", "y1"),
                           build_a1_wgraph(1, "t", "x2", "y2")));
  corpus.push_back(
      product(build_a1_wgraph(2, "r", "x0", "y0"), reflection_wgraph(3, 1, 1)));
  return corpus;
}

std::size_t n_count(const std::map<GenSet, std::size_t>& table, GenSet J) {
  const auto it = table.find(J);
  return it == table.end() ? 0 : it->second;
}

std::vector<RatFun> char_vals(const CoxeterMatrix& cm, const LinearChar& chi) {
  std::vector<RatFun> v;
  for (const auto& name : cm.generators()) v.push_back(chi.values.at(name));
  return v;
}

// Enumerates all walks of length <= max_len from every start vertex and
// calls fn on each closed one.
void for_each_closed_walk(
    const WDigraph& g, std::size_t max_len,
    const std::function<void(const std::vector<WalkStep>&)>& fn) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, bool>>> steps_from(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    steps_from[g.edges()[i].src].emplace_back(i, true);
    steps_from[g.edges()[i].dst].emplace_back(i, false);
  }
  std::vector<WalkStep> walk;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                          std::size_t at) {
    if (walk.size() == max_len) return;
    for (const auto& [edge, forward] : steps_from[at]) {
      walk.push_back({edge, forward});
      const auto& e = g.edges()[edge];
      const std::size_t to = forward ? e.dst : e.src;
      if (to == start) fn(walk);
      dfs(start, to);
      walk.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) dfs(v, v);
}

// Deterministic random rational functions for the linear-algebra oracle.
struct RandomFuns {
  std::mt19937_64 rng{12345};

  long draw(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  }

  Poly random_poly(int max_deg) {
    std::vector<Rational> coeffs;
    const int deg = static_cast<int>(draw(0, max_deg));
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(draw(-3, 3));
    return Poly(coeffs);
  }

  Poly random_nonzero_den() {
    switch (draw(0, 3)) {
      case 0: return Poly(1);
      case 1: return Poly::u();
      case 2: return Poly::u() + Poly(1);
      default: return Poly::u() - Poly(1);
    }
  }

  RatFun random_ratfun() { return RatFun(random_poly(2), random_nonzero_den()); }

  Matrix random_matrix(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_ratfun();
    return m;
  }
};

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str() + "|" + err.str();
}

}  // namespace

bool run_selftest(std::ostream& out) {
  Harness h(out);

  h.criterion(1, "action blocks forced by the eigenvector conditions",
              [](std::string& detail) {
                const RatFun u = RatFun::u();
                const RatFun one(1);
                const RatFun c_solid = -(one / (u * u));
                const RatFun c_dashed = -((u + one) / (u * u - u));

                const auto solid = solve_action_block(c_solid);
                const auto dashed = solve_action_block(c_dashed);
                if (!solid || !dashed) {
                  detail = "forced linear system is not uniquely solvable";
                  return false;
                }
                const Rep rho_solid = digraph_action(build_a1(EdgeKind::solid));
                const Rep rho_dashed = digraph_action(build_a1(EdgeKind::dashed));
                if (*solid != rho_solid[0]) {
                  detail = "solid block differs from the derived one";
                  return false;
                }
                if (*dashed != rho_dashed[0]) {
                  detail = "dashed block differs from the derived one";
                  return false;
                }
                return true;
              });

  const std::vector<WDigraph> dcorpus = digraph_corpus();

  h.criterion(2, "component count = ind multiplicity (both methods)",
              [&](std::string& detail) {
                for (const auto& g : dcorpus) {
                  const std::size_t comps = components_and_acyclicity(g).count;
                  const std::size_t lin = eigenspace_dim(
                      digraph_action(g), char_vals(g.cm(), ind_char(g.cm())),
                      g.vertex_count());
                  const std::size_t comb = ind_mult_combinatorial(g);
                  if (comps != lin || comps != comb) {
                    detail = "mismatch on a corpus digraph: components=" +
                             std::to_string(comps) + " linalg=" +
                             std::to_string(lin) + " comb=" + std::to_string(comb);
                    return false;
                  }
                }
                detail = std::to_string(dcorpus.size()) + " digraphs";
                return true;
              });

  h.criterion(3, "acyclic component count = sgn multiplicity (both methods)",
              [&](std::string& detail) {
                for (const auto& g : dcorpus) {
                  if (!g.cm().all_orders_finite()) continue;
                  const std::size_t acyclic =
                      components_and_acyclicity(g).acyclic_count();
                  const std::size_t lin = eigenspace_dim(
                      digraph_action(g), char_vals(g.cm(), sgn_char(g.cm())),
                      g.vertex_count());
                  const std::size_t comb = sgn_mult_combinatorial(g);
                  if (acyclic != lin || acyclic != comb) {
                    detail = "mismatch on a corpus digraph: acyclic=" +
                             std::to_string(acyclic) + " linalg=" +
                             std::to_string(lin) + " comb=" + std::to_string(comb);
                    return false;
                  }
                }
                detail = std::to_string(dcorpus.size()) + " digraphs";
                return true;
              });

  const std::vector<WGraph> wcorpus = wgraph_corpus();

  h.criterion(4, "ind eigenvectors force an unlabeled vertex",
              [&](std::string& detail) {
                for (const auto& p : wcorpus) {
                  if (!validate_wgraph(p).ok()) {
                    detail = "corpus W-graph fails validation";
                    return false;
                  }
                  const IndSupportCheck check = ind_support_check(p);
                  if (!check.ok) {
                    detail = "support check failed";
                    return false;
                  }
                  bool all_nonempty = true;
                  for (std::size_t x = 0; x < p.vertex_count(); ++x)
                    if (p.labels(x) == 0) all_nonempty = false;
                  if (all_nonempty && check.ind_dim != 0) {
                    detail = "all labels nonempty but ind multiplicity > 0";
                    return false;
                  }
                }
                detail = std::to_string(wcorpus.size()) + " W-graphs";
                return true;
              });

  h.criterion(5, "certified pairs satisfy every conclusion", [&](std::string& detail) {
    struct Pair {
      WDigraph g;
      WGraph p;
    };
    std::vector<Pair> pairs;
    pairs.push_back({build_a1(EdgeKind::solid), build_a1_wgraph(1)});
    pairs.push_back({product(build_a1(EdgeKind::solid, "s", "a", "b"),
                             build_a1(EdgeKind::solid, "t", "c", "d")),
                     product(build_a1_wgraph(1, "s", "x1", "y1"),
                             build_a1_wgraph(1, "t", "x2", "y2"))});
    for (const auto& pair : pairs) {
      const IsoResult r =
          find_iso(AlgStruct{pair.g}, AlgStruct{pair.p}, 1, 64);
      if (r.outcome != IsoOutcome::certificate) {
        detail = "no certificate found";
        return false;
      }
      const TheoremReport report = theorem_check(pair.g, pair.p, *r.cert);
      if (!report.passed()) {
        for (const auto& a : report.assertions)
          if (!a.pass) detail = "failed: " + a.name + " (" + a.detail + ")";
        return false;
      }
    }
    detail = "2 pairs";
    return true;
  });

  h.criterion(6, "inclusion identity under restriction", [&](std::string& detail) {
    std::size_t checked = 0;
    for (const auto& g : dcorpus) {
      const InProfile profile = in_profile(g);
      for (const GenSet J : subsets_sorted(g.cm())) {
        std::size_t total = 0;
        for (const GenSet K : subsets_sorted(g.cm()))
          if ((J & K) == J) total += profile.count(K);
        const WDigraph gj = restrict_digraph(g, J);
        if (in_profile(gj).count(gj.cm().full_set()) != total) {
          detail = "digraph restriction identity fails";
          return false;
        }
        ++checked;
      }
    }
    for (const auto& p : wcorpus) {
      const auto counts = wgraph_counts(p);
      for (const GenSet J : subsets_sorted(p.cm())) {
        std::size_t total = 0;
        for (const GenSet K : subsets_sorted(p.cm()))
          if ((J & K) == J) total += n_count(counts, K);
        const WGraph pj = restrict_wgraph(p, J);
        if (n_count(wgraph_counts(pj), pj.cm().full_set()) != total) {
          detail = "wgraph restriction identity fails";
          return false;
        }
        ++checked;
      }
    }
    detail = std::to_string(checked) + " (structure, subset) pairs";
    return true;
  });

  h.criterion(7, "closed-walk ratios balance exactly when edge counts do",
              [&](std::string& detail) {
                std::size_t walks = 0;
                bool ok = true;
                for (const auto& g : dcorpus) {
                  if (g.vertex_count() > 12) continue;
                  for_each_closed_walk(g, 8, [&](const std::vector<WalkStep>& walk) {
                    if (!ok) return;
                    ++walks;
                    long fwd_solid = 0, rev_solid = 0, fwd_dashed = 0,
                         rev_dashed = 0;
                    for (const auto& step : walk) {
                      const bool solid =
                          g.edges()[step.edge].kind == EdgeKind::solid;
                      if (solid)
                        ++(step.forward ? fwd_solid : rev_solid);
                      else
                        ++(step.forward ? fwd_dashed : rev_dashed);
                    }
                    const bool balanced =
                        fwd_solid == rev_solid && fwd_dashed == rev_dashed;
                    if (walk_ratio(g, walk).is_one() != balanced) ok = false;
                  });
                  if (!ok) {
                    detail = "balance equivalence fails";
                    return false;
                  }
                }
                detail = std::to_string(walks) + " closed walks";
                return true;
              });

  h.criterion(8, "dihedral regular digraphs, m = 2..6", [&](std::string& detail) {
    for (unsigned m = 2; m <= 6; ++m) {
      const auto start = std::chrono::steady_clock::now();
      const WDigraph g = build_dihedral_regular(m);
      const DigraphValidation v = validate_digraph(g);
      if (!v.ok() || !v.relations.unchecked.empty()) {
        detail = "validation failed at m=" + std::to_string(m);
        return false;
      }
      const InProfile profile = in_profile(g);
      const GenSet s_only = 1, t_only = 2;
      if (profile.count(0) != 1 || profile.count(g.cm().full_set()) != 1 ||
          profile.count(s_only) != m - 1 || profile.count(t_only) != m - 1) {
        detail = "descent-set counts wrong at m=" + std::to_string(m);
        return false;
      }
      const Rep rho = digraph_action(g);
      if (eigenspace_dim(rho, char_vals(g.cm(), ind_char(g.cm())),
                         g.vertex_count()) != 1 ||
          eigenspace_dim(rho, char_vals(g.cm(), sgn_char(g.cm())),
                         g.vertex_count()) != 1) {
        detail = "linear character multiplicities wrong at m=" +
                 std::to_string(m);
        return false;
      }
      const RatFun u2 = RatFun::u() * RatFun::u();
      if (char_trace(g.cm(), rho, {"s"}) !=
          RatFun(static_cast<long>(m)) * (u2 - RatFun(1))) {
        detail = "trace of T_s wrong at m=" + std::to_string(m);
        return false;
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::steady_clock::now() - start);
      if (elapsed.count() >= 10) {
        detail = "m=" + std::to_string(m) + " took too long";
        return false;
      }
    }
    detail = "m = 2..6";
    return true;
  });

  h.criterion(9, "determinant, rank-nullity, and evaluation oracles",
              [&](std::string& detail) {
                RandomFuns rnd;
                for (int i = 0; i < 200; ++i) {
                  const std::size_t n = static_cast<std::size_t>(rnd.draw(1, 4));
                  const Matrix m = rnd.random_matrix(n);
                  const RatFun det = det_bareiss(m);
                  if (det != det_cofactor(m)) {
                    detail = "Bareiss disagrees with cofactor expansion";
                    return false;
                  }
                  if (rank(m) + nullspace(m).dim() != m.cols()) {
                    detail = "rank-nullity fails";
                    return false;
                  }
                  if (i % 10 == 0) {
                    int points = 0;
                    long candidate = 2;
                    while (points < 3) {
                      const Rational t(candidate++);
                      bool pole = false;
                      for (std::size_t r = 0; r < n && !pole; ++r)
                        for (std::size_t c = 0; c < n && !pole; ++c)
                          if (m.at(r, c).den()(t) == 0) pole = true;
                      if (pole || det.den()(t) == 0) continue;
                      ++points;
                      std::vector<std::vector<Rational>> evaluated(
                          n, std::vector<Rational>(n));
                      for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c)
                          evaluated[r][c] = m.at(r, c)(t);
                      if (det(t) != det_cofactor_rational(evaluated)) {
                        detail = "evaluation homomorphism fails";
                        return false;
                      }
                    }
                  }
                }
                detail = "200 matrices";
                return true;
              });

  h.criterion(10, "iso and search output is reproducible", [&](std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "wdg_selftest";
    fs::create_directories(dir);
    const fs::path a = dir / "a1.wdg";
    const fs::path b = dir / "a1.wgr";
    {
      std::ofstream fa(a);
      fa << emit(build_a1(EdgeKind::solid));
      std::ofstream fb(b);
      fb << emit(build_a1_wgraph(1));
    }
    int code1 = 0, code2 = 0;
    const std::vector<std::string> iso_args{"iso",    a.string(), b.string(),
                                            "--seed", "7",        "--tries",
                                            "16"};
    const std::string iso1 = run_cli_capture(iso_args, code1);
    const std::string iso2 = run_cli_capture(iso_args, code2);
    const std::vector<std::string> search_args{"search", "--max-vertices", "4"};
    int code3 = 0, code4 = 0;
    const std::string search1 = run_cli_capture(search_args, code3);
    const std::string search2 = run_cli_capture(search_args, code4);
    fs::remove_all(dir);
    if (iso1 != iso2 || code1 != code2) {
      detail = "iso output differs between runs";
      return false;
    }
    if (code1 != 0) {
      detail = "iso run failed";
      return false;
    }
    if (search1 != search2 || code3 != code4 || code3 != 0) {
      detail = "search output differs between runs";
      return false;
    }
    return true;
  });

  out << (h.all_ok() ? "selftest: all criteria passed"
                     : "selftest: FAILURES present")
      << "\n";
  return h.all_ok();
}

}  // namespace wdg
