#include "wdg/compare.hpp"

#include <random>
#include <stdexcept>

namespace wdg {

const CoxeterMatrix& struct_cm(const AlgStruct& s) {
  return std::visit([](const auto& x) -> const CoxeterMatrix& { return x.cm(); },
                    s);
}

std::size_t struct_dim(const AlgStruct& s) {
  return std::visit([](const auto& x) { return x.vertex_count(); }, s);
}

Rep struct_action(const AlgStruct& s) {
  if (std::holds_alternative<WDigraph>(s))
    return digraph_action(std::get<WDigraph>(s));
  return wgraph_action(std::get<WGraph>(s));
}

std::map<GenSet, std::size_t> struct_n_table(const AlgStruct& s) {
  if (std::holds_alternative<WDigraph>(s))
    return in_profile(std::get<WDigraph>(s)).table;
  return wgraph_counts(std::get<WGraph>(s));
}

std::string struct_kind(const AlgStruct& s) {
  return std::holds_alternative<WDigraph>(s) ? "wdigraph" : "wgraph";
}

namespace {

std::vector<RatFun> char_values(const LinearChar& chi, const CoxeterMatrix& cm) {
  std::vector<RatFun> v;
  for (const auto& name : cm.generators()) v.push_back(chi.values.at(name));
  return v;
}

void trace_words(const CoxeterMatrix& cm, const Rep& rho, const Matrix& prefix,
                 Word& word, std::size_t max_len,
                 std::vector<std::pair<Word, RatFun>>& out) {
  if (word.size() == max_len) return;
  for (std::size_t s = 0; s < cm.size(); ++s) {
    const Matrix next = prefix * rho[s];
    word.push_back(cm.name(s));
    out.emplace_back(word, next.trace());
    trace_words(cm, rho, next, word, max_len, out);
    word.pop_back();
  }
}

}  // namespace

SideInvariants side_invariants(const AlgStruct& s, std::size_t max_word_len) {
  SideInvariants side;
  side.kind = struct_kind(s);
  side.dimension = struct_dim(s);
  side.n_table = struct_n_table(s);

  std::size_t total = 0;
  for (const auto& [subset, count] : side.n_table) total += count;
  if (total != side.dimension)
    throw std::logic_error("invariants: N table does not sum to the dimension");

  const CoxeterMatrix& cm = struct_cm(s);
  const Rep rho = struct_action(s);
  side.ind_dim =
      eigenspace_dim(rho, char_values(ind_char(cm), cm), side.dimension);
  side.sgn_dim =
      eigenspace_dim(rho, char_values(sgn_char(cm), cm), side.dimension);

  if (const auto* g = std::get_if<WDigraph>(&s)) {
    const Components comps = components_and_acyclicity(*g);
    side.components = comps.count;
    side.acyclic_components = comps.acyclic_count();
    side.ind_comb = ind_mult_combinatorial(*g);
    side.sgn_comb = sgn_mult_combinatorial(*g);
  }

  Word word;
  Matrix prefix = Matrix::identity(side.dimension);
  trace_words(cm, rho, prefix, word, max_word_len, side.traces);
  return side;
}

InvariantReport invariant_report(const AlgStruct& a, const AlgStruct& b,
                                 std::size_t max_word_len) {
  if (struct_cm(a) != struct_cm(b))
    throw std::invalid_argument("compare: Coxeter matrices differ");
  InvariantReport report;
  report.a = side_invariants(a, max_word_len);
  report.b = side_invariants(b, max_word_len);
  const CoxeterMatrix& cm = struct_cm(a);

  if (report.a.dimension != report.b.dimension)
    report.mismatches.push_back(
        "dimension " + std::to_string(report.a.dimension) + " != " +
        std::to_string(report.b.dimension));
  if (report.a.ind_dim != report.b.ind_dim)
    report.mismatches.push_back("ind multiplicity " +
                                std::to_string(report.a.ind_dim) + " != " +
                                std::to_string(report.b.ind_dim));
  if (report.a.sgn_dim != report.b.sgn_dim)
    report.mismatches.push_back("sgn multiplicity " +
                                std::to_string(report.a.sgn_dim) + " != " +
                                std::to_string(report.b.sgn_dim));
  if (cm.all_orders_finite() && report.a.n_table != report.b.n_table) {
    for (const GenSet J : subsets_sorted(cm)) {
      const auto ca = report.a.n_table.count(J) ? report.a.n_table.at(J) : 0;
      const auto cb = report.b.n_table.count(J) ? report.b.n_table.at(J) : 0;
      if (ca != cb)
        report.mismatches.push_back("N" + subset_to_string(cm, J) + " " +
                                    std::to_string(ca) + " != " +
                                    std::to_string(cb));
    }
  }
  for (std::size_t i = 0; i < report.a.traces.size(); ++i) {
    if (report.a.traces[i].second == report.b.traces[i].second) continue;
    std::string w;
    for (const auto& letter : report.a.traces[i].first) {
      if (!w.empty()) w += " ";
      w += letter;
    }
    report.mismatches.push_back("trace on word [" + w + "]: " +
                                report.a.traces[i].second.str() + " != " +
                                report.b.traces[i].second.str());
  }
  return report;
}

namespace {

// Deterministic bounded draw from the raw engine stream (distributions are
// implementation-defined, the engine itself is not).
long draw(std::mt19937_64& rng, long lo, long hi) {
  const unsigned long span = static_cast<unsigned long>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

IsoResult find_iso(const AlgStruct& a, const AlgStruct& b, std::uint64_t seed,
                   std::size_t tries) {
  if (struct_cm(a) != struct_cm(b))
    throw std::invalid_argument("iso: Coxeter matrices differ");
  IsoResult result;
  const std::size_t dim_a = struct_dim(a);
  const std::size_t dim_b = struct_dim(b);
  if (dim_a != dim_b) {
    result.outcome = IsoOutcome::not_isomorphic;
    result.reason = "dimension mismatch: " + std::to_string(dim_a) +
                    " != " + std::to_string(dim_b);
    return result;
  }
  const Rep rho_a = struct_action(a);
  const Rep rho_b = struct_action(b);
  const std::vector<Matrix> hom = hom_space(rho_a, rho_b);
  result.hom_dim = hom.size();
  if (hom.empty()) {
    if (dim_a > 0) {
      result.outcome = IsoOutcome::not_isomorphic;
      result.reason = "hom space is zero";
    } else {
      result.outcome = IsoOutcome::certificate;
      result.cert = IsoCertificate{Matrix(0, 0), RatFun(1), seed, {}};
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    std::vector<long> coeffs(hom.size());
    if (attempt == 0) {
      std::fill(coeffs.begin(), coeffs.end(), 1L);
    } else {
      const long radius = 3 + static_cast<long>(attempt / 8);
      for (auto& c : coeffs) c = draw(rng, -radius, radius);
    }
    Matrix candidate(dim_b, dim_a);
    for (std::size_t k = 0; k < hom.size(); ++k) {
      if (coeffs[k] == 0) continue;
      candidate += RatFun(coeffs[k]) * hom[k];
    }
    const RatFun det = det_bareiss(candidate);
    result.tries_used = attempt + 1;
    if (!det.is_zero()) {
      result.outcome = IsoOutcome::certificate;
      result.cert = IsoCertificate{candidate, det, seed, coeffs};
      return result;
    }
  }
  result.outcome = IsoOutcome::inconclusive;
  result.reason = "no invertible combination found in " +
                  std::to_string(tries) + " tries";
  return result;
}

std::vector<std::string> verify_certificate(const AlgStruct& a,
                                            const AlgStruct& b,
                                            const IsoCertificate& cert) {
  std::vector<std::string> violations;
  if (struct_cm(a) != struct_cm(b)) {
    violations.push_back("Coxeter matrices differ");
    return violations;
  }
  const Rep rho_a = struct_action(a);
  const Rep rho_b = struct_action(b);
  if (cert.a.rows() != struct_dim(b) || cert.a.cols() != struct_dim(a)) {
    violations.push_back("certificate matrix has the wrong shape");
    return violations;
  }
  const CoxeterMatrix& cm = struct_cm(a);
  for (std::size_t s = 0; s < cm.size(); ++s)
    if (rho_b[s] * cert.a != cert.a * rho_a[s])
      violations.push_back("intertwining identity fails for " + cm.name(s));
  const RatFun det = det_bareiss(cert.a);
  if (det != cert.det)
    violations.push_back("stored determinant does not match");
  if (det.is_zero()) violations.push_back("determinant is zero");
  return violations;
}

bool TheoremReport::passed() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

TheoremReport theorem_check(const WDigraph& g, const WGraph& p,
                            const IsoCertificate& cert) {
  if (!g.cm().all_orders_finite())
    throw std::invalid_argument("theorem: all orders must be finite");
  if (!verify_certificate(AlgStruct{g}, AlgStruct{p}, cert).empty())
    throw std::invalid_argument("theorem: certificate does not verify");
  TheoremReport report;
  const CoxeterMatrix& cm = g.cm();
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    report.assertions.push_back({name, pass, detail});
  };

  const InProfile gamma = in_profile(g);
  const auto psi = wgraph_counts(p);
  for (const GenSet J : subsets_sorted(cm)) {
    const std::size_t ng = gamma.count(J);
    const auto it = psi.find(J);
    const std::size_t np = it == psi.end() ? 0 : it->second;
    add("N" + subset_to_string(cm, J) + " equal", ng == np,
        std::to_string(ng) + " vs " + std::to_string(np));
  }

  const Components comps = components_and_acyclicity(g);
  add("digraph acyclic", comps.acyclic_count() == comps.count,
      std::to_string(comps.acyclic_count()) + " of " +
          std::to_string(comps.count) + " components acyclic");

  const Rep rho_g = digraph_action(g);
  const Rep rho_p = wgraph_action(p);
  const auto sgn_values = [&cm] {
    std::vector<RatFun> v(cm.size(), RatFun(-1));
    return v;
  }();
  const auto ind_values = [&cm] {
    std::vector<RatFun> v(cm.size(), RatFun::u() * RatFun::u());
    return v;
  }();
  const std::size_t sgn_g = eigenspace_dim(rho_g, sgn_values, g.vertex_count());
  const std::size_t sgn_p = eigenspace_dim(rho_p, sgn_values, p.vertex_count());
  const std::size_t full_g = gamma.count(cm.full_set());
  const auto psi_full = psi.find(cm.full_set());
  const std::size_t full_p = psi_full == psi.end() ? 0 : psi_full->second;
  add("N(S) = sgn multiplicity of digraph module", full_g == sgn_g,
      std::to_string(full_g) + " vs " + std::to_string(sgn_g));
  add("sgn multiplicities agree", sgn_g == sgn_p,
      std::to_string(sgn_g) + " vs " + std::to_string(sgn_p));
  add("sgn multiplicity of wgraph module = N(S)", sgn_p == full_p,
      std::to_string(sgn_p) + " vs " + std::to_string(full_p));

  for (const GenSet J : subsets_sorted(cm)) {
    const WDigraph gj = restrict_digraph(g, J);
    const WGraph pj = restrict_wgraph(p, J);
    const std::size_t ngj = in_profile(gj).count(gj.cm().full_set());
    const auto pj_counts = wgraph_counts(pj);
    const auto itj = pj_counts.find(pj.cm().full_set());
    const std::size_t npj = itj == pj_counts.end() ? 0 : itj->second;
    add("restriction to " + subset_to_string(cm, J), ngj == npj,
        std::to_string(ngj) + " vs " + std::to_string(npj));
  }

  const std::size_t ind_g = eigenspace_dim(rho_g, ind_values, g.vertex_count());
  add("ind multiplicity bounded by source count", ind_g <= gamma.sources(),
      std::to_string(ind_g) + " <= " + std::to_string(gamma.sources()));
  add("sources at least components", gamma.sources() >= comps.count,
      std::to_string(gamma.sources()) + " >= " + std::to_string(comps.count));
  return report;
}

}  // namespace wdg
