#include "wdg/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wdg {

namespace {

struct MatchEdge {
  std::size_t src, dst;
  EdgeKind kind;
};
using Matching = std::vector<MatchEdge>;

// All decorated perfect matchings on {0..n-1}: pairing, direction, kind.
void enumerate_matchings(std::vector<std::size_t>& free, Matching& acc,
                         std::vector<Matching>& out) {
  if (free.empty()) {
    out.push_back(acc);
    return;
  }
  const std::size_t v = free[0];
  for (std::size_t i = 1; i < free.size(); ++i) {
    const std::size_t w = free[i];
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    for (const bool fwd : {true, false})
      for (const EdgeKind kind : {EdgeKind::solid, EdgeKind::dashed}) {
        acc.push_back({fwd ? v : w, fwd ? w : v, kind});
        enumerate_matchings(rest, acc, out);
        acc.pop_back();
      }
  }
}

std::vector<Matching> all_matchings(std::size_t n) {
  std::vector<std::size_t> free(n);
  std::iota(free.begin(), free.end(), 0);
  Matching acc;
  std::vector<Matching> out;
  enumerate_matchings(free, acc, out);
  return out;
}

// Representatives of matchings up to vertex renaming: pairs (0,1),(2,3),...
// directed forward, kinds nondecreasing. Any structure can be relabeled so
// its first generator looks like this.
std::vector<Matching> canonical_first_matchings(std::size_t n) {
  std::vector<Matching> out;
  const std::size_t pairs = n / 2;
  for (std::size_t dashed = 0; dashed <= pairs; ++dashed) {
    Matching m;
    for (std::size_t i = 0; i < pairs; ++i)
      m.push_back({2 * i, 2 * i + 1,
                   i < pairs - dashed ? EdgeKind::solid : EdgeKind::dashed});
    out.push_back(m);
  }
  return out;
}

// Rational specialization of the generator matrix at u = t; a cheap
// necessary condition used to prefilter braid checks.
struct QMat {
  std::size_t n = 0;
  std::vector<Rational> e;
  QMat() = default;
  explicit QMat(std::size_t nn) : n(nn), e(nn * nn) {}
  Rational& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
  bool operator==(const QMat&) const = default;
};

QMat qmul(const QMat& a, const QMat& b) {
  QMat c(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n; ++j)
        if (b.at(k, j) != 0) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

QMat qmat_of(const Matching& m, std::size_t n, const Rational& t) {
  QMat q(n);
  const Rational t2 = t * t;
  for (const auto& e : m) {
    if (e.kind == EdgeKind::solid) {
      q.at(e.dst, e.src) = 1;
      q.at(e.src, e.dst) = t2;
      q.at(e.dst, e.dst) = t2 - 1;
    } else {
      q.at(e.src, e.src) = t;
      q.at(e.dst, e.src) = t + 1;
      q.at(e.src, e.dst) = t2 - t;
      q.at(e.dst, e.dst) = t2 - t - 1;
    }
  }
  return q;
}

bool braid_holds_q(const QMat& a, const QMat& b, unsigned m) {
  QMat left = a, right = b;
  for (unsigned i = 1; i < m; ++i) {
    left = qmul(left, i % 2 == 1 ? b : a);
    right = qmul(right, i % 2 == 1 ? a : b);
  }
  return left == right;
}

std::uint32_t pack_edge(std::size_t label, std::size_t src, std::size_t dst,
                        EdgeKind kind) {
  return static_cast<std::uint32_t>((label << 9) | (src << 6) | (dst << 3) |
                                    (kind == EdgeKind::dashed ? 1 : 0));
}

std::vector<std::uint32_t> encode_with_perm(
    const std::vector<DigraphEdge>& edges, std::size_t n,
    const std::vector<std::size_t>& perm) {
  std::vector<std::uint32_t> enc;
  enc.reserve(edges.size() + 1);
  enc.push_back(static_cast<std::uint32_t>(n));
  for (const auto& e : edges)
    enc.push_back(pack_edge(e.label, perm[e.src], perm[e.dst], e.kind));
  std::sort(enc.begin() + 1, enc.end());
  return enc;
}

WDigraph digraph_from_encoding(const CoxeterMatrix& cm,
                               const std::vector<std::uint32_t>& enc) {
  WDigraph g(cm);
  const std::size_t n = enc[0];
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 1; i < enc.size(); ++i) {
    const std::uint32_t packed = enc[i];
    g.add_edge_by_index((packed >> 6) & 7, (packed >> 3) & 7, packed >> 9,
                        (packed & 1) ? EdgeKind::dashed : EdgeKind::solid);
  }
  return g;
}

}  // namespace

std::vector<std::uint32_t> canonical_encoding(const WDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    auto enc = encode_with_perm(g.edges(), n, perm);
    if (best.empty() || enc < best) best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best.push_back(static_cast<std::uint32_t>(n));
  return best;
}

std::vector<WDigraph> search_valid_digraphs(const CoxeterMatrix& cm,
                                            std::size_t max_vertices) {
  const std::size_t k = cm.size();
  if (k == 0 || k > 3)
    throw std::invalid_argument("search: generator count must be 1..3");
  if (max_vertices > 6)
    throw std::invalid_argument("search: max_vertices must be at most 6");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (cm.order(i, j) == 0)
        throw std::invalid_argument("search: incomplete Coxeter matrix");

  const Rational t2(2), t3(3);
  std::set<std::vector<std::uint32_t>> found;

  for (std::size_t n = 2; n <= max_vertices; n += 2) {
    const auto firsts = canonical_first_matchings(n);
    const auto all = k > 1 ? all_matchings(n) : std::vector<Matching>{};

    // Specializations, computed once per matching.
    std::vector<QMat> all_q2, all_q3;
    for (const auto& m : all) {
      all_q2.push_back(qmat_of(m, n, t2));
      all_q3.push_back(qmat_of(m, n, t3));
    }

    auto braid_ok = [&](const QMat& a2, const QMat& a3, const QMat& b2,
                        const QMat& b3, unsigned order) {
      if (order == kInfiniteOrder) return true;
      return braid_holds_q(a2, b2, order) && braid_holds_q(a3, b3, order);
    };

    auto accept = [&](const std::vector<const Matching*>& picks) {
      WDigraph g(cm);
      for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
      for (std::size_t s = 0; s < picks.size(); ++s)
        for (const auto& e : *picks[s])
          g.add_edge_by_index(e.src, e.dst, s, e.kind);
      if (validate_digraph(g).ok()) found.insert(canonical_encoding(g));
    };

    for (const auto& m0 : firsts) {
      if (k == 1) {
        accept({&m0});
        continue;
      }
      const QMat q0_2 = qmat_of(m0, n, t2);
      const QMat q0_3 = qmat_of(m0, n, t3);
      for (std::size_t i1 = 0; i1 < all.size(); ++i1) {
        if (!braid_ok(q0_2, q0_3, all_q2[i1], all_q3[i1], cm.order(0, 1)))
          continue;
        if (k == 2) {
          accept({&m0, &all[i1]});
          continue;
        }
        for (std::size_t i2 = 0; i2 < all.size(); ++i2) {
          if (!braid_ok(q0_2, q0_3, all_q2[i2], all_q3[i2], cm.order(0, 2)))
            continue;
          if (!braid_ok(all_q2[i1], all_q3[i1], all_q2[i2], all_q3[i2],
                        cm.order(1, 2)))
            continue;
          accept({&m0, &all[i1], &all[i2]});
        }
      }
    }
  }

  std::vector<WDigraph> result;
  for (const auto& enc : found)
    result.push_back(digraph_from_encoding(cm, enc));
  return result;
}

}  // namespace wdg
