#include "wdg/builders.hpp"

#include <stdexcept>

namespace wdg {

WDigraph build_a1(EdgeKind kind, const std::string& gen,
                  const std::string& tail, const std::string& head) {
  WDigraph g{CoxeterMatrix({gen})};
  g.add_vertex(tail);
  g.add_vertex(head);
  g.add_edge(tail, head, gen, kind);
  return g;
}

namespace {

// Dihedral element as (first letter, length); length 0 is the identity and
// length m is the longest element, canonicalized to first letter 's'.
struct DihedralElt {
  char first = 's';
  unsigned len = 0;
};

std::string elt_name(const DihedralElt& e) {
  if (e.len == 0) return "e";
  std::string name;
  for (unsigned i = 0; i < e.len; ++i) {
    const bool s_position = (i % 2 == 0) == (e.first == 's');
    name += s_position ? 's' : 't';
  }
  return name;
}

char last_letter(const DihedralElt& e) {
  const bool odd = e.len % 2 == 1;
  if (e.first == 's') return odd ? 's' : 't';
  return odd ? 't' : 's';
}

// Right multiplication by the generator g, with the word-length change.
DihedralElt right_mult(const DihedralElt& e, char g, unsigned m, bool& longer) {
  if (e.len == 0) {
    longer = true;
    return {g, 1};
  }
  if (e.len == m) {
    longer = false;
    // Use the representative word ending in g and drop its last letter.
    const char rep_first =
        (m % 2 == 1) ? g : (g == 's' ? 't' : 's');
    return {rep_first, m - 1};
  }
  if (last_letter(e) == g) {
    longer = false;
    return {e.len == 1 ? 's' : e.first, e.len - 1};
  }
  longer = true;
  if (e.len + 1 == m) return {'s', m};  // canonical longest-element name
  return {e.first, e.len + 1};
}

}  // namespace

WDigraph build_dihedral_regular(unsigned m) {
  if (m < 2) throw std::invalid_argument("dihedral: m must be at least 2");
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, m);
  WDigraph g(cm);

  std::vector<DihedralElt> elts;
  elts.push_back({'s', 0});
  for (unsigned len = 1; len < m; ++len) {
    elts.push_back({'s', len});
    elts.push_back({'t', len});
  }
  elts.push_back({'s', m});
  for (const auto& e : elts) g.add_vertex(elt_name(e));

  for (const auto& e : elts)
    for (char gen : {'s', 't'}) {
      bool longer = false;
      const DihedralElt f = right_mult(e, gen, m, longer);
      if (longer)
        g.add_edge(elt_name(e), elt_name(f), std::string(1, gen),
                   EdgeKind::solid);
    }
  return g;
}

WGraph build_a1_wgraph(const Rational& mu, const std::string& gen,
                       const std::string& x, const std::string& y) {
  WGraph p{CoxeterMatrix({gen})};
  p.add_vertex(x, 0);
  p.add_vertex(y, 1);
  if (mu != 0) p.set_mu(y, x, mu);
  return p;
}

namespace {

CoxeterMatrix product_cm(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  std::vector<std::string> names = a.generators();
  for (const auto& n : b.generators()) {
    if (a.index(n))
      throw std::invalid_argument("product: generator name collision '" + n +
                                  "'");
    names.push_back(n);
  }
  CoxeterMatrix cm(names);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      cm.set_order(i, j, a.order(i, j));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      cm.set_order(a.size() + i, a.size() + j, b.order(i, j));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      cm.set_order(i, a.size() + j, 2);
  return cm;
}

std::string pair_name(const std::string& a, const std::string& b) {
  return a + "." + b;
}

}  // namespace

WDigraph product(const WDigraph& a, const WDigraph& b) {
  if (a.vertex_count() == 0 || b.vertex_count() == 0)
    throw std::invalid_argument("product: empty structure");
  WDigraph g(product_cm(a.cm(), b.cm()));
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) g.add_vertex(pair_name(va, vb));
  const std::size_t nb = b.vertex_count();
  auto idx = [nb](std::size_t ia, std::size_t ib) { return ia * nb + ib; };
  for (const auto& e : a.edges())
    for (std::size_t ib = 0; ib < nb; ++ib)
      g.add_edge_by_index(idx(e.src, ib), idx(e.dst, ib), e.label, e.kind);
  for (const auto& e : b.edges())
    for (std::size_t ia = 0; ia < a.vertex_count(); ++ia)
      g.add_edge_by_index(idx(ia, e.src), idx(ia, e.dst),
                          a.cm().size() + e.label, e.kind);
  const DigraphValidation v = validate_digraph(g);
  if (!v.ok())
    throw std::runtime_error("product: result fails validation: " +
                             (v.structural.empty() ? v.relations.violations[0]
                                                   : v.structural[0]));
  return g;
}

WGraph product(const WGraph& a, const WGraph& b) {
  if (a.vertex_count() == 0 || b.vertex_count() == 0)
    throw std::invalid_argument("product: empty structure");
  WGraph p(product_cm(a.cm(), b.cm()));
  const std::size_t nb = b.vertex_count();
  auto idx = [nb](std::size_t ia, std::size_t ib) { return ia * nb + ib; };
  for (std::size_t ia = 0; ia < a.vertex_count(); ++ia)
    for (std::size_t ib = 0; ib < nb; ++ib) {
      const GenSet labels =
          a.labels(ia) | (b.labels(ib) << a.cm().size());
      p.add_vertex(pair_name(a.vertex_name(ia), b.vertex_name(ib)), labels);
    }
  for (const auto& [key, value] : a.mu_entries())
    for (std::size_t ib = 0; ib < nb; ++ib)
      p.set_mu_by_index(idx(key.first, ib), idx(key.second, ib), value);
  for (const auto& [key, value] : b.mu_entries())
    for (std::size_t ia = 0; ia < a.vertex_count(); ++ia)
      p.set_mu_by_index(idx(ia, key.first), idx(ia, key.second), value);
  const RepCheck check = validate_wgraph(p);
  if (!check.ok())
    throw std::runtime_error("product: result fails validation: " +
                             check.violations[0]);
  return p;
}

}  // namespace wdg
