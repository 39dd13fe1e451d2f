#include "wdg/wdigraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wdg {

std::optional<std::size_t> WDigraph::vertex_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == name) return i;
  return std::nullopt;
}

void WDigraph::add_vertex(const std::string& name) {
  if (vertex_index(name))
    throw std::invalid_argument("digraph: duplicate vertex '" + name + "'");
  verts_.push_back(name);
}

void WDigraph::add_edge(const std::string& src, const std::string& dst,
                        const std::string& gen, EdgeKind kind) {
  const auto si = vertex_index(src);
  if (!si) throw std::invalid_argument("digraph: unknown vertex '" + src + "'");
  const auto di = vertex_index(dst);
  if (!di) throw std::invalid_argument("digraph: unknown vertex '" + dst + "'");
  const auto li = cm_.index(gen);
  if (!li) throw std::invalid_argument("digraph: unknown generator '" + gen + "'");
  add_edge_by_index(*si, *di, *li, kind);
}

void WDigraph::add_edge_by_index(std::size_t src, std::size_t dst,
                                 std::size_t label, EdgeKind kind) {
  if (src >= verts_.size() || dst >= verts_.size() || label >= cm_.size())
    throw std::invalid_argument("digraph: edge index out of range");
  if (src == dst)
    throw std::invalid_argument("digraph: loop edge at '" + verts_[src] + "'");
  for (const auto& e : edges_)
    if (e.src == src && e.dst == dst && e.label == label)
      throw std::invalid_argument("digraph: duplicate edge " + verts_[src] +
                                  " -> " + verts_[dst] + " (" +
                                  cm_.name(label) + ")");
  edges_.push_back({src, dst, label, kind});
}

bool WDigraph::operator==(const WDigraph& o) const {
  if (cm_ != o.cm_ || verts_ != o.verts_) return false;
  auto a = edges_, b = o.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::size_t InProfile::count(GenSet J) const {
  const auto it = table.find(J);
  return it == table.end() ? 0 : it->second;
}

std::size_t InProfile::sinks(const CoxeterMatrix& cm) const {
  return count(cm.full_set());
}

std::size_t Components::acyclic_count() const {
  std::size_t n = 0;
  for (bool a : acyclic)
    if (a) ++n;
  return n;
}

std::vector<std::string> structural_violations(const WDigraph& g) {
  std::vector<std::string> violations;
  const std::size_t n = g.vertex_count();
  const std::size_t gens = g.cm().size();
  // incidence counts per (vertex, generator)
  std::vector<std::size_t> incident(n * gens, 0);
  for (const auto& e : g.edges()) {
    if (e.src == e.dst)
      violations.push_back("loop edge at '" + g.vertex_name(e.src) + "'");
    ++incident[e.src * gens + e.label];
    ++incident[e.dst * gens + e.label];
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s = 0; s < gens; ++s) {
      const std::size_t c = incident[v * gens + s];
      if (c != 1)
        violations.push_back("vertex '" + g.vertex_name(v) + "' has " +
                             std::to_string(c) + " incident " + g.cm().name(s) +
                             "-edges (expected exactly 1)");
    }
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    for (std::size_t j = i + 1; j < g.edges().size(); ++j) {
      const auto& a = g.edges()[i];
      const auto& b = g.edges()[j];
      const bool same_ends = (a.src == b.src && a.dst == b.dst) ||
                             (a.src == b.dst && a.dst == b.src);
      if (same_ends && a.label == b.label)
        violations.push_back("parallel " + g.cm().name(a.label) +
                             "-edges between '" + g.vertex_name(a.src) +
                             "' and '" + g.vertex_name(a.dst) + "'");
    }
  return violations;
}

DigraphValidation validate_digraph(const WDigraph& g) {
  DigraphValidation v;
  v.structural = structural_violations(g);
  if (!v.structural.empty()) return v;
  v.relations = check_representation(g.cm(), digraph_action(g));
  return v;
}

Rep digraph_action(const WDigraph& g) {
  if (!structural_violations(g).empty())
    throw std::invalid_argument("digraph_action: structure axioms violated");
  const std::size_t n = g.vertex_count();
  const RatFun u = RatFun::u();
  const RatFun u2 = u * u;
  Rep rho(g.cm().size(), Matrix(n, n));
  for (const auto& e : g.edges()) {
    Matrix& m = rho[e.label];
    const std::size_t a = e.src, b = e.dst;
    if (e.kind == EdgeKind::solid) {
      // T_s a = b ; T_s b = u^2 a + (u^2 - 1) b
      m.at(b, a) = RatFun(1);
      m.at(a, b) = u2;
      m.at(b, b) = u2 - RatFun(1);
    } else {
      // T_s a = u a + (u+1) b ; T_s b = (u^2-u) a + (u^2-u-1) b
      m.at(a, a) = u;
      m.at(b, a) = u + RatFun(1);
      m.at(a, b) = u2 - u;
      m.at(b, b) = u2 - u - RatFun(1);
    }
  }
  return rho;
}

InProfile in_profile(const WDigraph& g) {
  InProfile p;
  p.in_sets.assign(g.vertex_count(), 0);
  for (const auto& e : g.edges()) p.in_sets[e.dst] |= GenSet{1} << e.label;
  for (const GenSet s : p.in_sets) ++p.table[s];
  return p;
}

Components components_and_acyclicity(const WDigraph& g) {
  const std::size_t n = g.vertex_count();
  Components c;
  c.comp_of.assign(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> undirected(n);
  for (const auto& e : g.edges()) {
    undirected[e.src].push_back(e.dst);
    undirected[e.dst].push_back(e.src);
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (c.comp_of[start] != SIZE_MAX) continue;
    const std::size_t id = c.count++;
    std::queue<std::size_t> q;
    q.push(start);
    c.comp_of[start] = id;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t w : undirected[v])
        if (c.comp_of[w] == SIZE_MAX) {
          c.comp_of[w] = id;
          q.push(w);
        }
    }
  }
  // Kahn's algorithm per component.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : g.edges()) {
    out[e.src].push_back(e.dst);
    ++indegree[e.dst];
  }
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t w : out[order[i]])
      if (--indegree[w] == 0) order.push_back(w);
  std::vector<bool> in_cycle(n, true);
  for (std::size_t v : order) in_cycle[v] = false;
  c.acyclic.assign(c.count, true);
  for (std::size_t v = 0; v < n; ++v)
    if (in_cycle[v]) c.acyclic[c.comp_of[v]] = false;
  return c;
}

WDigraph restrict_digraph(const WDigraph& g, GenSet J) {
  if ((J & ~g.cm().full_set()) != 0)
    throw std::invalid_argument("restrict: not a subset of the generators");
  const CoxeterMatrix sub = g.cm().restricted(J);
  WDigraph r(sub);
  for (const auto& v : g.vertices()) r.add_vertex(v);
  for (const auto& e : g.edges()) {
    if (!(J & (GenSet{1} << e.label))) continue;
    const auto li = sub.index(g.cm().name(e.label));
    r.add_edge_by_index(e.src, e.dst, *li, e.kind);
  }
  return r;
}

RatFun step_ratio(EdgeKind kind, bool forward) {
  const RatFun u = RatFun::u();
  const RatFun one(1);
  if (kind == EdgeKind::solid) {
    const RatFun r = -(one / (u * u));
    return forward ? r : r.inverse();
  }
  const RatFun r = -((u + one) / (u * u - u));
  return forward ? r : r.inverse();
}

RatFun walk_ratio(const WDigraph& g, const std::vector<WalkStep>& walk) {
  RatFun ratio(1);
  std::size_t at = SIZE_MAX;
  for (const auto& step : walk) {
    if (step.edge >= g.edges().size())
      throw std::invalid_argument("walk: edge index out of range");
    const auto& e = g.edges()[step.edge];
    const std::size_t from = step.forward ? e.src : e.dst;
    const std::size_t to = step.forward ? e.dst : e.src;
    if (at != SIZE_MAX && at != from)
      throw std::invalid_argument("walk: steps are not connected");
    at = to;
    ratio *= step_ratio(e.kind, step.forward);
  }
  return ratio;
}

std::size_t ind_mult_combinatorial(const WDigraph& g) {
  return components_and_acyclicity(g).count;
}

std::size_t sgn_mult_combinatorial(const WDigraph& g) {
  if (!structural_violations(g).empty())
    throw std::invalid_argument("sgn_mult: structure axioms violated");
  const std::size_t n = g.vertex_count();
  const Components comps = components_and_acyclicity(g);

  // adjacency as (neighbor, edge index)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    adj[g.edges()[i].src].emplace_back(g.edges()[i].dst, i);
    adj[g.edges()[i].dst].emplace_back(g.edges()[i].src, i);
  }

  std::size_t consistent = 0;
  for (std::size_t comp = 0; comp < comps.count; ++comp) {
    // BFS from the lexicographically least vertex of the component.
    std::size_t root = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (comps.comp_of[v] != comp) continue;
      if (root == SIZE_MAX || g.vertex_name(v) < g.vertex_name(root)) root = v;
    }
    std::vector<char> seen(n, 0);
    std::vector<RatFun> coeff(n);
    coeff[root] = RatFun(1);
    seen[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    std::vector<std::size_t> members{root};
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const auto& [w, ei] : adj[v]) {
        if (seen[w]) continue;
        const auto& e = g.edges()[ei];
        const bool forward = e.src == v;
        coeff[w] = coeff[v] * step_ratio(e.kind, forward);
        seen[w] = 1;
        members.push_back(w);
        q.push(w);
      }
    }
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (comps.comp_of[e.src] != comp) continue;
      if (coeff[e.dst] != coeff[e.src] * step_ratio(e.kind, true)) {
        ok = false;
        break;
      }
    }
    if (ok) ++consistent;
  }
  return consistent;
}

}  // namespace wdg
