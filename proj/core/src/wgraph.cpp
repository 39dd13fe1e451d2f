#include "wdg/wgraph.hpp"

#include <stdexcept>

#include "wdg/linalg.hpp"

namespace wdg {

std::optional<std::size_t> WGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == name) return i;
  return std::nullopt;
}

void WGraph::add_vertex(const std::string& name, GenSet labels) {
  if (vertex_index(name))
    throw std::invalid_argument("wgraph: duplicate vertex '" + name + "'");
  if ((labels & ~cm_.full_set()) != 0)
    throw std::invalid_argument("wgraph: label set out of range");
  verts_.push_back(name);
  labels_.push_back(labels);
}

void WGraph::set_mu(const std::string& from, const std::string& to,
                    const Rational& value) {
  const auto fi = vertex_index(from);
  if (!fi) throw std::invalid_argument("wgraph: unknown vertex '" + from + "'");
  const auto ti = vertex_index(to);
  if (!ti) throw std::invalid_argument("wgraph: unknown vertex '" + to + "'");
  set_mu_by_index(*fi, *ti, value);
}

void WGraph::set_mu_by_index(std::size_t from, std::size_t to,
                             const Rational& value) {
  if (from >= verts_.size() || to >= verts_.size())
    throw std::invalid_argument("wgraph: mu index out of range");
  const auto key = std::make_pair(from, to);
  if (mu_.count(key))
    throw std::invalid_argument("wgraph: duplicate mu entry for (" +
                                verts_[from] + "," + verts_[to] + ")");
  if (value != 0) mu_.emplace(key, value);
}

Rational WGraph::mu(std::size_t from, std::size_t to) const {
  const auto it = mu_.find({from, to});
  return it == mu_.end() ? Rational(0) : it->second;
}

Rep wgraph_action(const WGraph& p) {
  const std::size_t n = p.vertex_count();
  const RatFun u = RatFun::u();
  const RatFun u2 = u * u;
  Rep rho(p.cm().size(), Matrix(n, n));
  for (std::size_t s = 0; s < p.cm().size(); ++s) {
    const GenSet bit = GenSet{1} << s;
    Matrix& m = rho[s];
    for (std::size_t x = 0; x < n; ++x) {
      if (p.labels(x) & bit) {
        m.at(x, x) = RatFun(-1);
      } else {
        m.at(x, x) = u2;
        for (std::size_t z = 0; z < n; ++z) {
          if (!(p.labels(z) & bit)) continue;
          const Rational w = p.mu(z, x);
          if (w != 0) m.at(z, x) = u * RatFun(w);
        }
      }
    }
  }
  return rho;
}

RepCheck validate_wgraph(const WGraph& p) {
  return check_representation(p.cm(), wgraph_action(p));
}

std::map<GenSet, std::size_t> wgraph_counts(const WGraph& p) {
  std::map<GenSet, std::size_t> table;
  for (std::size_t x = 0; x < p.vertex_count(); ++x) ++table[p.labels(x)];
  return table;
}

WGraph restrict_wgraph(const WGraph& p, GenSet J) {
  if ((J & ~p.cm().full_set()) != 0)
    throw std::invalid_argument("restrict: not a subset of the generators");
  const CoxeterMatrix sub = p.cm().restricted(J);
  WGraph r(sub);
  for (std::size_t x = 0; x < p.vertex_count(); ++x) {
    GenSet mapped = 0;
    for (std::size_t i = 0; i < p.cm().size(); ++i) {
      if (!(p.labels(x) & J & (GenSet{1} << i))) continue;
      mapped |= GenSet{1} << *sub.index(p.cm().name(i));
    }
    r.add_vertex(p.vertex_name(x), mapped);
  }
  for (const auto& [key, value] : p.mu_entries())
    r.set_mu_by_index(key.first, key.second, value);
  return r;
}

IndSupportCheck ind_support_check(const WGraph& p) {
  IndSupportCheck result;
  const Rep rho = wgraph_action(p);
  const RatFun u2 = RatFun::u() * RatFun::u();
  result.ind_dim = eigenspace_dim(
      rho, std::vector<RatFun>(rho.size(), u2), p.vertex_count());
  for (std::size_t x = 0; x < p.vertex_count(); ++x)
    if (p.labels(x) == 0) result.has_empty_label = true;
  result.ok = result.ind_dim == 0 || result.has_empty_label;
  return result;
}

M0Check m0_invariance_check(const WGraph& p) {
  M0Check result;
  const Rep rho = wgraph_action(p);
  for (std::size_t s = 0; s < rho.size(); ++s)
    for (std::size_t x = 0; x < p.vertex_count(); ++x) {
      if (p.labels(x) == 0) continue;  // columns spanning M0 only
      for (std::size_t z = 0; z < p.vertex_count(); ++z) {
        if (p.labels(z) != 0) continue;
        if (!rho[s].at(z, x).is_zero())
          result.violations.push_back(
              "T_" + p.cm().name(s) + " maps '" + p.vertex_name(x) +
              "' outside the span (component at '" + p.vertex_name(z) + "')");
      }
    }
  result.ok = result.violations.empty();
  return result;
}

}  // namespace wdg
