#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wdg/coxeter.hpp"

namespace wdg {

// Vertices carry label sets I_x, ordered pairs of distinct vertices carry
// scalar weights mu (absent pairs mean 0; self-weights are stored but never
// enter the action).
class WGraph {
 public:
  WGraph() = default;
  explicit WGraph(CoxeterMatrix cm) : cm_(std::move(cm)) {}

  const CoxeterMatrix& cm() const { return cm_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<std::string>& vertices() const { return verts_; }
  const std::string& vertex_name(std::size_t i) const { return verts_[i]; }
  std::optional<std::size_t> vertex_index(const std::string& name) const;
  GenSet labels(std::size_t i) const { return labels_[i]; }

  void add_vertex(const std::string& name, GenSet labels);
  // Throws on unknown vertex or duplicate pair; zero weights are dropped.
  void set_mu(const std::string& from, const std::string& to,
              const Rational& value);
  void set_mu_by_index(std::size_t from, std::size_t to, const Rational& value);
  Rational mu(std::size_t from, std::size_t to) const;
  const std::map<std::pair<std::size_t, std::size_t>, Rational>& mu_entries()
      const {
    return mu_;
  }

  bool operator==(const WGraph&) const = default;

 private:
  CoxeterMatrix cm_;
  std::vector<std::string> verts_;
  std::vector<GenSet> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> mu_;
};

// Generator action on the vertex basis: T_s x = -x when s is in I_x,
// otherwise T_s y = u^2 y + u * sum over {z : s in I_z} of mu(z,y) z.
Rep wgraph_action(const WGraph& p);

// A W-graph is valid iff the action matrices satisfy the defining
// relations; quadratic checks are included alongside the braid checks.
RepCheck validate_wgraph(const WGraph& p);

// Counts of vertices by label set (nonzero entries only).
std::map<GenSet, std::size_t> wgraph_counts(const WGraph& p);

// Intersects labels with J, keeps mu, restricts the Coxeter matrix.
WGraph restrict_wgraph(const WGraph& p, GenSet J);

struct IndSupportCheck {
  std::size_t ind_dim = 0;
  bool has_empty_label = false;
  bool ok = false;  // ind_dim > 0 implies some I_x is empty
};
IndSupportCheck ind_support_check(const WGraph& p);

struct M0Check {
  bool ok = false;
  std::vector<std::string> violations;
};
// Column-support check: the span of {x : I_x nonempty} is invariant under
// every generator matrix.
M0Check m0_invariance_check(const WGraph& p);

}  // namespace wdg
