#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wdg/coxeter.hpp"

namespace wdg {

enum class EdgeKind { solid, dashed };

struct DigraphEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::size_t label = 0;
  EdgeKind kind = EdgeKind::solid;
  auto operator<=>(const DigraphEdge&) const = default;
};

// Directed graph with generator-labeled solid/dashed edges. Vertices keep
// declaration order; matrices and reports use that order.
class WDigraph {
 public:
  WDigraph() = default;
  explicit WDigraph(CoxeterMatrix cm) : cm_(std::move(cm)) {}

  const CoxeterMatrix& cm() const { return cm_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<std::string>& vertices() const { return verts_; }
  const std::string& vertex_name(std::size_t i) const { return verts_[i]; }
  std::optional<std::size_t> vertex_index(const std::string& name) const;
  const std::vector<DigraphEdge>& edges() const { return edges_; }

  void add_vertex(const std::string& name);  // throws on duplicate
  // Throws on unknown vertex/generator, src == dst, or duplicate
  // (src, dst, label) triple. Structural axioms are checked separately.
  void add_edge(const std::string& src, const std::string& dst,
                const std::string& gen, EdgeKind kind);
  void add_edge_by_index(std::size_t src, std::size_t dst, std::size_t label,
                         EdgeKind kind);

  bool operator==(const WDigraph& o) const;

 private:
  CoxeterMatrix cm_;
  std::vector<std::string> verts_;
  std::vector<DigraphEdge> edges_;
};

struct InProfile {
  std::vector<GenSet> in_sets;           // per vertex
  std::map<GenSet, std::size_t> table;   // nonzero counts only
  std::size_t count(GenSet J) const;
  std::size_t sources() const { return count(0); }
  std::size_t sinks(const CoxeterMatrix& cm) const;
};

struct Components {
  std::vector<std::size_t> comp_of;  // per vertex
  std::size_t count = 0;
  std::vector<bool> acyclic;         // per component
  std::size_t acyclic_count() const;
};

struct WalkStep {
  std::size_t edge = 0;
  bool forward = true;
};

// One edge per (vertex, generator) incidence, distinct endpoints, no
// duplicated (endpoints, label). Violations returned as data.
std::vector<std::string> structural_violations(const WDigraph& g);

struct DigraphValidation {
  std::vector<std::string> structural;
  RepCheck relations;
  bool ok() const { return structural.empty() && relations.ok(); }
};

// Structure axioms plus the quadratic/braid identities on the action
// matrices ("valid" in the operational sense).
DigraphValidation validate_digraph(const WDigraph& g);

// Generator action on the vertex basis. Solid edge a -> b labeled s:
// T_s a = b, T_s b = u^2 a + (u^2-1) b. Dashed edge a ~> b labeled s:
// T_s a = u a + (u+1) b, T_s b = (u^2-u) a + (u^2-u-1) b.
// Throws std::invalid_argument if the structure axioms fail.
Rep digraph_action(const WDigraph& g);

InProfile in_profile(const WDigraph& g);

// Connected components ignore edge direction; a component is acyclic iff
// its directed edges admit a topological order.
Components components_and_acyclicity(const WDigraph& g);

// Keeps edges with labels in J and restricts the Coxeter matrix to J.
WDigraph restrict_digraph(const WDigraph& g, GenSet J);

RatFun step_ratio(EdgeKind kind, bool forward);

// Product of step ratios; consecutive steps must share a vertex.
RatFun walk_ratio(const WDigraph& g, const std::vector<WalkStep>& walk);

// Number of connected components (multiplicity of the u^2-eigenvalue
// character, counted combinatorially).
std::size_t ind_mult_combinatorial(const WDigraph& g);

// Per component: propagate a coefficient along a spanning tree from the
// lexicographically least vertex with step ratios, then check every
// non-tree edge; consistent components count 1.
std::size_t sgn_mult_combinatorial(const WDigraph& g);

}  // namespace wdg
