#pragma once

#include "wdg/wdigraph.hpp"
#include "wdg/wgraph.hpp"

namespace wdg {

// Single edge tail -> head over one generator.
WDigraph build_a1(EdgeKind kind, const std::string& gen = "s",
                  const std::string& tail = "a", const std::string& head = "b");

// Regular module of the dihedral system on {s, t} with n(s,t) = m: one
// vertex per group element (named by its alternating word, "e" for the
// identity, the longest element by its s-leading word), a solid g-edge
// w -> wg wherever wg is longer. Throws std::invalid_argument if m < 2.
WDigraph build_dihedral_regular(unsigned m);

// Two vertices x (no labels), y (label {gen}), mu(y, x) = mu.
WGraph build_a1_wgraph(const Rational& mu, const std::string& gen = "s",
                       const std::string& x = "x", const std::string& y = "y");

// Direct products over the disjoint union of the generator sets; cross
// orders are 2. Inputs must be nonempty and share no generator names; the
// result is revalidated and a failure throws std::runtime_error.
WDigraph product(const WDigraph& a, const WDigraph& b);
WGraph product(const WGraph& a, const WGraph& b);

}  // namespace wdg
