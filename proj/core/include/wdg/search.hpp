#pragma once

#include <cstdint>
#include <vector>

#include "wdg/wdigraph.hpp"

namespace wdg {

// Relabeling-invariant key: the lexicographically minimal edge encoding
// over all vertex permutations.
std::vector<std::uint32_t> canonical_encoding(const WDigraph& g);

// Enumerates all structures on up to max_vertices vertices satisfying the
// structural axioms, one representative per renaming class, and keeps those
// whose action matrices satisfy the defining relations. Deterministic
// output order. Throws std::invalid_argument if |S| > 3, |S| = 0, or
// max_vertices > 6.
std::vector<WDigraph> search_valid_digraphs(const CoxeterMatrix& cm,
                                            std::size_t max_vertices);

}  // namespace wdg
