#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wdg/matrix.hpp"

namespace wdg {

using Vec = std::vector<RatFun>;

// Subspace of Q(u)^ambient_dim with a canonical basis: writing the basis
// vectors as the rows of a matrix gives a reduced row echelon form (pivot
// entries 1, pivot columns strictly increasing, pivot columns zero
// elsewhere). Two subspaces are equal iff their canonical bases are.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;
  bool operator==(const Subspace&) const = default;
};

// Canonicalizes a spanning set (drops dependent vectors).
Subspace make_subspace(std::size_t ambient_dim, std::vector<Vec> vectors);

// Gauss-Jordan reduction in place; returns the pivot column indices.
std::vector<std::size_t> rref_inplace(Matrix& m);
std::size_t rank(const Matrix& m);

// Canonical basis of {v : m v = 0}.
Subspace nullspace(const Matrix& m);

// Unique solution of m x = b, or nullopt if none/multiple exist.
std::optional<Vec> solve_unique(const Matrix& m, const Vec& b);

// Intersection of the eigenspaces {v : mats[i] v = scalars[i] v}. The
// ambient dimension parameter covers the empty-list convention (the full
// space). Throws std::invalid_argument on size mismatches.
Subspace eigenspace(const std::vector<Matrix>& mats,
                    const std::vector<RatFun>& scalars,
                    std::size_t ambient_dim);
std::size_t eigenspace_dim(const std::vector<Matrix>& mats,
                           const std::vector<RatFun>& scalars,
                           std::size_t ambient_dim);

// Basis of {A : rho_b[s] A = A rho_a[s] for all s}, computed as the
// nullspace of the stacked Sylvester-type system. The two lists must index
// the same generator set. A is rho_b-dim x rho_a-dim.
std::vector<Matrix> hom_space(const std::vector<Matrix>& rho_a,
                              const std::vector<Matrix>& rho_b);

}  // namespace wdg
