#include "wdg/linalg.hpp"

#include <stdexcept>

namespace wdg {

std::vector<std::size_t> rref_inplace(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(pr, j), m.at(row, j));
    const RatFun inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const RatFun f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return rref_inplace(r).size();
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim) return false;
  // Reduce v against the canonical basis (pivot columns are cleared).
  Vec r = v;
  for (const Vec& b : basis) {
    std::size_t pivot = 0;
    while (pivot < ambient_dim && b[pivot].is_zero()) ++pivot;
    if (pivot == ambient_dim) continue;
    const RatFun f = r[pivot];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim; ++j) r[j] -= f * b[j];
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

Subspace make_subspace(std::size_t ambient_dim, std::vector<Vec> vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument("subspace: vector length mismatch");
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
  const auto pivots = rref_inplace(m);
  Subspace s;
  s.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Vec v(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) v[j] = m.at(i, j);
    s.basis.push_back(std::move(v));
  }
  return s;
}

Subspace nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref_inplace(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = RatFun(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -r.at(i, f);
    kernel.push_back(std::move(v));
  }
  return make_subspace(n, std::move(kernel));
}

std::optional<Vec> solve_unique(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != m.cols()) return std::nullopt;                     // underdetermined
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

Subspace eigenspace(const std::vector<Matrix>& mats,
                    const std::vector<RatFun>& scalars,
                    std::size_t ambient_dim) {
  if (mats.size() != scalars.size())
    throw std::invalid_argument("eigenspace: list length mismatch");
  for (const auto& m : mats)
    if (m.rows() != ambient_dim || m.cols() != ambient_dim)
      throw std::invalid_argument("eigenspace: matrix size mismatch");
  if (mats.empty()) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Vec v(ambient_dim);
      v[i] = RatFun(1);
      full.push_back(std::move(v));
    }
    return make_subspace(ambient_dim, std::move(full));
  }
  Matrix stacked(mats.size() * ambient_dim, ambient_dim);
  for (std::size_t s = 0; s < mats.size(); ++s)
    for (std::size_t i = 0; i < ambient_dim; ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) {
        RatFun e = mats[s].at(i, j);
        if (i == j) e -= scalars[s];
        stacked.at(s * ambient_dim + i, j) = std::move(e);
      }
  return nullspace(stacked);
}

std::size_t eigenspace_dim(const std::vector<Matrix>& mats,
                           const std::vector<RatFun>& scalars,
                           std::size_t ambient_dim) {
  return eigenspace(mats, scalars, ambient_dim).dim();
}

std::vector<Matrix> hom_space(const std::vector<Matrix>& rho_a,
                              const std::vector<Matrix>& rho_b) {
  if (rho_a.size() != rho_b.size())
    throw std::invalid_argument("hom: generator count mismatch");
  const std::size_t n = rho_a.empty() ? 0 : rho_a[0].rows();
  const std::size_t m = rho_b.empty() ? 0 : rho_b[0].rows();
  for (const auto& x : rho_a)
    if (x.rows() != n || x.cols() != n)
      throw std::invalid_argument("hom: rho_a size mismatch");
  for (const auto& x : rho_b)
    if (x.rows() != m || x.cols() != m)
      throw std::invalid_argument("hom: rho_b size mismatch");

  // Unknown A is m x n, flattened row-major: A[i][j] <-> i*n + j.
  Matrix sys(rho_a.size() * m * n, m * n);
  std::size_t eq = 0;
  for (std::size_t s = 0; s < rho_a.size(); ++s) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < m; ++k)
          sys.at(eq, k * n + c) += rho_b[s].at(r, k);
        for (std::size_t k = 0; k < n; ++k)
          sys.at(eq, r * n + k) -= rho_a[s].at(k, c);
        ++eq;
      }
  }
  const Subspace null = nullspace(sys);
  std::vector<Matrix> basis;
  for (const Vec& v : null.basis) {
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = v[i * n + j];
    basis.push_back(std::move(a));
  }
  return basis;
}

}  // namespace wdg
