#include "wdg/matrix.hpp"

#include <stdexcept>

namespace wdg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFun(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatFun Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("matrix: trace of non-square");
  RatFun t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix: shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix: shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix: shape mismatch in *");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFun& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RatFun& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix operator*(const RatFun& c, Matrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) *= c;
  return a;
}

RatFun det_bareiss(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return RatFun(1);

  // Clear denominators per row; det(m) = det(P) / prod of row multipliers.
  std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n));
  Poly denom_scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Poly row_lcm(1);
    for (std::size_t j = 0; j < n; ++j) row_lcm = lcm(row_lcm, m.at(i, j).den());
    for (std::size_t j = 0; j < n; ++j)
      p[i][j] = m.at(i, j).num() * Poly::exact_div(row_lcm, m.at(i, j).den());
    denom_scale *= row_lcm;
  }

  bool negate = false;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (p[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && p[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return RatFun();
      std::swap(p[k], p[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        // Bareiss identity: this division is exact over Q[u].
        p[i][j] = Poly::exact_div(p[k][k] * p[i][j] - p[i][k] * p[k][j], prev);
      p[i][k] = Poly();
    }
    prev = p[k][k];
  }
  Poly det = p[n - 1][n - 1];
  if (negate) det = -det;
  return RatFun(det, denom_scale);
}

}  // namespace wdg
