#pragma once

#include <cstddef>
#include <vector>

#include "wdg/ratfun.hpp"

namespace wdg {

// Dense matrix over Q(u), row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RatFun& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RatFun& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Matrix transpose() const;
  RatFun trace() const;  // requires square
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RatFun& c, Matrix a);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RatFun> entries_;
};

// Exact determinant: clears denominators per row, runs fraction-free
// Bareiss elimination over Q[u], then restores the cleared scalar.
// Throws std::invalid_argument if the matrix is not square.
RatFun det_bareiss(const Matrix& m);

}  // namespace wdg
