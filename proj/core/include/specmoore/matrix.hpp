#pragma once

#include <cstddef>
#include <vector>

namespace specmoore {

// Minimal dense real matrix, row-major. Big enough for the desk-scale
// matrices this library touches (quotients up to 40x40, graphs to a few
// hundred vertices).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  static Matrix identity(int n);
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(double s) const;

  double frobenius_norm() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sweeping
// until the off-diagonal Frobenius norm drops below 1e-12 of the full norm.
// Returned in descending order.
std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps = 100);

}  // namespace specmoore
