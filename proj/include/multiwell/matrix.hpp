#pragma once

#include <cstddef>
#include <vector>

namespace multiwell {

/// Minimal dense square matrix for the small (N <= handful) overlap, Gram and
/// variational matrices. Row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

  double max_abs_offdiagonal() const;
  double max_asymmetry() const;  // max |a_ij - a_ji|

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Matrix m);

/// Eigenvalues of the symmetric-definite pencil A v = mu S v (S positive
/// definite), ascending. Reduces via the Cholesky factor of S.
std::vector<double> generalized_eigenvalues(const Matrix& a, const Matrix& s);

/// Smallest eigenvalue of a symmetric matrix (rank/conditioning probes).
double smallest_eigenvalue(const Matrix& m);

}  // namespace multiwell
