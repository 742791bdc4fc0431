#include "multiwell/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace multiwell {

double Matrix::max_abs_offdiagonal() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j) worst = std::max(worst, std::abs((*this)(i, j)));
  return worst;
}

double Matrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

std::vector<double> symmetric_eigenvalues(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return {};

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
    if (std::sqrt(off) <= 1e-15 * scale * static_cast<double>(n)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = m(k, p), akq = m(k, q);
          m(k, p) = c * akp - s * akq;
          m(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = m(p, k), aqk = m(q, k);
          m(p, k) = c * apk - s * aqk;
          m(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = m(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

namespace {

// Lower Cholesky factor; throws if the matrix is not positive definite.
Matrix cholesky(const Matrix& s) {
  const std::size_t n = s.size();
  Matrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = s(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (sum <= 0.0)
          throw std::invalid_argument(
              "generalized_eigenvalues: metric matrix is not positive definite");
        l(i, i) = std::sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

}  // namespace

std::vector<double> generalized_eigenvalues(const Matrix& a, const Matrix& s) {
  const std::size_t n = a.size();
  if (s.size() != n)
    throw std::invalid_argument("generalized_eigenvalues: size mismatch");
  const Matrix l = cholesky(s);

  // C = L^-1 A L^-T, formed column by column with forward substitutions.
  Matrix y(n);  // Y = L^-1 A
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      double sum = a(i, col);
      for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * y(k, col);
      y(i, col) = sum / l(i, i);
    }
  }
  Matrix c(n);  // C^T = L^-1 Y^T, i.e. solve on the right
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = y(row, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(j, k) * c(row, k);
      c(row, j) = sum / l(j, j);
    }
  }
  // symmetrize against rounding
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (c(i, j) + c(j, i));
      c(i, j) = v;
      c(j, i) = v;
    }
  return symmetric_eigenvalues(c);
}

double smallest_eigenvalue(const Matrix& m) {
  const auto eigs = symmetric_eigenvalues(m);
  if (eigs.empty())
    throw std::invalid_argument("smallest_eigenvalue: empty matrix");
  return eigs.front();
}

}  // namespace multiwell
