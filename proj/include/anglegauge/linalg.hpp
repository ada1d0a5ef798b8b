#pragma once

#include <cstddef>
#include <vector>

#include "anglegauge/errors.hpp"

namespace anglegauge {

using Vector = std::vector<double>;

double dot(const Vector& x, const Vector& y);
double norm(const Vector& x);
Vector scaled(const Vector& x, double alpha);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
/// Throws ZeroVector when ||x|| <= 1e-300.
Vector normalized(const Vector& x);
bool all_finite(const Vector& x);

/// Dense real matrix, row-major storage.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const noexcept { return data_; }

  Vector apply(const Vector& x) const;  // T x, throws ShapeError on dim mismatch
  Matrix transposed() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(double alpha) const;
  Vector column(std::size_t j) const;

  double frobenius_norm() const;
  bool all_finite() const;
  void require_finite() const;  // throws NonFiniteInput

  bool operator==(const Matrix& rhs) const = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// T = left * diag(singular_values) * right^T with k = min(rows, cols).
/// Columns of left and right are orthonormal; singular values descend.
struct SvdResult {
  Matrix left;
  std::vector<double> singular_values;
  Matrix right;
};

/// One-sided Jacobi SVD. Deterministic: fixed sweep order, right singular
/// vectors sign-fixed so the first nonzero entry is nonnegative.
SvdResult svd(const Matrix& T);

/// Largest singular value.
double operator_norm(const Matrix& T);

/// Largest m >= 0 with ||Tx|| >= m||x||; zero when cols > rows.
double min_modulus(const Matrix& T);

/// Relative threshold below which the minimum modulus is treated as zero.
inline constexpr double kInjectivityRelTol = 1e-12;

/// Orthonormal domain basis with pairwise-orthogonal images, ordered by
/// ascending image norm; first attains [T], last attains ||T||.
/// Requires rows >= cols and an injective map.
std::vector<Vector> singular_basis(const Matrix& T);

/// Inverse of a square injective matrix via its SVD.
Matrix inverse(const Matrix& T);

}  // namespace anglegauge
