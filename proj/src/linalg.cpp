#include "anglegauge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace anglegauge {

double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const Vector& x) { return std::sqrt(dot(x, x)); }

Vector scaled(const Vector& x, double alpha) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = alpha * x[i];
  return r;
}

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("add: dimension mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ShapeError("sub: dimension mismatch");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vector normalized(const Vector& x) {
  const double n = norm(x);
  if (n <= 1e-300) throw ZeroVector("normalized: vector norm is numerically zero");
  return scaled(x, 1.0 / n);
}

bool all_finite(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) throw ShapeError("Matrix: dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw ShapeError("Matrix: dimensions must be >= 1");
  if (data_.size() != rows * cols)
    throw ShapeError("Matrix: data length does not match rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw ShapeError("apply: dimension mismatch");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += data_[i * cols_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("matmul: dimension mismatch");
  Matrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("add: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + rhs.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("sub: shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
  return r;
}

Matrix Matrix::scaled(double alpha) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = alpha * data_[i];
  return r;
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void Matrix::require_finite() const {
  if (!all_finite()) throw NonFiniteInput("matrix contains NaN or Inf entries");
}

namespace {

// Fill columns [filled, total) of U with unit vectors orthogonal to the
// existing ones, chosen deterministically from the standard basis.
void complete_orthonormal(Matrix& u, std::size_t filled) {
  const std::size_t m = u.rows();
  const std::size_t total = u.cols();
  for (std::size_t k = filled; k < total; ++k) {
    Vector best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < m; ++e) {
      Vector cand(m, 0.0);
      cand[e] = 1.0;
      for (std::size_t j = 0; j < k; ++j) {
        const Vector uj = u.column(j);
        const double p = dot(cand, uj);
        for (std::size_t i = 0; i < m; ++i) cand[i] -= p * uj[i];
      }
      const double r = norm(cand);
      if (r > best_norm) {
        best_norm = r;
        best = std::move(cand);
      }
    }
    best = normalized(best);
    for (std::size_t i = 0; i < m; ++i) u(i, k) = best[i];
  }
}

// Core one-sided Jacobi on a tall matrix (rows >= cols).
SvdResult svd_tall(const Matrix& T) {
  const std::size_t m = T.rows();
  const std::size_t n = T.cols();
  Matrix a = T;
  Matrix v = Matrix::identity(n);
  const double frob = T.frobenius_norm();

  if (frob > 0.0) {
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool rotated = false;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          double app = 0.0, aqq = 0.0, apq = 0.0;
          for (std::size_t i = 0; i < m; ++i) {
            app += a(i, p) * a(i, p);
            aqq += a(i, q) * a(i, q);
            apq += a(i, p) * a(i, q);
          }
          // Per-pair relative threshold keeps the normalized left vectors
          // orthogonal even for badly conditioned inputs.
          if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
          rotated = true;
          const double zeta = (aqq - app) / (2.0 * apq);
          const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
          const double cs = 1.0 / std::sqrt(1.0 + t * t);
          const double sn = cs * t;
          for (std::size_t i = 0; i < m; ++i) {
            const double ap = a(i, p), aq = a(i, q);
            a(i, p) = cs * ap - sn * aq;
            a(i, q) = sn * ap + cs * aq;
          }
          for (std::size_t i = 0; i < n; ++i) {
            const double vp = v(i, p), vq = v(i, q);
            v(i, p) = cs * vp - sn * vq;
            v(i, q) = sn * vp + cs * vq;
          }
        }
      }
      if (!rotated) break;
    }
  }

  std::vector<double> sig(n);
  for (std::size_t j = 0; j < n; ++j) sig[j] = norm(a.column(j));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sig[i] > sig[j]; });

  Matrix u(m, n);
  Matrix vr(n, n);
  std::vector<double> s(n);
  std::size_t filled = 0;
  const double drop = 1e-15 * frob;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    s[k] = sig[j];
    for (std::size_t i = 0; i < n; ++i) vr(i, k) = v(i, j);
    if (sig[j] > drop) {
      for (std::size_t i = 0; i < m; ++i) u(i, k) = a(i, j) / sig[j];
      ++filled;
    }
  }
  // Columns with negligible norm get orthonormal padding on the left factor;
  // the reconstruction error this introduces is below the drop threshold.
  if (filled < n) {
    // compact the filled columns first so padding sees only valid ones
    Matrix uc(m, n);
    std::size_t w = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (s[k] > drop) {
        for (std::size_t i = 0; i < m; ++i) uc(i, w) = u(i, k);
        ++w;
      }
    }
    complete_orthonormal(uc, w);
    // valid columns are a prefix after the descending sort
    u = std::move(uc);
  }
  return SvdResult{std::move(u), std::move(s), std::move(vr)};
}

void fix_signs(SvdResult& r) {
  const std::size_t n = r.right.rows();
  const std::size_t m = r.left.rows();
  for (std::size_t k = 0; k < r.singular_values.size(); ++k) {
    double lead = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (r.right(i, k) != 0.0) {
        lead = r.right(i, k);
        break;
      }
    }
    if (lead < 0.0) {
      for (std::size_t i = 0; i < n; ++i) r.right(i, k) = -r.right(i, k);
      for (std::size_t i = 0; i < m; ++i) r.left(i, k) = -r.left(i, k);
    }
  }
}

}  // namespace

SvdResult svd(const Matrix& T) {
  T.require_finite();
  SvdResult r = T.rows() >= T.cols() ? svd_tall(T) : [&] {
    SvdResult f = svd_tall(T.transposed());
    return SvdResult{std::move(f.right), std::move(f.singular_values),
                     std::move(f.left)};
  }();
  fix_signs(r);
  return r;
}

double operator_norm(const Matrix& T) {
  return svd(T).singular_values.front();
}

double min_modulus(const Matrix& T) {
  if (T.cols() > T.rows()) {
    T.require_finite();
    return 0.0;  // nontrivial kernel
  }
  return svd(T).singular_values.back();
}

std::vector<Vector> singular_basis(const Matrix& T) {
  if (T.cols() > T.rows())
    throw ShapeError("singular_basis: map with cols > rows has a kernel");
  const SvdResult r = svd(T);
  const double op = r.singular_values.front();
  const double mm = r.singular_values.back();
  if (mm <= kInjectivityRelTol * op)
    throw NotInjective("singular_basis: minimum modulus is numerically zero");
  std::vector<Vector> basis;
  basis.reserve(T.cols());
  for (std::size_t k = T.cols(); k-- > 0;) basis.push_back(r.right.column(k));
  return basis;
}

Matrix inverse(const Matrix& T) {
  if (T.rows() != T.cols()) throw ShapeError("inverse: matrix must be square");
  const SvdResult r = svd(T);
  const std::size_t n = T.rows();
  const double op = r.singular_values.front();
  if (op == 0.0 || r.singular_values.back() <= kInjectivityRelTol * op)
    throw NotInjective("inverse: matrix is numerically singular");
  // T^-1 = V diag(1/s) U^T
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += r.right(i, k) / r.singular_values[k] * r.left(j, k);
      inv(i, j) = s;
    }
  return inv;
}

}  // namespace anglegauge
