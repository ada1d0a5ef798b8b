#include "anglegauge/sampling.hpp"

namespace anglegauge {

Vector sample_unit_vector(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ShapeError("sample_unit_vector: dim must be >= 1");
  while (true) {
    Vector g(dim);
    for (auto& v : g) v = rng.next_gaussian();
    const double n = norm(g);
    if (n >= 1e-8) return scaled(g, 1.0 / n);
  }
}

std::pair<Vector, Vector> sample_orthonormal_pair(std::size_t dim, Rng& rng) {
  if (dim < 2) throw ShapeError("sample_orthonormal_pair: dim must be >= 2");
  const Vector x = sample_unit_vector(dim, rng);
  while (true) {
    const Vector g = sample_unit_vector(dim, rng);
    Vector w = sub(g, scaled(x, dot(g, x)));
    const double r = norm(w);
    if (r >= 1e-8) return {x, scaled(w, 1.0 / r)};
  }
}

Matrix random_orthogonal(std::size_t n, Rng& rng) {
  Matrix q(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      Vector v(n);
      for (auto& e : v) e = rng.next_gaussian();
      for (std::size_t j = 0; j < k; ++j) {
        const Vector qj = q.column(j);
        const double p = dot(v, qj);
        for (std::size_t i = 0; i < n; ++i) v[i] -= p * qj[i];
      }
      const double r = norm(v);
      if (r >= 1e-8) {
        for (std::size_t i = 0; i < n; ++i) q(i, k) = v[i] / r;
        break;
      }
    }
  }
  return q;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_gaussian();
  return m;
}

}  // namespace anglegauge
