#pragma once

#include <cstddef>
#include <utility>

#include "anglegauge/linalg.hpp"
#include "anglegauge/rng.hpp"

namespace anglegauge {

/// Uniform direction on the unit sphere (normalized independent Gaussians).
Vector sample_unit_vector(std::size_t dim, Rng& rng);

/// Orthonormal pair (x, w): x uniform on the sphere, w obtained by
/// orthogonalizing a second uniform draw against x. Redraws when the
/// residual norm falls below 1e-8. Requires dim >= 2.
std::pair<Vector, Vector> sample_orthonormal_pair(std::size_t dim, Rng& rng);

/// Random n x n orthogonal matrix (Gram-Schmidt on Gaussian columns).
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// Matrix with iid standard normal entries.
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace anglegauge
