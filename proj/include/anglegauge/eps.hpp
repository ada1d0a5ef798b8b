#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "anglegauge/angle.hpp"
#include "anglegauge/linalg.hpp"

namespace anglegauge {

/// Result of the angle-distortion analysis for one (T, c).
struct EpsReport {
  double c = 0.0;
  double op_norm = 0.0;
  double min_mod = 0.0;
  double eps_hat = 0.0;
  bool degenerate = false;  // min modulus numerically zero, sentinel 1+|c|
  std::optional<std::pair<Vector, Vector>> witness;
  std::optional<double> witness_value;
  std::optional<double> empirical_sup;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
};

struct Witness {
  Vector u;
  Vector v;
  double value;  // |cos(Tu, Tv) - c|
};

struct GammaCertificate {
  double gamma;
  double defect;  // ||T^T T - gamma I|| (spectral)
  double bound;   // (1 - [T]^2/||T||^2) ||T||^2
  double lower;   // [T]^2
  double upper;   // 2||T||^2 - [T]^2
};

/// Closed-form distortion from the spectrum alone. op_norm > 0 required.
double eps_hat_value(double op_norm, double min_mod, AngleConstant c);

/// Smallest eps for which T maps cosine-c pairs to cosine within eps of c.
/// Sentinel 1+|c| when the map is not bounded below. Throws ZeroMap.
EpsReport eps_hat(const Matrix& T, AngleConstant c);

/// Pair at cosine c whose images attain eps_hat, built from the extreme
/// right singular vectors. Requires an injective map with rows >= cols.
Witness extremal_witness(const Matrix& T, AngleConstant c);

/// Monte-Carlo sup estimate over sampled cosine-c unit pairs. Deterministic
/// for fixed (seed, samples); with include_witness the extremal pair joins
/// the candidate set and the estimate becomes exact. OpenMP-parallel;
/// result is identical to the serial reference.
double eps_hat_empirical(const Matrix& T, AngleConstant c,
                         std::uint64_t samples, std::uint64_t seed,
                         bool include_witness);

/// Serial reference implementation of eps_hat_empirical.
double eps_hat_empirical_serial(const Matrix& T, AngleConstant c,
                                std::uint64_t samples, std::uint64_t seed,
                                bool include_witness);

/// Worst |cos(Tx, Tw)| over sampled orthonormal pairs (x, w). OpenMP-parallel
/// with a serial reference; both give the identical max for a fixed seed.
double max_orthogonal_cosine(const Matrix& T, std::uint64_t samples,
                             std::uint64_t seed);
double max_orthogonal_cosine_serial(const Matrix& T, std::uint64_t samples,
                                    std::uint64_t seed);

/// 1 - [T]^2/||T||^2; every orthogonal pair is bent by at most this much.
double orthogonality_eps(const Matrix& T);

/// gamma = (||T||^2 + [T]^2)/2 with defect ||T^T T - gamma I|| certified
/// against the bound (1 - [T]^2/||T||^2) ||T||^2.
GammaCertificate gamma_certificate(const Matrix& T);

/// Guaranteed [T]/||T|| ratio for any (eps, c)-angle preserving map:
/// sqrt((1+|c|)(1-|c|-eps) / ((1-|c|)(1+|c|+eps))).
/// Throws DomainError when eps > 1-|c| (radicand negative, bound vacuous).
double min_modulus_bound(double eps, AngleConstant c);

/// [T] > rel_tol ||T||; equivalent to eps_hat < 1+|c| for every c.
bool is_bounded_below(const Matrix& T, double rel_tol = kInjectivityRelTol);

}  // namespace anglegauge
