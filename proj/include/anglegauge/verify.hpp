#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anglegauge/eps.hpp"

namespace anglegauge {

enum class CheckStatus { passed, failed, skipped };

struct CheckResult {
  std::string name;
  double c = 0.0;
  CheckStatus status = CheckStatus::passed;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;

  bool passed() const { return status != CheckStatus::failed; }
};

struct VerificationReport {
  std::string matrix_digest;
  std::vector<double> c_values;
  std::vector<EpsReport> eps_reports;
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double elapsed_ms = 0.0;

  bool all_passed() const;
};

/// Invariance checks for eps_hat: scaling, sign of c, composition with a
/// scaled orthogonal map, inverse (square case), and a perturbation
/// continuity probe. Unfulfillable preconditions yield Skipped results.
std::vector<CheckResult> verify_invariances(const Matrix& T, AngleConstant c,
                                            std::uint64_t seed);

/// Quantitative bound checks: tightness of the minimum-modulus bound, the
/// two sampled norm inequalities, the orthogonality bound, and the gamma
/// certificate. Requires an injective map.
std::vector<CheckResult> verify_bounds(const Matrix& T, AngleConstant c,
                                       std::uint64_t seed,
                                       std::uint64_t samples);

/// Closed form vs Monte-Carlo estimator: random sampling stays below the
/// formula, and the witness-augmented estimate matches it.
CheckResult verify_sampling_consistency(const Matrix& T, AngleConstant c,
                                        std::uint64_t seed,
                                        std::uint64_t samples);

/// All checks for every c, in canonical order (name, then c).
VerificationReport full_report(const Matrix& T,
                               const std::vector<double>& c_values,
                               std::uint64_t seed, std::uint64_t samples);

}  // namespace anglegauge
