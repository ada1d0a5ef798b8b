#include "anglegauge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "anglegauge/matrix_io.hpp"
#include "anglegauge/sampling.hpp"

namespace anglegauge {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kSampledSlack = 1e-9;
constexpr double kContinuityTol = 1e-6;

// Relative above 1, absolute below: every quantity compared here is O(1)
// bounded (eps_hat < 2), so a pure ratio would turn 1e-16-vs-0 into a full
// deviation of 1.
double rel_dev(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) / scale;
}

CheckResult make_check(std::string name, double c, double measured,
                       double threshold, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.c = c;
  r.measured = measured;
  r.threshold = threshold;
  r.status = measured <= threshold ? CheckStatus::passed : CheckStatus::failed;
  r.detail = std::move(detail);
  return r;
}

CheckResult make_skipped(std::string name, double c, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.c = c;
  r.status = CheckStatus::skipped;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::vector<CheckResult> verify_invariances(const Matrix& T, AngleConstant c,
                                            std::uint64_t seed) {
  std::vector<CheckResult> out;
  const EpsReport base = eps_hat(T, c);

  {
    double worst = 0.0;
    for (double alpha : {-3.0, 0.01, 7.0})
      worst = std::max(worst,
                       rel_dev(eps_hat(T.scaled(alpha), c).eps_hat, base.eps_hat));
    out.push_back(make_check("invariance_scale", c.value(), worst, kIdentityTol,
                             "eps_hat(alpha T) = eps_hat(T), alpha in {-3, 0.01, 7}"));
  }
  {
    const double dev = rel_dev(eps_hat(T, c.negated()).eps_hat, base.eps_hat);
    out.push_back(make_check("invariance_c_sign", c.value(), dev, kIdentityTol,
                             "eps_hat(T, -c) = eps_hat(T, c)"));
  }
  {
    Rng rng = Rng::stream(seed, 0xa17);
    const Matrix q = random_orthogonal(T.rows(), rng);
    const double dev =
        rel_dev(eps_hat((q * T).scaled(2.0), c).eps_hat, base.eps_hat);
    out.push_back(make_check("invariance_orthogonal_compose", c.value(), dev,
                             kIdentityTol,
                             "eps_hat(2 Q T) = eps_hat(T) for orthogonal Q"));
  }
  if (T.rows() == T.cols() && !base.degenerate) {
    const double dev = rel_dev(eps_hat(inverse(T), c).eps_hat, base.eps_hat);
    out.push_back(make_check("invariance_inverse", c.value(), dev, kIdentityTol,
                             "eps_hat(T^-1) = eps_hat(T)"));
  } else {
    out.push_back(make_skipped("invariance_inverse", c.value(),
                               T.rows() == T.cols()
                                   ? "map is not bounded below"
                                   : "matrix is not square"));
  }
  if (!base.degenerate) {
    Rng rng = Rng::stream(seed, 0xc0);
    Matrix e = random_matrix(T.rows(), T.cols(), rng);
    const double ef = e.frobenius_norm();
    e = e.scaled(ef > 0.0 ? 1e-8 * base.min_mod / ef : 0.0);
    const double dev = std::abs(eps_hat(T + e, c).eps_hat - base.eps_hat);
    out.push_back(make_check("continuity_perturbation", c.value(), dev,
                             kContinuityTol,
                             "|eps_hat(T+E) - eps_hat(T)| small for ||E|| <= 1e-8 [T]"));
  } else {
    out.push_back(make_skipped("continuity_perturbation", c.value(),
                               "map is not bounded below"));
  }
  return out;
}

std::vector<CheckResult> verify_bounds(const Matrix& T, AngleConstant c,
                                       std::uint64_t seed,
                                       std::uint64_t samples) {
  const EpsReport er = eps_hat(T, c);
  if (er.degenerate)
    throw NotInjective("verify_bounds: minimum modulus is numerically zero");
  const double g = min_modulus_bound(er.eps_hat, c);
  std::vector<CheckResult> out;

  {
    const double measured =
        std::abs(g * er.op_norm - er.min_mod) / er.min_mod;
    // Round-tripping through the rounded eps_hat amplifies one ulp by
    // 1/(1 - |c| - eps_hat); below that scale the identity is not decidable
    // in doubles.  The complement is computed in its cancellation-free form.
    const double a = std::abs(c.value());
    const double op2 = er.op_norm * er.op_norm;
    const double mm2 = er.min_mod * er.min_mod;
    const double complement =
        2.0 * (1.0 - a) * mm2 / ((1.0 + a) * op2 + (1.0 - a) * mm2);
    const double threshold =
        std::max(kIdentityTol, 64.0 * 2.220446049250313e-16 / complement);
    out.push_back(make_check("bound_tightness", c.value(), measured, threshold,
                             "g(eps_hat, c) ||T|| = [T]"));
  }
  {
    double worst = -1e300;
    for (std::uint64_t i = 0; i < samples; ++i) {
      Rng rng = Rng::stream(seed ^ 0x1111, i);
      const Vector x = sample_unit_vector(T.cols(), rng);
      const Vector y = sample_unit_vector(T.cols(), rng);
      worst = std::max(worst, g * norm(T.apply(x)) - norm(T.apply(y)));
    }
    out.push_back(make_check("bound_pair_ratio", c.value(), worst, kSampledSlack,
                             "g ||Tx|| ||y|| <= ||Ty|| ||x|| on sampled pairs"));
  }
  {
    double worst = -1e300;
    for (std::uint64_t i = 0; i < samples; ++i) {
      Rng rng = Rng::stream(seed ^ 0x2222, i);
      const Vector x = sample_unit_vector(T.cols(), rng);
      const double tx = norm(T.apply(x));
      worst = std::max({worst, g * er.op_norm - tx, tx - er.op_norm});
    }
    out.push_back(make_check("bound_norm_sandwich", c.value(), worst,
                             kSampledSlack,
                             "g ||T|| ||x|| <= ||Tx|| <= ||T|| ||x|| on sampled x"));
  }
  {
    const double eps_t = orthogonality_eps(T);
    const double worst =
        max_orthogonal_cosine(T, samples, seed ^ 0x3333) - eps_t;
    out.push_back(make_check("bound_orthogonality", c.value(), worst,
                             kSampledSlack,
                             "|cos(Tx,Ty)| <= 1 - [T]^2/||T||^2 on orthogonal pairs"));
  }
  {
    const GammaCertificate cert = gamma_certificate(T);
    const double worst = std::max({cert.defect - cert.bound,
                                   cert.lower - cert.gamma,
                                   cert.gamma - cert.upper});
    out.push_back(make_check("bound_gamma_certificate", c.value(), worst,
                             kSampledSlack,
                             "||T^T T - gamma I|| <= bound, gamma in window"));
  }
  return out;
}

CheckResult verify_sampling_consistency(const Matrix& T, AngleConstant c,
                                        std::uint64_t seed,
                                        std::uint64_t samples) {
  const EpsReport er = eps_hat(T, c);
  if (er.degenerate)
    throw NotInjective(
        "verify_sampling_consistency: minimum modulus is numerically zero");
  const double emp = eps_hat_empirical(T, c, samples, seed, false);
  const double emp_wit = eps_hat_empirical(T, c, samples, seed, true);
  const double measured = std::max(emp - er.eps_hat, er.eps_hat - emp_wit);
  return make_check("sampling_consistency", c.value(), measured, kSampledSlack,
                    "random estimate below closed form; witness attains it");
}

VerificationReport full_report(const Matrix& T,
                               const std::vector<double>& c_values,
                               std::uint64_t seed, std::uint64_t samples) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.matrix_digest = matrix_digest(T);
  rep.c_values = c_values;
  rep.seed = seed;
  rep.samples = samples;

  static const char* kBoundNames[] = {
      "bound_tightness", "bound_pair_ratio", "bound_norm_sandwich",
      "bound_orthogonality", "bound_gamma_certificate"};

  for (double cv : c_values) {
    const AngleConstant c(cv);
    const EpsReport er = eps_hat(T, c);  // throws ZeroMap for the zero map
    rep.eps_reports.push_back(er);
    auto inv = verify_invariances(T, c, seed);
    rep.checks.insert(rep.checks.end(), inv.begin(), inv.end());
    if (er.degenerate) {
      for (const char* name : kBoundNames)
        rep.checks.push_back(
            make_skipped(name, cv, "map is not bounded below"));
      rep.checks.push_back(make_skipped("sampling_consistency", cv,
                                        "map is not bounded below"));
    } else {
      auto bounds = verify_bounds(T, c, seed, samples);
      rep.checks.insert(rep.checks.end(), bounds.begin(), bounds.end());
      rep.checks.push_back(verify_sampling_consistency(T, c, seed, samples));
    }
  }

  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.name != b.name) return a.name < b.name;
                     return a.c < b.c;
                   });
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace anglegauge
