#include "anglegauge/eps.hpp"

#include <algorithm>
#include <cmath>

#include "anglegauge/sampling.hpp"

namespace anglegauge {

namespace {

struct Spectrum {
  double op;
  double mm;
};

Spectrum spectrum(const Matrix& T) {
  const SvdResult r = svd(T);
  const double op = r.singular_values.front();
  const double mm = T.cols() > T.rows() ? 0.0 : r.singular_values.back();
  return {op, mm};
}

// One sampled cosine-c pair; returns the one-sided image deviation
// cos(Tx, Ty) - c (mirrored for c < 0), or flags collapse when an image norm
// underflows.  The closed form bounds the deviation on this side only: images
// of an angle-c pair can dip arbitrarily far below c (toward -1) for badly
// conditioned maps, so a two-sided measure would not be comparable to eps_hat.
double sampled_deviation(const Matrix& T, double c, std::uint64_t seed,
                         std::uint64_t index, bool& collapsed) {
  Rng rng = Rng::stream(seed, index);
  const auto [x, w] = sample_orthonormal_pair(T.cols(), rng);
  const auto [px, py] = make_angle_pair(x, w, AngleConstant(c));
  const Vector tx = T.apply(px);
  const Vector ty = T.apply(py);
  if (norm(tx) <= 1e-300 || norm(ty) <= 1e-300) {
    collapsed = true;
    return 0.0;
  }
  const double dev = cosine(tx, ty) - c;
  return c < 0.0 ? -dev : dev;
}

}  // namespace

double eps_hat_value(double op_norm, double min_mod, AngleConstant c) {
  if (op_norm <= 0.0) throw ZeroMap("eps_hat: operator norm is zero");
  const double a = c.abs();
  if (min_mod <= kInjectivityRelTol * op_norm) return 1.0 + a;
  const double op2 = op_norm * op_norm;
  const double mm2 = min_mod * min_mod;
  return (1.0 - a * a) * (op2 - mm2) / ((1.0 + a) * op2 + (1.0 - a) * mm2);
}

EpsReport eps_hat(const Matrix& T, AngleConstant c) {
  const auto [op, mm] = spectrum(T);
  if (op <= 0.0) throw ZeroMap("eps_hat: T is the zero map");
  EpsReport r;
  r.c = c.value();
  r.op_norm = op;
  r.min_mod = mm;
  r.degenerate = mm <= kInjectivityRelTol * op;
  r.eps_hat = eps_hat_value(op, mm, c);
  return r;
}

Witness extremal_witness(const Matrix& T, AngleConstant c) {
  const auto basis = singular_basis(T);  // throws ShapeError / NotInjective
  const Vector& x_min = basis.front();
  const Vector& x_max = basis.back();
  const double a = c.abs();
  const double lam = std::sqrt((1.0 - a) / (1.0 + a));
  Vector u = add(x_max, scaled(x_min, lam));
  Vector v = sub(x_max, scaled(x_min, lam));
  // A pair at cosine |c|; negating one side flips the sign on both sides of
  // the relation, giving the witness for negative c with the same deviation.
  if (c.value() < 0.0) v = scaled(v, -1.0);
  const double value = std::abs(cosine(T.apply(u), T.apply(v)) - c.value());
  return Witness{std::move(u), std::move(v), value};
}

double eps_hat_empirical_serial(const Matrix& T, AngleConstant c,
                                std::uint64_t samples, std::uint64_t seed,
                                bool include_witness) {
  if (operator_norm(T) <= 0.0)
    throw ZeroMap("eps_hat_empirical: T is the zero map");
  double best = 0.0;
  bool collapsed = false;
  for (std::uint64_t i = 0; i < samples; ++i)
    best = std::max(best, sampled_deviation(T, c.value(), seed, i, collapsed));
  if (collapsed)
    throw ImageCollapse("eps_hat_empirical: a sampled image has zero norm");
  if (include_witness) best = std::max(best, extremal_witness(T, c).value);
  return best;
}

double eps_hat_empirical(const Matrix& T, AngleConstant c,
                         std::uint64_t samples, std::uint64_t seed,
                         bool include_witness) {
  if (operator_norm(T) <= 0.0)
    throw ZeroMap("eps_hat_empirical: T is the zero map");
  double best = 0.0;
  bool collapsed = false;
  const std::int64_t n = static_cast<std::int64_t>(samples);
#pragma omp parallel for reduction(max : best) reduction(|| : collapsed) \
    schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    bool local = false;
    const double d = sampled_deviation(T, c.value(), seed,
                                       static_cast<std::uint64_t>(i), local);
    if (local) collapsed = true;
    best = std::max(best, d);
  }
  if (collapsed)
    throw ImageCollapse("eps_hat_empirical: a sampled image has zero norm");
  if (include_witness) best = std::max(best, extremal_witness(T, c).value);
  return best;
}

namespace {

double orthogonal_cosine_sample(const Matrix& T, std::uint64_t seed,
                                std::uint64_t index) {
  Rng rng = Rng::stream(seed, index);
  const auto [x, w] = sample_orthonormal_pair(T.cols(), rng);
  return std::abs(cosine(T.apply(x), T.apply(w)));
}

}  // namespace

double max_orthogonal_cosine_serial(const Matrix& T, std::uint64_t samples,
                                    std::uint64_t seed) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i)
    worst = std::max(worst, orthogonal_cosine_sample(T, seed, i));
  return worst;
}

double max_orthogonal_cosine(const Matrix& T, std::uint64_t samples,
                             std::uint64_t seed) {
  double worst = 0.0;
  const std::int64_t n = static_cast<std::int64_t>(samples);
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    worst = std::max(worst, orthogonal_cosine_sample(
                                T, seed, static_cast<std::uint64_t>(i)));
  return worst;
}

double orthogonality_eps(const Matrix& T) {
  const auto [op, mm] = spectrum(T);
  if (mm <= kInjectivityRelTol * op)
    throw NotInjective("orthogonality_eps: minimum modulus is numerically zero");
  return 1.0 - (mm * mm) / (op * op);
}

GammaCertificate gamma_certificate(const Matrix& T) {
  const auto [op, mm] = spectrum(T);
  if (mm <= kInjectivityRelTol * op)
    throw NotInjective("gamma_certificate: minimum modulus is numerically zero");
  const double op2 = op * op;
  const double mm2 = mm * mm;
  GammaCertificate cert;
  cert.gamma = 0.5 * (op2 + mm2);
  // T^T T - gamma I has eigenvalues s_i^2 - gamma; the midpoint choice makes
  // the spectral norm (op^2 - mm^2)/2.
  cert.defect = 0.5 * (op2 - mm2);
  cert.bound = (1.0 - mm2 / op2) * op2;
  cert.lower = mm2;
  cert.upper = 2.0 * op2 - mm2;
  return cert;
}

double min_modulus_bound(double eps, AngleConstant c) {
  const double a = c.abs();
  if (eps < 0.0 || eps >= 1.0 + a)
    throw DomainError("min_modulus_bound: eps must lie in [0, 1+|c|)");
  if (eps > 1.0 - a)
    throw DomainError("min_modulus_bound: radicand negative for eps > 1-|c|");
  return std::sqrt((1.0 + a) * (1.0 - a - eps) /
                   ((1.0 - a) * (1.0 + a + eps)));
}

bool is_bounded_below(const Matrix& T, double rel_tol) {
  const auto [op, mm] = spectrum(T);
  if (op <= 0.0) throw ZeroMap("is_bounded_below: T is the zero map");
  return mm > rel_tol * op;
}

}  // namespace anglegauge
