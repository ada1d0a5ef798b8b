#include "anglegauge/angle.hpp"

#include <algorithm>
#include <cmath>

namespace anglegauge {

namespace {

double checked_norm(const Vector& v, const char* who) {
  const double n = norm(v);
  if (n <= 1e-300) throw ZeroVector(std::string(who) + ": zero vector");
  return n;
}

void require_orthonormal(const Vector& x, const Vector& w, const char* who) {
  if (x.size() != w.size()) throw ShapeError(std::string(who) + ": dimension mismatch");
  if (std::abs(norm(x) - 1.0) > 1e-10 || std::abs(norm(w) - 1.0) > 1e-10 ||
      std::abs(dot(x, w)) > 1e-10)
    throw NotOrthonormal(std::string(who) + ": inputs are not an orthonormal pair");
}

}  // namespace

AngleConstant::AngleConstant(double c) : c_(c) {
  if (!(c > -1.0 && c < 1.0))
    throw DomainError("AngleConstant: c must lie strictly in (-1, 1)");
}

double cosine(const Vector& x, const Vector& y) {
  const double nx = checked_norm(x, "cosine");
  const double ny = checked_norm(y, "cosine");
  return std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
}

bool is_angle_c(const Vector& x, const Vector& y, AngleConstant c, double tol) {
  const double nx = checked_norm(x, "is_angle_c");
  const double ny = checked_norm(y, "is_angle_c");
  return std::abs(dot(x, y) - c.value() * nx * ny) <= tol * nx * ny;
}

bool is_approx_angle_c(const Vector& x, const Vector& y, AngleConstant c,
                       double eps) {
  const double nx = checked_norm(x, "is_approx_angle_c");
  const double ny = checked_norm(y, "is_approx_angle_c");
  return std::abs(dot(x, y) - c.value() * nx * ny) <= eps * nx * ny;
}

std::pair<Vector, Vector> make_angle_pair(const Vector& x, const Vector& w,
                                          AngleConstant c) {
  require_orthonormal(x, w, "make_angle_pair");
  const double s = std::sqrt(1.0 - c.value() * c.value());
  return {x, add(scaled(x, c.value()), scaled(w, s))};
}

AnglePairs angle_pairs(const Vector& x, const Vector& y, AngleConstant c) {
  require_orthonormal(x, y, "angle_pairs");
  if (c.value() < 0.0)
    throw DomainError(
        "angle_pairs: constructions require c >= 0; use the c -> -c symmetry");
  const double a = std::sqrt((1.0 + c.value()) / (1.0 - c.value()));
  const double b = std::sqrt((1.0 - c.value()) / (1.0 + c.value()));
  AnglePairs out;
  out.opposite = {add(x, scaled(y, a)), add(scaled(x, -1.0), scaled(y, a))};
  out.mirrored = {add(x, scaled(y, b)), sub(x, scaled(y, b))};
  return out;
}

}  // namespace anglegauge
