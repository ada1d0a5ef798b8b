#pragma once

#include <utility>

#include "anglegauge/linalg.hpp"

namespace anglegauge {

/// The fixed cosine parameter c, restricted to the open interval (-1, 1).
class AngleConstant {
public:
  explicit AngleConstant(double c);
  double value() const noexcept { return c_; }
  double abs() const noexcept { return c_ < 0.0 ? -c_ : c_; }
  AngleConstant negated() const { return AngleConstant(-c_); }

private:
  double c_;
};

/// <x,y> / (||x|| ||y||), clamped to [-1, 1]. Throws ZeroVector.
double cosine(const Vector& x, const Vector& y);

/// |<x,y> - c||x|| ||y||| <= tol ||x|| ||y||
bool is_angle_c(const Vector& x, const Vector& y, AngleConstant c, double tol);

/// |<x,y> - c||x|| ||y||| <= eps ||x|| ||y||
bool is_approx_angle_c(const Vector& x, const Vector& y, AngleConstant c,
                       double eps);

/// Given orthonormal (x, w), returns (x, c x + sqrt(1-c^2) w); the second
/// vector is unit and the pair has cosine exactly c.
std::pair<Vector, Vector> make_angle_pair(const Vector& x, const Vector& w,
                                          AngleConstant c);

/// Two pair constructions at cosine c from an orthonormal (x, y), c >= 0:
///   opposite: (x + a y, -x + a y) with a = sqrt((1+c)/(1-c))
///   mirrored: (x + b y,  x - b y) with b = sqrt((1-c)/(1+c))
struct AnglePairs {
  std::pair<Vector, Vector> opposite;
  std::pair<Vector, Vector> mirrored;
};
AnglePairs angle_pairs(const Vector& x, const Vector& y, AngleConstant c);

}  // namespace anglegauge
