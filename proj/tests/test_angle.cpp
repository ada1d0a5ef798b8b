#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "anglegauge/angle.hpp"
#include "anglegauge/sampling.hpp"
#include "test_support.hpp"

using namespace anglegauge;

namespace {
const Vector e1{1.0, 0.0};
const Vector e2{0.0, 1.0};
}  // namespace

TEST_CASE("angle constant validation") {
  CHECK_NOTHROW(AngleConstant(0.0));
  CHECK_NOTHROW(AngleConstant(-0.999));
  CHECK_THROWS_AS(AngleConstant(1.0), DomainError);
  CHECK_THROWS_AS(AngleConstant(-1.0), DomainError);
  CHECK_THROWS_AS(AngleConstant(1.5), DomainError);
}

TEST_CASE("cosine golden values") {
  CHECK(cosine(e1, e1) == doctest::Approx(1.0));
  CHECK(cosine(e1, e2) == doctest::Approx(0.0));
  CHECK(cosine(e1, Vector{1.0, 1.0}) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(cosine(Vector{0.0, 0.0}, e1), ZeroVector);
}

TEST_CASE("cosine is symmetric exactly") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    Vector x(4), y(4);
    for (auto& v : x) v = rng.next_gaussian();
    for (auto& v : y) v = rng.next_gaussian();
    CHECK(cosine(x, y) == cosine(y, x));
  }
}

TEST_CASE("exact relation predicate") {
  CHECK(is_angle_c(e1, e2, AngleConstant(0.0), 0.0));
  CHECK_FALSE(is_angle_c(e1, Vector{1.0, 1.0}, AngleConstant(0.5), 1e-12));
  // constructed pair at c = 0.3
  const auto [x, y] = make_angle_pair(e1, e2, AngleConstant(0.3));
  CHECK(is_angle_c(x, y, AngleConstant(0.3), 1e-12));
}

TEST_CASE("approximate relation predicate") {
  CHECK(is_approx_angle_c(e1, Vector{1.0, 1.0}, AngleConstant(0.5), 1.5));
  CHECK(is_approx_angle_c(e1, e2, AngleConstant(0.0), 0.0));
  CHECK_FALSE(is_approx_angle_c(e1, Vector{1.0, 1.0}, AngleConstant(0.0), 0.5));
  // eps >= 1 + |c| accepts every pair
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    Vector x(3), y(3);
    for (auto& v : x) v = rng.next_gaussian();
    for (auto& v : y) v = rng.next_gaussian();
    CHECK(is_approx_angle_c(x, y, AngleConstant(-0.4), 1.4));
  }
}

TEST_CASE("make_angle_pair golden values") {
  const auto [x0, y0] = make_angle_pair(e1, e2, AngleConstant(0.0));
  CHECK(y0 == e2);
  const auto [x1, y1] = make_angle_pair(e1, e2, AngleConstant(0.5));
  CHECK(y1[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(y1[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(norm(y1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(make_angle_pair(Vector{2.0, 0.0}, e2, AngleConstant(0.3)),
                  NotOrthonormal);
  CHECK_THROWS_AS(make_angle_pair(e1, Vector{0.5, 0.5}, AngleConstant(0.3)),
                  NotOrthonormal);
}

TEST_CASE("make_angle_pair output is unit and has cosine c") {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 2 + i % 5;
    const auto [x, w] = sample_orthonormal_pair(dim, rng);
    const double c = 1.98 * rng.next_double() - 0.99;
    const auto [px, py] = make_angle_pair(x, w, AngleConstant(c));
    CHECK(norm(py) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(cosine(px, py) - c) <= 1e-12);
  }
}

TEST_CASE("pair constructions golden values at c = 0 and c = 0.5") {
  const auto p0 = angle_pairs(e1, e2, AngleConstant(0.0));
  CHECK(p0.opposite.first == Vector{1.0, 1.0});
  CHECK(p0.opposite.second == Vector{-1.0, 1.0});
  CHECK(p0.mirrored.first == Vector{1.0, 1.0});
  CHECK(p0.mirrored.second == Vector{1.0, -1.0});

  const auto p5 = angle_pairs(e1, e2, AngleConstant(0.5));
  // lambda+ = sqrt(3): cosine of the opposite pair is (-1+3)/(1+3) = 0.5
  CHECK(cosine(p5.opposite.first, p5.opposite.second) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // lambda- = 1/sqrt(3): cosine of the mirrored pair is (1-1/3)/(1+1/3) = 0.5
  CHECK(cosine(p5.mirrored.first, p5.mirrored.second) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pair constructions hold over a c grid in dims 2-6") {
  for (double c : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
    for (std::size_t dim = 2; dim <= 6; ++dim) {
      Rng rng = Rng::stream(41, dim * 100 + static_cast<std::uint64_t>(c * 100));
      const auto [x, y] = sample_orthonormal_pair(dim, rng);
      const auto pairs = angle_pairs(x, y, AngleConstant(c));
      CHECK(is_angle_c(pairs.opposite.first, pairs.opposite.second,
                       AngleConstant(c), 1e-10));
      CHECK(is_angle_c(pairs.mirrored.first, pairs.mirrored.second,
                       AngleConstant(c), 1e-10));
    }
  }
}

TEST_CASE("pair constructions reject c < 0 and bad inputs") {
  CHECK_THROWS_AS(angle_pairs(e1, e2, AngleConstant(-0.1)), DomainError);
  CHECK_THROWS_AS(angle_pairs(Vector{1.0, 1.0}, e2, AngleConstant(0.2)),
                  NotOrthonormal);
}

TEST_CASE("relations are weakly homogeneous") {
  Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    const std::size_t dim = 2 + i % 4;
    Vector x(dim), y(dim);
    for (auto& v : x) v = rng.next_gaussian();
    for (auto& v : y) v = rng.next_gaussian();
    if (norm(x) < 1e-6 || norm(y) < 1e-6) continue;
    const double alpha = 0.01 + 5.0 * rng.next_double();
    const double beta = 0.01 + 5.0 * rng.next_double();
    const AngleConstant c(0.98 * (2.0 * rng.next_double() - 1.0));
    const Vector xs = scaled(x, alpha);
    const Vector ys = scaled(y, beta);
    CHECK(is_angle_c(x, y, c, 1e-6) == is_angle_c(xs, ys, c, 1e-6));
    CHECK(is_approx_angle_c(x, y, c, 0.25) == is_approx_angle_c(xs, ys, c, 0.25));
  }
}

TEST_CASE("samplers produce orthonormal pairs") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    const auto [x, w] = sample_orthonormal_pair(2 + i % 5, rng);
    CHECK(norm(x) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(w) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(dot(x, w)) <= 1e-12);
  }
}
