#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace anglegauge {

/// splitmix64. Value-semantic state: copy to split, never share.
/// `stream(seed, i)` hashes (seed, i) into a fresh starting state, so loops
/// indexed by sample number produce the same draws in any execution order.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double next_gaussian() {
    double u1;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed + 0x9e3779b97f4a7c15ULL) ^
               mix(index + 0x632be59bd9b4e019ULL));
  }

private:
  std::uint64_t state_;
};

}  // namespace anglegauge
