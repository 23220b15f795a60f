#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "mubcoh/types.hpp"

namespace mubcoh {

/// Deterministic sample source: a fixed engine (mt19937_64) combined with
/// hand-written transforms, so one (seed, draw count) pair reproduces the
/// same stream on every platform and standard library.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1), 53-bit resolution.
  Real uniform() { return static_cast<Real>(engine_() >> 11) * 0x1.0p-53; }

  Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; the second output is cached.
  Real normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const Real u1 = 1.0 - uniform();  // in (0, 1], keeps log finite
    const Real u2 = uniform();
    const Real radius = std::sqrt(-2.0 * std::log(u1));
    const Real angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform direction on the unit sphere (normalized Gaussian triple).
  std::array<Real, 3> sphere_point() {
    while (true) {
      const std::array<Real, 3> v{normal(), normal(), normal()};
      const Real n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (n > 1e-12) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

  /// Uniform point in the closed unit ball (direction times cbrt-distributed radius).
  std::array<Real, 3> ball_point() {
    const std::array<Real, 3> d = sphere_point();
    const Real r = std::cbrt(uniform());
    return {r * d[0], r * d[1], r * d[2]};
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  Real spare_ = 0.0;
};

}  // namespace mubcoh
