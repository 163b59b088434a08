#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "devgauss/types.hpp"

namespace devgauss {

/// Deterministic RNG with portable double mapping. std::mt19937_64 bit output
/// is pinned by the standard; the distributions are not, so we map to [0,1)
/// ourselves to get byte-identical runs everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Marsaglia polar method on portable uniforms.
  double normal() {
    for (;;) {
      double x = uniform(-1.0, 1.0);
      double y = uniform(-1.0, 1.0);
      double s = x * x + y * y;
      if (s > 0.0 && s < 1.0) return x * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  Vec3 vec3(double lo, double hi) {
    double x = uniform(lo, hi), y = uniform(lo, hi), z = uniform(lo, hi);
    return Vec3(x, y, z);
  }

  Vec3 unit_vector() {
    for (;;) {
      Vec3 v = vec3(-1.0, 1.0);
      double n = v.norm();
      if (n > 1e-3 && n <= 1.0) return v / n;
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline bool finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace devgauss
