// Portable seeded sampling. Only the raw 64-bit output of mt19937_64 is
// used (its sequence is fixed by the standard), never the library's
// distribution classes, whose output differs between implementations.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "circulant/algebra.hpp"

namespace circulant {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Vector vector(double lo, double hi) {
    Vector v{};
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kSeedPolynomialFloor = 1e-3;

/// Rejection-sampled q-base seeds from [-1, 1]^4, keeping away from
/// degenerate orbits (|polynomial| >= 1e-3).
inline Vector random_qbase_seed(Sampler& s) {
  for (;;) {
    const Vector v = s.vector(-1.0, 1.0);
    if (std::abs(qbase_polynomial(v)) >= kSeedPolynomialFloor) return v;
  }
}

inline std::vector<Vector> random_qbase_seeds(std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Vector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_qbase_seed(s));
  return out;
}

}  // namespace circulant
