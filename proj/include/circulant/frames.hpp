// Orthonormal q-bases {x, qx, q^2x, q^3x} at a point.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "circulant/algebra.hpp"

namespace circulant {

struct FrameResidual {
  Mat4<double> gram{};
  double max_deviation = 0.0;  // max |gram - I|
};

struct QFrame {
  Vector seed{};
  std::array<Vector, 4> vectors{};  // vectors[k] == apply_q(seed, k)
  Coeffs coeffs{};
};

inline FrameResidual verify_frame(const Coeffs& c, const Vector& seed) {
  FrameResidual r;
  std::array<Vector, 4> orbit{};
  for (std::size_t k = 0; k < kDim; ++k) orbit[k] = apply_q(seed, static_cast<std::int64_t>(k));
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      r.gram[i][j] = inner(c, orbit[i], orbit[j]);
      const double target = i == j ? 1.0 : 0.0;
      r.max_deviation = std::max(r.max_deviation, std::abs(r.gram[i][j] - target));
    }
  }
  return r;
}

inline QFrame make_qframe(const Coeffs& c, const Vector& seed) {
  QFrame f{seed, {}, c};
  for (std::size_t k = 0; k < kDim; ++k) f.vectors[k] = apply_q(seed, static_cast<std::int64_t>(k));
  return f;
}

/// Orthonormal q-base seed built from the circulant eigenvectors:
///   x = a (1,1,1,1) + b (1,-1,1,-1) + s (1,0,-1,0)
/// with a = 1/(2 sqrt(4(A+C+2B))), b = 1/(2 sqrt(4(A+C-2B))), s = 1/(2 sqrt(A-C)).
/// Each component carries a quarter, a quarter and a half of g(x,x), and the
/// q-action flips or rotates them so that g(x,qx) = g(x,q^2x) = 0.
inline QFrame spectral_frame(const Coeffs& c) {
  require_admissible(c);
  const double lambda0 = 4.0 * (c.A + c.C + 2.0 * c.B);
  const double lambda2 = 4.0 * (c.A + c.C - 2.0 * c.B);
  const double a = 1.0 / (2.0 * std::sqrt(lambda0));
  const double b = 1.0 / (2.0 * std::sqrt(lambda2));
  const double s = 1.0 / (2.0 * std::sqrt(c.A - c.C));
  const Vector seed{a + b + s, a - b, a + b - s, a - b};
  return make_qframe(c, seed);
}

enum class PaperStatus { ok, negative_discriminant, sqrt_domain_failure, residual_exceeds_tolerance };

inline std::string_view to_string(PaperStatus s) {
  switch (s) {
    case PaperStatus::ok: return "ok";
    case PaperStatus::negative_discriminant: return "negative_discriminant";
    case PaperStatus::sqrt_domain_failure: return "sqrt_domain_failure";
    case PaperStatus::residual_exceeds_tolerance: return "residual_exceeds_tolerance";
  }
  return "unknown";
}

/// Literal evaluation of the closed-form orthonormal-seed recipe:
///   x4 = 0,  x2 = (r- - r+) / (2 r- r+),  r(+/-) = sqrt(A + B -/+ 2C)
///   x1 + x3 = (r- - r+) / (2 r- r+)
///   x1 * x3 = (2B^2 - C^2 - AC) / (2 (A - C) r- r+)
/// x1 and x3 are the roots of t^2 - (x1+x3) t + x1 x3 = 0 (x1 the larger).
/// The report records what the formulas produce; nothing is corrected.
struct PaperConstructionReport {
  double x2 = NAN;
  double sum_x1_x3 = NAN;
  double prod_x1_x3 = NAN;
  double discriminant_D = NAN;
  std::optional<Vector> candidate;
  std::optional<FrameResidual> residual;
  double spectral_max_deviation = NAN;
  PaperStatus status = PaperStatus::ok;
};

inline constexpr double kPaperFrameTol = 1e-10;

inline PaperConstructionReport paper_frame(const Coeffs& c, double tol = kPaperFrameTol) {
  require_admissible(c);
  PaperConstructionReport rep;
  rep.spectral_max_deviation = verify_frame(c, spectral_frame(c).seed).max_deviation;

  const double minus_rad = c.A + c.B - 2.0 * c.C;
  const double plus_rad = c.A + c.B + 2.0 * c.C;
  if (!(minus_rad > 0.0) || !(plus_rad > 0.0)) {
    rep.status = PaperStatus::sqrt_domain_failure;
    return rep;
  }
  const double rm = std::sqrt(minus_rad);
  const double rp = std::sqrt(plus_rad);
  rep.x2 = (rm - rp) / (2.0 * rm * rp);
  rep.sum_x1_x3 = rep.x2;
  rep.prod_x1_x3 = (2.0 * c.B * c.B - c.C * c.C - c.A * c.C) / (2.0 * (c.A - c.C) * rm * rp);
  rep.discriminant_D = rep.sum_x1_x3 * rep.sum_x1_x3 - 4.0 * rep.prod_x1_x3;
  if (rep.discriminant_D < 0.0) {
    rep.status = PaperStatus::negative_discriminant;
    return rep;
  }
  const double root = std::sqrt(rep.discriminant_D);
  const double x1 = 0.5 * (rep.sum_x1_x3 + root);
  const double x3 = 0.5 * (rep.sum_x1_x3 - root);
  rep.candidate = Vector{x1, rep.x2, x3, 0.0};
  rep.residual = verify_frame(c, *rep.candidate);
  rep.status = rep.residual->max_deviation <= tol ? PaperStatus::ok
                                                   : PaperStatus::residual_exceeds_tolerance;
  return rep;
}

}  // namespace circulant
