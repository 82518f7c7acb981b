// The tetrahedron L N S T with vertices x, qx, q^2x, q^3x.
//
// Since |q^k x| = |x|, its edges come in two lengths: LN = NS = ST = LT and
// LS = NT. Every face is isosceles with base angles gamma and apex angle delta.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circulant/algebra.hpp"

namespace circulant {

struct PyramidReport {
  double cos_alpha = 0.0;      // angle between x and qx
  double cos_beta = 0.0;       // angle between x and q^2x
  double edge_sq_long = 0.0;   // |LN|^2 = |NS|^2 = |ST|^2 = |LT|^2
  double edge_sq_short = 0.0;  // |LS|^2 = |NT|^2
  double cos_gamma = 0.0;
  double cos_delta = 0.0;
  double angle_sum_residual = 0.0;     // |2 gamma + delta - pi|
  double law_of_cosines_residual = 0.0;  // closed forms vs explicit edge vectors
};

inline PyramidReport pyramid_report(const Coeffs& c, const Vector& x) {
  require_finite(x, "seed vector");
  if (!qbase_predicate(x)) throw DegeneratePyramid("vector does not generate a q-base");
  const Vector qx = apply_q(x, 1);
  const Vector q2x = apply_q(x, 2);
  const double norm_sq = inner(c, x, x);
  PyramidReport r;
  r.cos_alpha = inner(c, x, qx) / norm_sq;
  r.cos_beta = inner(c, x, q2x) / norm_sq;
  if (!(r.cos_alpha < 1.0) || !(r.cos_beta < 1.0)) throw DegeneratePyramid("apex angle vanishes");

  r.edge_sq_long = 2.0 * norm_sq * (1.0 - r.cos_alpha);
  r.edge_sq_short = 2.0 * norm_sq * (1.0 - r.cos_beta);
  const double one_a = 1.0 - r.cos_alpha;
  const double one_b = 1.0 - r.cos_beta;
  r.cos_gamma = one_b / (2.0 * std::sqrt(one_a) * std::sqrt(one_b));
  r.cos_delta = (1.0 - 2.0 * r.cos_alpha + r.cos_beta) / (2.0 * one_a);

  const double gamma = std::acos(std::clamp(r.cos_gamma, -1.0, 1.0));
  const double delta = std::acos(std::clamp(r.cos_delta, -1.0, 1.0));
  r.angle_sum_residual = std::abs(2.0 * gamma + delta - std::numbers::pi);

  // Face L N S: apex N, base LS.
  const Vector ln = sub(qx, x);
  const Vector ns = sub(q2x, qx);
  const Vector ls = sub(q2x, x);
  const double ln2 = inner(c, ln, ln);
  const double ns2 = inner(c, ns, ns);
  const double ls2 = inner(c, ls, ls);
  const double direct_gamma = inner(c, ln, ls) / std::sqrt(ln2 * ls2);
  const double direct_delta = -inner(c, ln, ns) / std::sqrt(ln2 * ns2);
  r.law_of_cosines_residual = std::max(std::abs(direct_gamma - r.cos_gamma), std::abs(direct_delta - r.cos_delta));
  return r;
}

}  // namespace circulant
