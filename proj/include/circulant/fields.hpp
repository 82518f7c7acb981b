// A, B, C as scalar fields on a chart of R^4, with first and second
// derivatives supplied analytically or by finite differences.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circulant/algebra.hpp"

namespace circulant {

using ChartPoint = Vector;
using Covector = std::array<double, 4>;

// Built-in families and their parameter vectors (s = x1 + x2 + x3 + x4):
//   constant      (A0, B0, C0)
//   s_wave        (c0, eps, a0, b0):  C = c0 + eps sin(s), A = C + a0, B = 2C + b0
//   parallel_wave (c0, eps, s0, b0):  C = c0 + eps (sin(x1 - x3) + cos(x2 - x4)),
//                                     A = s0 - C, B = b0
//   control       (A0, kappa, B0, C0): A = A0 + kappa sin(x1), B = B0, C = C0
// s_wave satisfies the unit-coefficient gradient criterion but q is not parallel
// for it; parallel_wave has D q = 0 and non-zero curvature.
enum class Family { constant, s_wave, parallel_wave, control, custom };
enum class DerivativeMode { analytic, finite_difference };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::constant: return "constant";
    case Family::s_wave: return "s_wave";
    case Family::parallel_wave: return "parallel_wave";
    case Family::control: return "control";
    case Family::custom: return "custom";
  }
  return "unknown";
}

inline std::string_view to_string(DerivativeMode m) {
  return m == DerivativeMode::analytic ? "analytic" : "fd";
}

/// Value, gradient and Hessian of each generator (index 0: A, 1: B, 2: C).
struct FieldJet {
  Coeffs value{};
  std::array<Covector, 3> grads{};
  std::array<Mat4<double>, 3> hessians{};
};

using JetProvider = std::function<FieldJet(const ChartPoint&)>;

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kHessianFdStep = 1e-4;

/// Immutable description of the field family. Build with make_family or
/// make_custom_family; those validate the admissibility range.
class FieldFamilySpec {
 public:
  Family family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  DerivativeMode derivative_mode() const { return mode_; }
  double fd_step() const { return fd_step_; }

  FieldFamilySpec with_mode(DerivativeMode mode, double fd_step = kDefaultFdStep) const {
    if (family_ == Family::custom && mode == DerivativeMode::finite_difference)
      throw InvalidArgument("custom families require analytic derivatives");
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) throw InvalidArgument("fd_step must be > 0");
    FieldFamilySpec out = *this;
    out.mode_ = mode;
    out.fd_step_ = fd_step;
    return out;
  }

  /// Generator values at p (no admissibility check).
  Coeffs value_at(const ChartPoint& p) const {
    const auto& q = params_;
    switch (family_) {
      case Family::constant: return {q[0], q[1], q[2]};
      case Family::s_wave: {
        const double c = q[0] + q[1] * std::sin(p[0] + p[1] + p[2] + p[3]);
        return {c + q[2], 2.0 * c + q[3], c};
      }
      case Family::parallel_wave: {
        const double c = q[0] + q[1] * (std::sin(p[0] - p[2]) + std::cos(p[1] - p[3]));
        return {q[2] - c, q[3], c};
      }
      case Family::control: return {q[0] + q[1] * std::sin(p[0]), q[2], q[3]};
      case Family::custom: return custom_(p).value;
    }
    return {};
  }

  FieldJet analytic_jet(const ChartPoint& p) const;

 private:
  friend FieldFamilySpec make_family(Family, std::vector<double>, DerivativeMode, double);
  friend FieldFamilySpec make_custom_family(JetProvider);

  Family family_ = Family::constant;
  std::vector<double> params_;
  DerivativeMode mode_ = DerivativeMode::analytic;
  double fd_step_ = kDefaultFdStep;
  JetProvider custom_;
};

namespace detail {

inline std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Admissibility over the whole chart for families whose values are affine in
// one bounded parameter t in [lo, hi]; endpoints suffice since every
// inequality is affine in t.
inline void check_range(const std::string& family, const std::function<Coeffs(double)>& at, double lo,
                        double hi) {
  for (double t : {lo, hi}) {
    const auto c = at(t);
    if (auto v = admissibility_violation(c); !v.empty()) {
      throw NotAdmissible(family + " parameters violate " + v + " over the chart (A=" + fmt_num(c.A) +
                          ", B=" + fmt_num(c.B) + ", C=" + fmt_num(c.C) + ")");
    }
  }
}

}  // namespace detail

inline FieldFamilySpec make_family(Family family, std::vector<double> params,
                                   DerivativeMode mode = DerivativeMode::analytic,
                                   double fd_step = kDefaultFdStep) {
  const auto expect = [&](std::size_t n) {
    if (params.size() != n)
      throw InvalidArgument(std::string(to_string(family)) + " expects " + std::to_string(n) +
                            " parameters, got " + std::to_string(params.size()));
    for (double v : params)
      if (!std::isfinite(v)) throw InvalidArgument("family parameters must be finite");
  };
  switch (family) {
    case Family::constant:
      expect(3);
      detail::check_range("constant", [&](double) { return Coeffs{params[0], params[1], params[2]}; }, 0, 0);
      break;
    case Family::s_wave: {
      expect(4);
      const double amp = std::abs(params[1]);
      detail::check_range(
          "s_wave", [&](double c) { return Coeffs{c + params[2], 2.0 * c + params[3], c}; },
          params[0] - amp, params[0] + amp);
      break;
    }
    case Family::parallel_wave: {
      expect(4);
      const double amp = 2.0 * std::abs(params[1]);
      detail::check_range(
          "parallel_wave", [&](double c) { return Coeffs{params[2] - c, params[3], c}; },
          params[0] - amp, params[0] + amp);
      break;
    }
    case Family::control: {
      expect(4);
      const double amp = std::abs(params[1]);
      detail::check_range(
          "control", [&](double a) { return Coeffs{a, params[2], params[3]}; }, params[0] - amp,
          params[0] + amp);
      break;
    }
    case Family::custom:
      throw InvalidArgument("custom families are built with make_custom_family");
  }
  FieldFamilySpec spec;
  spec.family_ = family;
  spec.params_ = std::move(params);
  return spec.with_mode(mode, fd_step);
}

/// A user-supplied jet provider; it must return analytic first and second
/// derivatives. Admissibility is checked point-wise during evaluation.
inline FieldFamilySpec make_custom_family(JetProvider provider) {
  if (!provider) throw InvalidArgument("custom family needs a jet provider");
  FieldFamilySpec spec;
  spec.family_ = Family::custom;
  spec.custom_ = std::move(provider);
  return spec;
}

inline FieldJet FieldFamilySpec::analytic_jet(const ChartPoint& p) const {
  FieldJet jet;
  jet.value = value_at(p);
  for (auto& h : jet.hessians) h = zero_matrix<double>();
  for (auto& g : jet.grads) g.fill(0.0);
  const auto& q = params_;
  switch (family_) {
    case Family::constant: break;
    case Family::parallel_wave: {
      // C = c0 + eps (sin(x1 - x3) + cos(x2 - x4)), A = s0 - C, B = b0.
      const double a = p[0] - p[2];
      const double b = p[1] - p[3];
      const double ca = q[1] * std::cos(a);
      const double sa = q[1] * std::sin(a);
      const double cb = q[1] * std::cos(b);
      const double sb = q[1] * std::sin(b);
      jet.grads[2] = {ca, -sb, -ca, sb};
      auto& h = jet.hessians[2];
      h[0][0] = h[2][2] = -sa;
      h[0][2] = h[2][0] = sa;
      h[1][1] = h[3][3] = -cb;
      h[1][3] = h[3][1] = cb;
      for (std::size_t i = 0; i < kDim; ++i) {
        jet.grads[0][i] = -jet.grads[2][i];
        for (std::size_t j = 0; j < kDim; ++j) jet.hessians[0][i][j] = -h[i][j];
      }
      break;
    }
    case Family::s_wave: {
      // Every generator is f(s), s = x1+x2+x3+x4, with A' = C', B' = 2C'.
      const double s = p[0] + p[1] + p[2] + p[3];
      const double dc = q[1] * std::cos(s);
      const double ddc = -q[1] * std::sin(s);
      const std::array<double, 3> scale{1.0, 2.0, 1.0};
      for (std::size_t f = 0; f < 3; ++f) {
        jet.grads[f].fill(scale[f] * dc);
        for (auto& row : jet.hessians[f]) row.fill(scale[f] * ddc);
      }
      break;
    }
    case Family::control:
      jet.grads[0][0] = q[1] * std::cos(p[0]);
      jet.hessians[0][0][0] = -q[1] * std::sin(p[0]);
      break;
    case Family::custom: return custom_(p);
  }
  return jet;
}

namespace detail {

inline double component(const Coeffs& c, std::size_t f) { return f == 0 ? c.A : (f == 1 ? c.B : c.C); }

inline ChartPoint shifted(ChartPoint p, std::size_t i, double h) {
  p[i] += h;
  return p;
}

}  // namespace detail

/// Central differences with one Richardson level for gradients (step h and
/// h/2) and nested central differences for Hessians.
inline FieldJet finite_difference_jet(const FieldFamilySpec& spec, const ChartPoint& p) {
  FieldJet jet;
  jet.value = spec.value_at(p);
  const double h = spec.fd_step();
  const auto central = [&](std::size_t i, double step) {
    const auto plus = spec.value_at(detail::shifted(p, i, step));
    const auto minus = spec.value_at(detail::shifted(p, i, -step));
    return std::array<double, 3>{(plus.A - minus.A) / (2 * step), (plus.B - minus.B) / (2 * step),
                                 (plus.C - minus.C) / (2 * step)};
  };
  for (std::size_t i = 0; i < kDim; ++i) {
    const auto coarse = central(i, h);
    const auto fine = central(i, 0.5 * h);
    for (std::size_t f = 0; f < 3; ++f) jet.grads[f][i] = (4.0 * fine[f] - coarse[f]) / 3.0;
  }
  const double k = kHessianFdStep;
  for (std::size_t i = 0; i < kDim; ++i) {
    const auto pp = spec.value_at(detail::shifted(p, i, k));
    const auto pm = spec.value_at(detail::shifted(p, i, -k));
    for (std::size_t f = 0; f < 3; ++f)
      jet.hessians[f][i][i] = (detail::component(pp, f) - 2.0 * detail::component(jet.value, f) +
                               detail::component(pm, f)) / (k * k);
    for (std::size_t j = i + 1; j < kDim; ++j) {
      const auto a = spec.value_at(detail::shifted(detail::shifted(p, i, k), j, k));
      const auto b = spec.value_at(detail::shifted(detail::shifted(p, i, k), j, -k));
      const auto c = spec.value_at(detail::shifted(detail::shifted(p, i, -k), j, k));
      const auto d = spec.value_at(detail::shifted(detail::shifted(p, i, -k), j, -k));
      for (std::size_t f = 0; f < 3; ++f) {
        const double v = (detail::component(a, f) - detail::component(b, f) - detail::component(c, f) +
                          detail::component(d, f)) / (4.0 * k * k);
        jet.hessians[f][i][j] = v;
        jet.hessians[f][j][i] = v;
      }
    }
  }
  return jet;
}

inline FieldJet eval_jet(const FieldFamilySpec& spec, const ChartPoint& p) {
  require_finite(p, "chart point");
  FieldJet jet = spec.derivative_mode() == DerivativeMode::analytic ? spec.analytic_jet(p)
                                                                     : finite_difference_jet(spec, p);
  if (auto v = admissibility_violation(jet.value); !v.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "field values at (" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ") violate " << v;
    throw NotAdmissible(os.str());
  }
  return jet;
}

/// Which right-hand side to use for the B equation of the gradient criterion.
///   unit:   d_i B = d_{s(i)} C + d_{s^3(i)} C
///   halved:     d_i B = (d_{s(i)} C + d_{s^3(i)} C) / 2
/// Only the halved form is equivalent to D q = 0 for the circulant metric.
enum class GradBRule { unit, halved };

/// Max residual of the gradient criterion for a parallel q,
///   d_i A = d_{s^2(i)} C,   d_i B = k (d_{s(i)} C + d_{s^3(i)} C),
/// over its 8 scalar equations, with s the same index shift as the vector
/// action of q and k = 1 or 1/2 per `rule`.
inline double parallel_residual(const FieldFamilySpec& spec, const ChartPoint& p,
                                GradBRule rule = GradBRule::unit) {
  const double k = rule == GradBRule::unit ? 1.0 : 0.5;
  const auto jet = eval_jet(spec, p);
  const auto& dA = jet.grads[0];
  const auto& dB = jet.grads[1];
  const auto& dC = jet.grads[2];
  double r = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    r = std::max(r, std::abs(dA[i] - dC[(i + 2) % kDim]));
    r = std::max(r, std::abs(dB[i] - k * (dC[(i + 1) % kDim] + dC[(i + 3) % kDim])));
  }
  return r;
}

}  // namespace circulant
