// Levi-Civita connection, Riemann tensor and the q-structure curvature checks.
//
// Sign convention: R(x,y) = [D_x, D_y] - D_[x,y] and
//   R(x, y, z, u) = g(R(x, y) u, z),
// so R(x, y, x, y) / (g(x,x) g(y,y) - g(x,y)^2) is +1 on the unit sphere.
// All checks on the q-structure are equalities or zeros and do not depend on
// this choice.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "circulant/algebra.hpp"
#include "circulant/fields.hpp"

namespace circulant {

using Tensor3 = std::array<Mat4<double>, 4>;
using Tensor4 = std::array<std::array<Mat4<double>, 4>, 4>;

/// Metric and its first and second coordinate derivatives at a point:
/// dg[i][a][b] = d_i g_ab, ddg[i][j][a][b] = d_i d_j g_ab.
struct MetricJet {
  Mat4<double> g{};
  Tensor3 dg{};
  Tensor4 ddg{};
};

inline MetricJet metric_jet(const FieldJet& jet) {
  MetricJet m;
  m.g = metric_matrix(jet.value);
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      const std::array<double, 3> w{double(kPatternA[a][b]), double(kPatternB[a][b]),
                                    double(kPatternC[a][b])};
      for (std::size_t i = 0; i < kDim; ++i) {
        m.dg[i][a][b] = w[0] * jet.grads[0][i] + w[1] * jet.grads[1][i] + w[2] * jet.grads[2][i];
        for (std::size_t j = 0; j < kDim; ++j)
          m.ddg[i][j][a][b] = w[0] * jet.hessians[0][i][j] + w[1] * jet.hessians[1][i][j] +
                              w[2] * jet.hessians[2][i][j];
      }
    }
  }
  return m;
}

inline MetricJet metric_jet(const FieldFamilySpec& spec, const ChartPoint& p) {
  return metric_jet(eval_jet(spec, p));
}

/// gamma[k][i][j] = Gamma^k_ij.
struct ChristoffelField {
  Tensor3 gamma{};

  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return gamma[k][i][j]; }
};

struct CurvatureTensor {
  Tensor4 r{};

  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r[i][j][k][l];
  }

  double eval(const Vector& x, const Vector& y, const Vector& z, const Vector& u) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) {
      if (x[i] == 0.0) continue;
      for (std::size_t j = 0; j < kDim; ++j) {
        if (y[j] == 0.0) continue;
        double inner_sum = 0.0;
        for (std::size_t k = 0; k < kDim; ++k)
          for (std::size_t l = 0; l < kDim; ++l) inner_sum += r[i][j][k][l] * z[k] * u[l];
        acc += x[i] * y[j] * inner_sum;
      }
    }
    return acc;
  }
};

namespace detail {

inline Mat4<double> metric_inverse(const Mat4<double>& g) {
  auto inv = inverse(g);
  if (!inv) throw NotAdmissible("metric is singular");
  return *inv;
}

// Christoffel symbols of the first kind: first[l][i][j] = Gamma_{l,ij}.
inline Tensor3 first_kind(const MetricJet& m) {
  Tensor3 first{};
  for (std::size_t l = 0; l < kDim; ++l)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        first[l][i][j] = 0.5 * (m.dg[i][j][l] + m.dg[j][i][l] - m.dg[l][i][j]);
  return first;
}

inline Tensor3 raise_first(const Mat4<double>& ginv, const Tensor3& first) {
  Tensor3 out{};
  for (std::size_t k = 0; k < kDim; ++k)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        double acc = 0.0;
        for (std::size_t l = 0; l < kDim; ++l) acc += ginv[k][l] * first[l][i][j];
        out[k][i][j] = acc;
      }
  return out;
}

}  // namespace detail

/// Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij).
inline ChristoffelField christoffel(const MetricJet& m) {
  const auto ginv = detail::metric_inverse(m.g);
  return {detail::raise_first(ginv, detail::first_kind(m))};
}

inline ChristoffelField christoffel(const FieldFamilySpec& spec, const ChartPoint& p) {
  return christoffel(metric_jet(spec, p));
}

/// max |d_i g_jk - Gamma^l_ij g_lk - Gamma^l_ik g_jl|.
inline double metric_compatibility_residual(const MetricJet& m, const ChristoffelField& c) {
  double r = 0.0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) {
        double v = m.dg[i][j][k];
        for (std::size_t l = 0; l < kDim; ++l) v -= c.gamma[l][i][j] * m.g[l][k] + c.gamma[l][i][k] * m.g[j][l];
        r = std::max(r, std::abs(v));
      }
  return r;
}

/// max |Gamma^k_ij - Gamma^k_ji|.
inline double christoffel_symmetry_residual(const ChristoffelField& c) {
  double r = 0.0;
  for (std::size_t k = 0; k < kDim; ++k)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) r = std::max(r, std::abs(c.gamma[k][i][j] - c.gamma[k][j][i]));
  return r;
}

/// q has constant components in the chart, so
///   (D_i q)^k_j = Gamma^k_im Q^m_j - Q^k_m Gamma^m_ij,
/// i.e. the commutator of q with each connection matrix. Returns the max
/// absolute component. The value is the same for q and q^3.
inline double nabla_q_residual(const ChristoffelField& c) {
  const auto q = q_matrix<double>(1);
  double r = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    Mat4<double> conn{};
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t m = 0; m < kDim; ++m) conn[k][m] = c.gamma[k][i][m];
    const auto lhs = mat_mul(conn, q);
    const auto rhs = mat_mul(q, conn);
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t j = 0; j < kDim; ++j) r = std::max(r, std::abs(lhs[k][j] - rhs[k][j]));
  }
  return r;
}

inline double nabla_q_residual(const FieldFamilySpec& spec, const ChartPoint& p) {
  return nabla_q_residual(christoffel(spec, p));
}

inline CurvatureTensor riemann(const MetricJet& m) {
  const auto ginv = detail::metric_inverse(m.g);
  const auto first = detail::first_kind(m);
  const auto gamma = detail::raise_first(ginv, first);

  // d_i g^ml = -g^ma d_i g_ab g^bl
  Tensor3 dginv{};
  for (std::size_t i = 0; i < kDim; ++i)
    dginv[i] = mat_mul(mat_mul(ginv, m.dg[i]), ginv);
  for (auto& mat : dginv)
    for (auto& row : mat)
      for (auto& v : row) v = -v;

  // dgamma[i][mu][j][k] = d_i Gamma^mu_jk
  Tensor4 dgamma{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t mu = 0; mu < kDim; ++mu)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) {
          double acc = 0.0;
          for (std::size_t l = 0; l < kDim; ++l) {
            const double dfirst = 0.5 * (m.ddg[i][j][k][l] + m.ddg[i][k][j][l] - m.ddg[i][l][j][k]);
            acc += dginv[i][mu][l] * first[l][j][k] + ginv[mu][l] * dfirst;
          }
          dgamma[i][mu][j][k] = acc;
        }

  // op[i][j][k][mu]: component mu of R(d_i, d_j) d_k
  Tensor4 op{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        for (std::size_t mu = 0; mu < kDim; ++mu) {
          double v = dgamma[i][mu][j][k] - dgamma[j][mu][i][k];
          for (std::size_t n = 0; n < kDim; ++n) v += gamma[mu][i][n] * gamma[n][j][k] - gamma[mu][j][n] * gamma[n][i][k];
          op[i][j][k][mu] = v;
        }

  CurvatureTensor out;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        for (std::size_t l = 0; l < kDim; ++l) {
          double v = 0.0;
          for (std::size_t mu = 0; mu < kDim; ++mu) v += m.g[k][mu] * op[i][j][l][mu];
          out.r[i][j][k][l] = v;
        }
  return out;
}

inline CurvatureTensor riemann(const FieldFamilySpec& spec, const ChartPoint& p) {
  return riemann(metric_jet(spec, p));
}

struct SymmetryResiduals {
  double antisym_ij = 0.0;  // R_ijkl + R_jikl
  double antisym_kl = 0.0;  // R_ijkl + R_ijlk
  double pair = 0.0;        // R_ijkl - R_klij
  double bianchi = 0.0;     // R_ijkl + R_jkil + R_kijl

  double max() const { return std::max({antisym_ij, antisym_kl, pair, bianchi}); }
};

inline SymmetryResiduals symmetry_residuals(const CurvatureTensor& t) {
  SymmetryResiduals s;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        for (std::size_t l = 0; l < kDim; ++l) {
          const double v = t.r[i][j][k][l];
          s.antisym_ij = std::max(s.antisym_ij, std::abs(v + t.r[j][i][k][l]));
          s.antisym_kl = std::max(s.antisym_kl, std::abs(v + t.r[i][j][l][k]));
          s.pair = std::max(s.pair, std::abs(v - t.r[k][l][i][j]));
          s.bianchi = std::max(s.bianchi, std::abs(v + t.r[j][k][i][l] + t.r[k][i][j][l]));
        }
  return s;
}

inline double max_abs_component(const CurvatureTensor& t) {
  double m = 0.0;
  for (const auto& a : t.r)
    for (const auto& b : a)
      for (const auto& row : b)
        for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

/// Component-level q-invariance in the last pair:
/// max over k in {1,2,3} and all index quadruples of
/// |R(e_i, e_j, q^k e_a, q^k e_b) - R_ijab|, normalized by max(1, max|R|).
inline double tensor_q_invariance_residual(const CurvatureTensor& t) {
  double r = 0.0;
  for (std::size_t k = 1; k < kDim; ++k)
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j)
        for (std::size_t a = 0; a < kDim; ++a)
          for (std::size_t b = 0; b < kDim; ++b) {
            // (q^k e_a)^m = 1 iff m + k == a (mod 4)
            const std::size_t qa = (a + kDim - k) % kDim;
            const std::size_t qb = (b + kDim - k) % kDim;
            r = std::max(r, std::abs(t.r[i][j][qa][qb] - t.r[i][j][a][b]));
          }
  return r / std::max(1.0, max_abs_component(t));
}

inline double section_denominator(const Coeffs& c, const Vector& x, const Vector& y) {
  const double gxy = inner(c, x, y);
  return inner(c, x, x) * inner(c, y, y) - gxy * gxy;
}

inline constexpr double kDegenerateSectionRelTol = 1e-12;

/// mu = R(x,y,x,y) / (g(x,x) g(y,y) - g(x,y)^2).
inline double sectional(const CurvatureTensor& t, const Coeffs& c, const Vector& x, const Vector& y) {
  require_finite(x, "section vector");
  require_finite(y, "section vector");
  const double denom = section_denominator(c, x, y);
  if (!(denom > kDegenerateSectionRelTol * inner(c, x, x) * inner(c, y, y)))
    throw DegenerateSection("section vectors are linearly dependent");
  return t.eval(x, y, x, y) / denom;
}

inline double sectional(const FieldFamilySpec& spec, const ChartPoint& p, const Vector& x, const Vector& y) {
  const auto jet = eval_jet(spec, p);
  return sectional(riemann(metric_jet(jet)), jet.value, x, y);
}

/// Sectional curvatures of the six q-sections
///   E1 {x,qx}, E2 {x,q^2x}, E3 {q^3x,x}, E4 {qx,q^2x}, E5 {qx,q^3x}, E6 {q^2x,q^3x}.
struct SectionalReport {
  std::array<double, 6> mu{};
  std::array<double, 6> denominators{};
  double theorem3_residual = 0.0;  // max pairwise |mu - mu'| over {mu1, mu3, mu4, mu6}
  double zero_residual = 0.0;      // max(|mu2|, |mu5|)
};

inline void require_qbase(const Vector& x) {
  require_finite(x, "seed vector");
  if (!qbase_predicate(x)) throw NotQBase("vector does not generate a q-base");
}

inline SectionalReport q_section_curvatures(const CurvatureTensor& t, const Coeffs& c, const Vector& x) {
  require_qbase(x);
  const std::array<Vector, 4> o{x, apply_q(x, 1), apply_q(x, 2), apply_q(x, 3)};
  const std::array<std::pair<int, int>, 6> sections{{{0, 1}, {0, 2}, {3, 0}, {1, 2}, {1, 3}, {2, 3}}};
  SectionalReport rep;
  for (std::size_t s = 0; s < sections.size(); ++s) {
    const auto& a = o[sections[s].first];
    const auto& b = o[sections[s].second];
    rep.denominators[s] = section_denominator(c, a, b);
    rep.mu[s] = sectional(t, c, a, b);
  }
  const std::array<double, 4> equal{rep.mu[0], rep.mu[2], rep.mu[3], rep.mu[5]};
  for (std::size_t i = 0; i < equal.size(); ++i)
    for (std::size_t j = i + 1; j < equal.size(); ++j)
      rep.theorem3_residual = std::max(rep.theorem3_residual, std::abs(equal[i] - equal[j]));
  rep.zero_residual = std::max(std::abs(rep.mu[1]), std::abs(rep.mu[4]));
  return rep;
}

inline SectionalReport q_section_curvatures(const FieldFamilySpec& spec, const ChartPoint& p, const Vector& x) {
  const auto jet = eval_jet(spec, p);
  return q_section_curvatures(riemann(metric_jet(jet)), jet.value, x);
}

struct IdentityResidual {
  std::string label;
  double value = 0.0;
};

/// The curvature identities that follow from q-invariance, evaluated on the
/// orbit of x. Each chain "a = b = c" contributes one residual per link and
/// each "= 0" one residual per term. Residuals are normalized by
/// max(1, |R(x,qx,x,qx)|).
inline std::vector<IdentityResidual> identity_suite(const CurvatureTensor& t, const Vector& x) {
  require_qbase(x);
  const std::array<Vector, 4> q{x, apply_q(x, 1), apply_q(x, 2), apply_q(x, 3)};
  const auto R = [&](int a, int b, int c, int d) { return t.eval(q[a], q[b], q[c], q[d]); };
  const double ref = R(0, 1, 0, 1);
  const double norm = std::max(1.0, std::abs(ref));
  std::vector<IdentityResidual> out;
  const auto eq = [&](std::string label, double lhs, double rhs) {
    out.push_back({std::move(label), std::abs(lhs - rhs) / norm});
  };
  const auto zero = [&](std::string label, double v) { out.push_back({std::move(label), std::abs(v) / norm}); };

  // a)
  eq("a1: R(x,qx,x,qx) = R(x,q3x,x,q3x)", ref, R(0, 3, 0, 3));
  zero("a2: R(x,q2x,x,q2x) = 0", R(0, 2, 0, 2));
  // b)
  zero("b1: R(x,qx,x,q2x) = 0", R(0, 1, 0, 2));
  zero("b2: R(x,q2x,qx,q2x) = 0", R(0, 2, 1, 2));
  zero("b3: R(x,q3x,q2x,x) = 0", R(0, 3, 2, 0));
  zero("b4: R(x,q3x,qx,q3x) = 0", R(0, 3, 1, 3));
  // c)
  eq("c1: -R(x,qx,x,q3x) = R(x,qx,qx,q2x)", -R(0, 1, 0, 3), R(0, 1, 1, 2));
  eq("c2: R(x,qx,qx,q2x) = R(x,qx,q2x,q3x)", R(0, 1, 1, 2), R(0, 1, 2, 3));
  eq("c3: R(x,qx,q2x,q3x) = R(x,qx,x,qx)", R(0, 1, 2, 3), ref);
  // d)
  zero("d1: R(x,q2x,qx,q3x) = 0", R(0, 2, 1, 3));
  zero("d2: R(x,q2x,q2x,q3x) = 0", R(0, 2, 2, 3));
  zero("d3: R(qx,q2x,qx,q3x) = 0", R(1, 2, 1, 3));
  // e)
  eq("e1: -R(x,q3x,qx,q2x) = -R(x,q3x,q2x,q3x)", -R(0, 3, 1, 2), -R(0, 3, 2, 3));
  eq("e2: -R(x,q3x,q2x,q3x) = R(qx,q2x,q2x,q3x)", -R(0, 3, 2, 3), R(1, 2, 2, 3));
  eq("e3: R(qx,q2x,q2x,q3x) = R(x,qx,x,qx)", R(1, 2, 2, 3), ref);
  zero("e4: R(qx,q3x,q2x,q3x) = 0", R(1, 3, 2, 3));
  // f)
  zero("f1: R(qx,q3x,qx,q3x) = 0", R(1, 3, 1, 3));
  eq("f2: R(qx,q2x,qx,q2x) = R(q2x,q3x,q2x,q3x)", R(1, 2, 1, 2), R(2, 3, 2, 3));
  eq("f3: R(q2x,q3x,q2x,q3x) = R(x,qx,x,qx)", R(2, 3, 2, 3), ref);
  return out;
}

inline std::vector<IdentityResidual> identity_suite(const FieldFamilySpec& spec, const ChartPoint& p,
                                                    const Vector& x) {
  return identity_suite(riemann(spec, p), x);
}

/// max over k in {1,2,3} of |R(x,y,q^k z,q^k u) - R(x,y,z,u)|, normalized by
/// max(1, |R(x,y,z,u)|).
inline double q_invariance_residual(const CurvatureTensor& t, const std::array<Vector, 4>& v) {
  for (const auto& w : v) require_finite(w, "vector");
  const double base = t.eval(v[0], v[1], v[2], v[3]);
  double r = 0.0;
  for (int k = 1; k < 4; ++k)
    r = std::max(r, std::abs(t.eval(v[0], v[1], apply_q(v[2], k), apply_q(v[3], k)) - base));
  return r / std::max(1.0, std::abs(base));
}

inline double q_invariance_residual(const FieldFamilySpec& spec, const ChartPoint& p,
                                    const std::array<Vector, 4>& v) {
  return q_invariance_residual(riemann(spec, p), v);
}

}  // namespace circulant
