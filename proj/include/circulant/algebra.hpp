// Point-wise algebra of the circulant metric g and the shift affinor q.
//
// Conventions:
//   * Indices are 0-based in code; component i of q x is x[(i + 1) % 4]
//     (components shift left cyclically). Every statement about q below is
//     invariant under replacing q by its inverse q^3.
//   * The metric at a point is the symmetric circulant matrix with first row
//     (A, B, C, B).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

#include "circulant/errors.hpp"
#include "circulant/linalg.hpp"

namespace circulant {

template <typename T = double>
using Vector4 = Vec4<T>;

template <typename T = double>
struct CirculantCoeffs {
  T A{};
  T B{};
  T C{};

  friend bool operator==(const CirculantCoeffs&, const CirculantCoeffs&) = default;
};

template <typename T = double>
using MetricMatrix = Mat4<T>;

using Vector = Vector4<double>;
using Coeffs = CirculantCoeffs<double>;

/// q^k x for any integer k; a pure index permutation, so exact in any type.
template <typename T>
constexpr Vector4<T> apply_q(const Vector4<T>& x, std::int64_t k = 1) {
  const auto shift = static_cast<std::size_t>(((k % 4) + 4) % 4);
  Vector4<T> out{};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = x[(i + shift) % kDim];
  return out;
}

/// Matrix of q acting on column vectors: (q x)^i = sum_j Q[i][j] x^j.
template <typename T = double>
constexpr Mat4<T> q_matrix(std::int64_t k = 1) {
  auto m = zero_matrix<T>();
  const auto shift = static_cast<std::size_t>(((k % 4) + 4) % 4);
  for (std::size_t i = 0; i < kDim; ++i) m[i][(i + shift) % kDim] = T(1);
  return m;
}

// Integer 0/1 patterns of the metric generators: g = A*E + B*(q + q^3) + C*q^2.
inline constexpr Mat4<int> kPatternA = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
inline constexpr Mat4<int> kPatternB = {{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}};
inline constexpr Mat4<int> kPatternC = {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}};

template <typename T>
MetricMatrix<T> metric_matrix(const CirculantCoeffs<T>& c) {
  MetricMatrix<T> g{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      g[i][j] = T(kPatternA[i][j]) * c.A + T(kPatternB[i][j]) * c.B + T(kPatternC[i][j]) * c.C;
  return g;
}

template <typename T>
T metric_det_closed(const CirculantCoeffs<T>& c) {
  const T amc = c.A - c.C;
  const T apc = c.A + c.C;
  return amc * amc * (apc * apc - T(4) * c.B * c.B);
}

/// Circulant spectrum {A+2B+C, A-2B+C, A-C, A-C}; eigenvectors (1,1,1,1),
/// (1,-1,1,-1) and the plane spanned by (1,0,-1,0), (0,1,0,-1).
template <typename T>
std::array<T, 4> metric_eigenvalues(const CirculantCoeffs<T>& c) {
  return {c.A + T(2) * c.B + c.C, c.A - T(2) * c.B + c.C, c.A - c.C, c.A - c.C};
}

template <typename T>
bool is_admissible(const CirculantCoeffs<T>& c) {
  return T(0) < c.B && c.B < c.C && c.C < c.A;
}

/// Empty string when admissible, otherwise the first violated inequality.
template <typename T>
std::string admissibility_violation(const CirculantCoeffs<T>& c) {
  if (!(T(0) < c.B)) return "0 < B";
  if (!(c.B < c.C)) return "B < C";
  if (!(c.C < c.A)) return "C < A";
  return {};
}

template <typename T>
bool all_finite(const Vector4<T>& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::all_of(x.begin(), x.end(), [](T v) { return std::isfinite(v); });
  } else {
    return true;
  }
}

template <typename T>
void require_finite(const Vector4<T>& x, const char* what) {
  if (!all_finite(x)) throw InvalidArgument(std::string(what) + " has non-finite components");
}

template <typename T>
void require_admissible(const CirculantCoeffs<T>& c) {
  if (auto v = admissibility_violation(c); !v.empty())
    throw NotAdmissible("coefficients violate " + v);
}

template <typename T>
T inner(const CirculantCoeffs<T>& c, const Vector4<T>& x, const Vector4<T>& y) {
  const auto g = metric_matrix(c);
  T acc(0);
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) acc += g[i][j] * x[i] * y[j];
  return acc;
}

/// ((x1-x3)^2 + (x2-x4)^2)(x1-x2+x3-x4)(x1+x2+x3+x4): nonzero exactly when
/// the q-orbit of x is a basis.
template <typename T>
T qbase_polynomial(const Vector4<T>& x) {
  const T d13 = x[0] - x[2];
  const T d24 = x[1] - x[3];
  return (d13 * d13 + d24 * d24) * (x[0] - x[1] + x[2] - x[3]) * (x[0] + x[1] + x[2] + x[3]);
}

inline constexpr double kQBaseRelTol = 1e-10;

template <typename T>
T orbit_scale(const Vector4<T>& x) {
  T m(0);
  for (const auto& v : x) m = std::max(m, abs_value(v));
  return m * m * m * m;
}

/// Floating types compare |polynomial| against 1e-10 * (max|x_i|)^4; exact
/// types test the polynomial against zero.
template <typename T>
bool qbase_predicate(const Vector4<T>& x) {
  const T p = qbase_polynomial(x);
  if constexpr (std::is_floating_point_v<T>) {
    return abs_value(p) > T(kQBaseRelTol) * orbit_scale(x);
  } else {
    return p != T(0);
  }
}

template <typename T>
Mat4<T> qorbit_rows(const Vector4<T>& x) {
  Mat4<T> m{};
  for (std::size_t k = 0; k < kDim; ++k) m[k] = apply_q(x, static_cast<std::int64_t>(k));
  return m;
}

/// Determinant of the matrix with rows x, qx, q^2x, q^3x. Equals
/// -qbase_polynomial(x) identically.
template <typename T>
T det_qorbit(const Vector4<T>& x) {
  return determinant(qorbit_rows(x));
}

template <typename T>
Vector4<T> axpy(T a, const Vector4<T>& x, const Vector4<T>& y) {
  Vector4<T> out{};
  for (std::size_t i = 0; i < kDim; ++i) out[i] = a * x[i] + y[i];
  return out;
}

template <typename T>
Vector4<T> sub(const Vector4<T>& x, const Vector4<T>& y) {
  return axpy(T(-1), y, x);
}

}  // namespace circulant
