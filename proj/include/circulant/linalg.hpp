// Fixed-size 4x4 linear algebra used throughout the library.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

namespace circulant {

inline constexpr std::size_t kDim = 4;

template <typename T>
using Vec4 = std::array<T, kDim>;

template <typename T>
using Mat4 = std::array<std::array<T, kDim>, kDim>;

template <typename T>
constexpr Mat4<T> zero_matrix() {
  Mat4<T> m{};
  for (auto& row : m) row.fill(T(0));
  return m;
}

template <typename T>
constexpr Mat4<T> identity_matrix() {
  auto m = zero_matrix<T>();
  for (std::size_t i = 0; i < kDim; ++i) m[i][i] = T(1);
  return m;
}

template <typename T>
constexpr Vec4<T> mat_vec(const Mat4<T>& m, const Vec4<T>& v) {
  Vec4<T> out{};
  for (std::size_t i = 0; i < kDim; ++i) {
    T acc(0);
    for (std::size_t j = 0; j < kDim; ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

template <typename T>
constexpr Mat4<T> mat_mul(const Mat4<T>& a, const Mat4<T>& b) {
  auto out = zero_matrix<T>();
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t j = 0; j < kDim; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

template <typename T>
constexpr Mat4<T> transpose(const Mat4<T>& a) {
  Mat4<T> out{};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) out[i][j] = a[j][i];
  return out;
}

template <typename T>
T abs_value(const T& v) {
  using std::abs;
  return abs(v);
}

/// LU factorization with partial pivoting, stored in place (unit lower
/// triangle implied). Works for any field type, including exact rationals.
template <typename T>
struct LuFactor {
  Mat4<T> lu;
  std::array<std::size_t, kDim> perm{};
  int sign = 1;
  bool singular = false;
};

template <typename T>
LuFactor<T> lu_factor(Mat4<T> a) {
  LuFactor<T> f;
  for (std::size_t i = 0; i < kDim; ++i) f.perm[i] = i;
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t pivot = col;
    T best = abs_value(a[col][col]);
    for (std::size_t r = col + 1; r < kDim; ++r) {
      T cand = abs_value(a[r][col]);
      if (best < cand) {
        best = cand;
        pivot = r;
      }
    }
    if (a[pivot][col] == T(0)) {
      f.singular = true;
      continue;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(f.perm[pivot], f.perm[col]);
      f.sign = -f.sign;
    }
    for (std::size_t r = col + 1; r < kDim; ++r) {
      T m = a[r][col] / a[col][col];
      a[r][col] = m;
      for (std::size_t c = col + 1; c < kDim; ++c) a[r][c] -= m * a[col][c];
    }
  }
  f.lu = a;
  return f;
}

template <typename T>
T determinant(const Mat4<T>& a) {
  const auto f = lu_factor(a);
  if (f.singular) return T(0);
  T det(f.sign);
  for (std::size_t i = 0; i < kDim; ++i) det *= f.lu[i][i];
  return det;
}

// Returns nullopt when the matrix is exactly singular.
template <typename T>
std::optional<Vec4<T>> solve(const Mat4<T>& a, const Vec4<T>& b) {
  const auto f = lu_factor(a);
  if (f.singular) return std::nullopt;
  Vec4<T> y{};
  for (std::size_t i = 0; i < kDim; ++i) {
    T acc = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) acc -= f.lu[i][j] * y[j];
    y[i] = acc;
  }
  Vec4<T> x{};
  for (std::size_t ii = kDim; ii-- > 0;) {
    T acc = y[ii];
    for (std::size_t j = ii + 1; j < kDim; ++j) acc -= f.lu[ii][j] * x[j];
    x[ii] = acc / f.lu[ii][ii];
  }
  return x;
}

template <typename T>
std::optional<Mat4<T>> inverse(const Mat4<T>& a) {
  Mat4<T> inv{};
  for (std::size_t col = 0; col < kDim; ++col) {
    Vec4<T> e{};
    e.fill(T(0));
    e[col] = T(1);
    auto x = solve(a, e);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < kDim; ++r) inv[r][col] = (*x)[r];
  }
  return inv;
}

/// Cholesky factor L (a = L L^T); nullopt unless a is symmetric positive
/// definite to working precision.
template <typename T>
std::optional<Mat4<T>> cholesky(const Mat4<T>& a) {
  auto l = zero_matrix<T>();
  for (std::size_t j = 0; j < kDim; ++j) {
    T d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j][k] * l[j][k];
    if (!(d > T(0))) return std::nullopt;
    using std::sqrt;
    l[j][j] = sqrt(d);
    for (std::size_t i = j + 1; i < kDim; ++i) {
      T s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }
  return l;
}

template <typename T>
T max_abs_entry(const Mat4<T>& a) {
  T m(0);
  for (const auto& row : a)
    for (const auto& v : row) m = std::max(m, abs_value(v));
  return m;
}

}  // namespace circulant
