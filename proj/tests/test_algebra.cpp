#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "circulant/algebra.hpp"
#include "circulant/random.hpp"

using namespace circulant;
using Rational = boost::multiprecision::cpp_rational;

namespace {

Eigen::Matrix4d to_eigen(const Mat4<double>& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = m[i][j];
  return e;
}

Coeffs random_admissible(Sampler& s) {
  // 0 < B < C < A via sorted positive draws.
  double v[3] = {s.uniform(0.01, 10), s.uniform(0.01, 10), s.uniform(0.01, 10)};
  std::sort(v, v + 3);
  if (v[0] == v[1] || v[1] == v[2]) v[2] += 1.0;
  return {v[2], v[0], v[1]};
}

}  // namespace

TEST(ApplyQ, ShiftsComponentsLeft) {
  EXPECT_EQ(apply_q(Vector{1, 2, 3, 4}, 1), (Vector{2, 3, 4, 1}));
  EXPECT_EQ(apply_q(Vector{1, 0, 0, 0}, 4), (Vector{1, 0, 0, 0}));
  EXPECT_EQ(apply_q(Vector{1, 1, 1, 1}, 1), (Vector{1, 1, 1, 1}));
  EXPECT_EQ(apply_q(Vector{1, 2, 3, 4}, -1), apply_q(Vector{1, 2, 3, 4}, 3));
  EXPECT_EQ(apply_q(Vector{1, 2, 3, 4}, 10), apply_q(Vector{1, 2, 3, 4}, 2));
}

TEST(ApplyQ, FourthPowerIsIdentityAndLowerPowersAreNotPlusMinusIdentity) {
  const auto q = q_matrix<int>(1);
  const auto q2 = mat_mul(q, q);
  const auto q4 = mat_mul(q2, q2);
  EXPECT_EQ(q4, identity_matrix<int>());
  auto neg = identity_matrix<int>();
  for (auto& row : neg)
    for (auto& v : row) v = -v;
  EXPECT_NE(q, identity_matrix<int>());
  EXPECT_NE(q, neg);
  EXPECT_NE(q2, identity_matrix<int>());
  EXPECT_NE(q2, neg);
  // Matrix form agrees with the component shift.
  const Vec4<int> x{1, 2, 3, 4};
  EXPECT_EQ(mat_vec(q, x), apply_q(x, 1));
}

TEST(MetricMatrix, FirstRowAndCirculance) {
  const auto g = metric_matrix(Coeffs{3, 1, 2});
  EXPECT_EQ(g[0], (std::array<double, 4>{3, 1, 2, 1}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(g[i][j], g[(i + 1) % 4][(j + 1) % 4]);
      EXPECT_EQ(g[i][j], g[j][i]);
    }
  EXPECT_EQ(metric_matrix(Coeffs{1, 0, 0}), identity_matrix<double>());
}

TEST(MetricDet, ClosedFormMatchesLuOracle) {
  EXPECT_DOUBLE_EQ(metric_det_closed(Coeffs{3, 1, 2}), 21.0);
  EXPECT_NEAR(to_eigen(metric_matrix(Coeffs{3, 1, 2})).partialPivLu().determinant(), 21.0, 1e-12);
  EXPECT_EQ(metric_det_closed(Coeffs{2, 0.7, 2}), 0.0);
  EXPECT_EQ(metric_det_closed(Coeffs{3, 2, 1}), 0.0);

  Sampler s(11);
  for (int n = 0; n < 2000; ++n) {
    const Coeffs c{s.uniform(-10, 10), s.uniform(-10, 10), s.uniform(-10, 10)};
    const double oracle = to_eigen(metric_matrix(c)).partialPivLu().determinant();
    const double closed = metric_det_closed(c);
    EXPECT_LE(std::abs(closed - oracle), 1e-10 * std::max(1.0, std::abs(oracle)));
    EXPECT_LE(std::abs(determinant(metric_matrix(c)) - oracle), 1e-10 * std::max(1.0, std::abs(oracle)));
  }
}

TEST(MetricEigenvalues, MatchSymmetricEigensolver) {
  auto ev = metric_eigenvalues(Coeffs{3, 1, 2});
  EXPECT_EQ(ev, (std::array<double, 4>{7, 3, 1, 1}));
  EXPECT_EQ(metric_eigenvalues(Coeffs{1, 0, 0}), (std::array<double, 4>{1, 1, 1, 1}));

  Sampler s(12);
  for (int n = 0; n < 500; ++n) {
    const Coeffs c{s.uniform(-5, 5), s.uniform(-5, 5), s.uniform(-5, 5)};
    auto mine = metric_eigenvalues(c);
    std::sort(mine.begin(), mine.end());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(to_eigen(metric_matrix(c)));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(mine[i], es.eigenvalues()[i], 1e-11);
    const double prod = mine[0] * mine[1] * mine[2] * mine[3];
    EXPECT_NEAR(prod, metric_det_closed(c), 1e-9 * std::max(1.0, std::abs(prod)));
  }
}

TEST(Admissibility, StrictChain) {
  EXPECT_TRUE(is_admissible(Coeffs{3, 1, 2}));
  EXPECT_FALSE(is_admissible(Coeffs{3, 2, 2}));
  EXPECT_FALSE(is_admissible(Coeffs{2, 1, 3}));
  EXPECT_FALSE(is_admissible(Coeffs{3, 0, 2}));
  EXPECT_EQ(admissibility_violation(Coeffs{3, 2, 2}), "B < C");
  EXPECT_EQ(admissibility_violation(Coeffs{2, 1, 3}), "C < A");
  EXPECT_EQ(admissibility_violation(Coeffs{3, -1, 2}), "0 < B");
  EXPECT_THROW(require_admissible(Coeffs{3, 2.5, 2}), NotAdmissible);
}

TEST(Admissibility, ImpliesPositiveDefinite) {
  Sampler s(13);
  for (int n = 0; n < 2000; ++n) {
    const auto c = random_admissible(s);
    for (double ev : metric_eigenvalues(c)) EXPECT_GT(ev, 0.0);
    EXPECT_TRUE(cholesky(metric_matrix(c)).has_value());
    EXPECT_EQ(to_eigen(metric_matrix(c)).llt().info(), Eigen::Success);
  }
  // Sufficient, not necessary: (1, 0, 0) is positive definite but inadmissible.
  EXPECT_FALSE(is_admissible(Coeffs{1, 0, 0}));
  EXPECT_TRUE(cholesky(metric_matrix(Coeffs{1, 0, 0})).has_value());
}

TEST(Inner, ReadsMatrixEntriesAndIsQInvariant) {
  const Coeffs c{3, 1, 2};
  EXPECT_EQ(inner(c, Vector{1, 0, 0, 0}, Vector{0, 1, 0, 0}), 1.0);
  EXPECT_EQ(inner(c, Vector{1, 0, 0, 0}, Vector{0, 0, 1, 0}), 2.0);

  Sampler s(14);
  for (int n = 0; n < 2000; ++n) {
    const Coeffs r{s.uniform(-10, 10), s.uniform(-10, 10), s.uniform(-10, 10)};
    const auto x = s.vector(-5, 5);
    const auto y = s.vector(-5, 5);
    const double base = inner(r, x, y);
    EXPECT_NEAR(base, inner(r, y, x), 1e-12 * (1.0 + std::abs(base)));
    for (int k = 1; k < 4; ++k)
      EXPECT_LE(std::abs(inner(r, apply_q(x, k), apply_q(y, k)) - base), 1e-12 * (1.0 + std::abs(base)));
  }
}

TEST(QBase, PredicateExamples) {
  EXPECT_EQ(qbase_polynomial(Vector{1, 0, 0, 0}), 1.0);
  EXPECT_TRUE(qbase_predicate(Vector{1, 0, 0, 0}));
  EXPECT_FALSE(qbase_predicate(Vector{1, 1, 1, 1}));
  EXPECT_FALSE(qbase_predicate(Vector{1, -1, 0, 0}));
  EXPECT_FALSE(qbase_predicate(Vector{1, 0, 1, 0}));
  EXPECT_NEAR(to_eigen(qorbit_rows(Vector{1, -1, 0, 0})).determinant(), 0.0, 1e-15);
  EXPECT_EQ(std::abs(det_qorbit(Vector{1, 0, 0, 0})), 1.0);
  EXPECT_EQ(det_qorbit(Vector{1, 1, 1, 1}), 0.0);
}

TEST(QBase, NonFixedVectorCanStillBeDegenerate) {
  // qx != x and q^2 x != x, yet the orbit sums to zero.
  const Vector x{1, -1, 0, 0};
  EXPECT_NE(apply_q(x, 1), x);
  EXPECT_NE(apply_q(x, 2), x);
  EXPECT_FALSE(qbase_predicate(x));
  EXPECT_EQ(det_qorbit(x), 0.0);
}

TEST(QBase, DeterminantEqualsMinusPolynomialInRationals) {
  Sampler s(15);
  for (int n = 0; n < 300; ++n) {
    Vector4<Rational> x;
    for (auto& v : x) v = Rational(static_cast<int>(s.uniform(-20, 20)), 1 + static_cast<int>(s.uniform(0, 7)));
    if (n % 10 == 0) x[2] = x[0] + x[1] - x[3];  // not necessarily degenerate; mixes in structure
    if (n % 17 == 0) x = {x[0], x[1], x[0], x[1]};  // (x1-x3)^2 + (x2-x4)^2 = 0
    const Rational det = det_qorbit(x);
    EXPECT_EQ(det, -qbase_polynomial(x));
    EXPECT_EQ(qbase_predicate(x), det != 0);
  }
}

TEST(QBase, FloatPredicateAgreesWithDeterminantOracle) {
  Sampler s(16);
  int disagreements = 0;
  for (int n = 0; n < 5000; ++n) {
    const auto x = s.vector(-1, 1);
    const double oracle = to_eigen(qorbit_rows(x)).fullPivLu().determinant();
    const bool oracle_says = std::abs(oracle) > kQBaseRelTol * orbit_scale(x);
    if (oracle_says != qbase_predicate(x)) ++disagreements;
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Linalg, SolveAndInverse) {
  const auto g = metric_matrix(Coeffs{3, 1, 2});
  const auto inv = inverse(g);
  ASSERT_TRUE(inv.has_value());
  const auto prod = mat_mul(g, *inv);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(prod[i][j], i == j ? 1.0 : 0.0, 1e-14);
  EXPECT_FALSE(inverse(metric_matrix(Coeffs{2, 0.5, 2})).has_value() &&
               std::abs(determinant(metric_matrix(Coeffs{2, 0.5, 2}))) > 1e-12);
  EXPECT_FALSE(cholesky(metric_matrix(Coeffs{1, 2, 0})).has_value());
}
