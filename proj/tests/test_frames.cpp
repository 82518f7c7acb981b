#include <gtest/gtest.h>

#include "circulant/frames.hpp"
#include "circulant/random.hpp"

using namespace circulant;

namespace {

// Oracle: Gram matrix straight from the metric matrix, no verify_frame.
double gram_entry(const Coeffs& c, const Vector& a, const Vector& b) {
  const auto g = metric_matrix(c);
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += a[i] * g[i][j] * b[j];
  return acc;
}

Coeffs random_admissible(Sampler& s, double min_gap) {
  const double b = s.uniform(min_gap, 5);
  const double c = b + s.uniform(min_gap, 5);
  const double a = c + s.uniform(min_gap, 5);
  return {a, b, c};
}

}  // namespace

TEST(SpectralFrame, ExampleCoefficients) {
  const Coeffs c{3, 1, 2};
  const auto f = spectral_frame(c);
  const double a = 1.0 / (2.0 * std::sqrt(28.0));
  const double b = 1.0 / (2.0 * std::sqrt(12.0));
  const double s = 0.5;
  const Vector expected{a + b + s, a - b, a + b - s, a - b};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(f.seed[i], expected[i], 1e-15);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(gram_entry(c, f.vectors[i], f.vectors[j]), i == j ? 1.0 : 0.0, 1e-12);
  EXPECT_LE(verify_frame(c, f.seed).max_deviation, 1e-12);
  EXPECT_TRUE(qbase_predicate(f.seed));
  for (int k = 0; k < 4; ++k) EXPECT_EQ(f.vectors[k], apply_q(f.seed, k));
}

TEST(SpectralFrame, IllConditionedButValid) {
  const double eps = 1e-3;
  const Coeffs c{1 + eps, eps / 2, eps};
  EXPECT_LE(verify_frame(c, spectral_frame(c).seed).max_deviation, 1e-10);
}

TEST(SpectralFrame, RejectsInadmissible) {
  EXPECT_THROW(spectral_frame(Coeffs{3, 1, 3}), NotAdmissible);
  EXPECT_THROW(spectral_frame(Coeffs{3, 2.5, 2}), NotAdmissible);
}

TEST(SpectralFrame, OrthonormalForRandomCoefficients) {
  Sampler s(21);
  for (int n = 0; n < 1000; ++n) {
    const auto c = random_admissible(s, n % 3 == 0 ? 1e-3 : 1e-1);
    const auto f = spectral_frame(c);
    EXPECT_LE(verify_frame(c, f.seed).max_deviation, 1e-12 * (1 + c.A)) << c.A << ' ' << c.B << ' ' << c.C;
    EXPECT_TRUE(qbase_predicate(f.seed));
  }
}

TEST(VerifyFrame, EuclideanStandardBasis) {
  const auto r = verify_frame(Coeffs{1, 0, 0}, Vector{1, 0, 0, 0});
  EXPECT_EQ(r.gram, identity_matrix<double>());
  EXPECT_EQ(r.max_deviation, 0.0);
}

TEST(VerifyFrame, FixedVectorGivesRankOneGram) {
  const Coeffs c{3, 1, 2};
  const auto r = verify_frame(c, Vector{1, 1, 1, 1});
  for (const auto& row : r.gram)
    for (double v : row) EXPECT_EQ(v, r.gram[0][0]);
  EXPECT_GT(r.max_deviation, 1.0);
}

TEST(VerifyFrame, GramIsCirculant) {
  Sampler s(22);
  for (int n = 0; n < 500; ++n) {
    const auto c = random_admissible(s, 1e-2);
    const auto r = verify_frame(c, s.vector(-2, 2));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(r.gram[i][j], r.gram[j][i], 1e-12 * (1 + std::abs(r.gram[i][j])));
        EXPECT_NEAR(r.gram[i][j], r.gram[(i + 1) % 4][(j + 1) % 4], 1e-12 * (1 + std::abs(r.gram[i][j])));
      }
  }
}

TEST(VerifyFrame, ThreeConditionsCompleteTheFrame) {
  // If g(x,x)=1, g(x,qx)=0, g(x,q^2x)=0 hold to tol, every Gram entry does to 4 tol.
  Sampler s(23);
  for (int n = 0; n < 300; ++n) {
    const auto c = random_admissible(s, 1e-2);
    auto x = spectral_frame(c).seed;
    for (auto& v : x) v *= 1.0 + s.uniform(-1e-9, 1e-9);
    const double tol = std::max({std::abs(inner(c, x, x) - 1.0), std::abs(inner(c, x, apply_q(x, 1))),
                                 std::abs(inner(c, x, apply_q(x, 2)))});
    EXPECT_LE(verify_frame(c, x).max_deviation, 4 * tol + 1e-15);
  }
}

TEST(LiteralFrame, LiteralFormulasAreRecorded) {
  const Coeffs c{4, 1, 2};
  const auto r = paper_frame(c);
  ASSERT_TRUE(r.candidate.has_value());
  ASSERT_TRUE(r.residual.has_value());
  const double rm = std::sqrt(1.0);
  const double rp = std::sqrt(9.0);
  EXPECT_DOUBLE_EQ(r.x2, (rm - rp) / (2 * rm * rp));
  EXPECT_DOUBLE_EQ(r.sum_x1_x3, r.x2);
  EXPECT_DOUBLE_EQ(r.prod_x1_x3, (2.0 - 4.0 - 8.0) / (2.0 * 2.0 * rm * rp));
  EXPECT_DOUBLE_EQ(r.discriminant_D, r.sum_x1_x3 * r.sum_x1_x3 - 4 * r.prod_x1_x3);
  const auto& x = *r.candidate;
  EXPECT_EQ(x[3], 0.0);
  EXPECT_GE(x[0], x[2]);
  EXPECT_NEAR(x[0] + x[2], r.sum_x1_x3, 1e-15);
  EXPECT_NEAR(x[0] * x[2], r.prod_x1_x3, 1e-15);
  // Independent Gram evaluation of the candidate.
  double dev = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      dev = std::max(dev, std::abs(gram_entry(c, apply_q(x, i), apply_q(x, j)) - (i == j ? 1.0 : 0.0)));
  EXPECT_NEAR(r.residual->max_deviation, dev, 1e-14);
  EXPECT_EQ(r.status, PaperStatus::residual_exceeds_tolerance);
  EXPECT_LE(r.spectral_max_deviation, 1e-12);
}

TEST(LiteralFrame, SqrtDomainFailure) {
  const auto r = paper_frame(Coeffs{3, 0.5, 2.5});
  EXPECT_EQ(r.status, PaperStatus::sqrt_domain_failure);
  EXPECT_FALSE(r.candidate.has_value());
}

TEST(LiteralFrame, CandidateOnlyWithOkOrResidualStatus) {
  Sampler s(24);
  for (int n = 0; n < 1000; ++n) {
    const auto c = random_admissible(s, 1e-3);
    const auto r = paper_frame(c);
    if (r.candidate) {
      EXPECT_TRUE(r.status == PaperStatus::ok || r.status == PaperStatus::residual_exceeds_tolerance);
    } else {
      EXPECT_TRUE(r.status == PaperStatus::sqrt_domain_failure || r.status == PaperStatus::negative_discriminant);
    }
  }
}
