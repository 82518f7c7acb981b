#include <gtest/gtest.h>

#include <numbers>

#include "circulant/frames.hpp"
#include "circulant/pyramid.hpp"
#include "circulant/random.hpp"

using namespace circulant;

namespace {

double sq_len(const Coeffs& c, const Vector& a, const Vector& b) {
  const auto d = sub(b, a);
  return inner(c, d, d);
}

// Law of cosines on explicit vertices: angle at `apex` in triangle (p, apex, r).
double cos_at(const Coeffs& c, const Vector& p, const Vector& apex, const Vector& r) {
  const double a2 = sq_len(c, apex, p);
  const double b2 = sq_len(c, apex, r);
  const double opp2 = sq_len(c, p, r);
  return (a2 + b2 - opp2) / (2 * std::sqrt(a2) * std::sqrt(b2));
}

}  // namespace

TEST(Pyramid, ExampleAtBasisVector) {
  const Coeffs c{3, 1, 2};
  const auto r = pyramid_report(c, {1, 0, 0, 0});
  EXPECT_NEAR(r.cos_alpha, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.cos_beta, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.edge_sq_long, 4.0, 1e-14);
  EXPECT_NEAR(r.edge_sq_short, 2.0, 1e-14);
  EXPECT_NEAR(r.cos_gamma, 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(r.cos_delta, 0.75, 1e-15);
  EXPECT_LE(r.angle_sum_residual, 1e-12);
}

TEST(Pyramid, OrthonormalSeedGivesEquilateralFaces) {
  const Coeffs c{3, 1, 2};
  const auto r = pyramid_report(c, spectral_frame(c).seed);
  EXPECT_NEAR(r.cos_alpha, 0.0, 1e-12);
  EXPECT_NEAR(r.cos_beta, 0.0, 1e-12);
  EXPECT_NEAR(r.cos_gamma, 0.5, 1e-12);
  EXPECT_NEAR(r.cos_delta, 0.5, 1e-12);
}

TEST(Pyramid, DegenerateSeeds) {
  const Coeffs c{3, 1, 2};
  EXPECT_THROW(pyramid_report(c, {1, 1, 1, 1}), DegeneratePyramid);
  EXPECT_THROW(pyramid_report(c, {1, 0, 1, 0}), DegeneratePyramid);
  EXPECT_THROW(pyramid_report(c, {1, NAN, 1, 0}), InvalidArgument);
}

TEST(Pyramid, FormulasMatchLawOfCosinesOnEdgeVectors) {
  Sampler s(51);
  for (int n = 0; n < 1000; ++n) {
    const double b = s.uniform(0.01, 3);
    const double cc = b + s.uniform(0.01, 3);
    const Coeffs c{cc + s.uniform(0.01, 3), b, cc};
    const auto x = random_qbase_seed(s);
    const auto r = pyramid_report(c, x);
    const double scale = 1e-12 * (1.0 + inner(c, x, x));
    const Vector L = x, N = apply_q(x, 1), S = apply_q(x, 2), T = apply_q(x, 3);
    // Four long edges, two short ones.
    for (const auto& [p, q] : {std::pair{L, N}, {N, S}, {S, T}, {L, T}})
      EXPECT_NEAR(sq_len(c, p, q), r.edge_sq_long, scale);
    for (const auto& [p, q] : {std::pair{L, S}, {N, T}})
      EXPECT_NEAR(sq_len(c, p, q), r.edge_sq_short, scale);
    EXPECT_NEAR(cos_at(c, N, L, S), r.cos_gamma, 1e-9);
    EXPECT_NEAR(cos_at(c, L, N, S), r.cos_delta, 1e-9);
    EXPECT_LE(r.law_of_cosines_residual, 1e-9);
    EXPECT_LE(r.angle_sum_residual, 1e-9);
    EXPECT_GE(r.cos_gamma, -1.0);
    EXPECT_LE(r.cos_gamma, 1.0);
    EXPECT_GE(r.cos_delta, -1.0);
    EXPECT_LE(r.cos_delta, 1.0);
  }
}
