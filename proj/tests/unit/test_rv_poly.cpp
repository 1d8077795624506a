#include <gtest/gtest.h>

#include <cmath>

#include "biasedcube/corpus.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/rv_poly.hpp"

using namespace bcube;

TEST(FiniteRV, StandardizedHasMeanZeroVarianceOne) {
  const FiniteRV z = FiniteRV::standardized({-1.0, 0.5, 3.0}, {0.2, 0.5, 0.3});
  EXPECT_TRUE(z.is_standard());
  EXPECT_NEAR(z.mean(), 0.0, 1e-14);
  EXPECT_NEAR(z.variance(), 1.0, 1e-14);
  EXPECT_TRUE(FiniteRV::rademacher().is_standard());
  EXPECT_TRUE(FiniteRV::biased_character(0.1).is_standard());
}

TEST(FiniteRV, RejectsBadDistributions) {
  EXPECT_THROW(FiniteRV({1.0, 2.0}, {0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(FiniteRV({1.0}, {0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(FiniteRV::standardized({1.0, 1.0}, {0.5, 0.5}), std::invalid_argument);
}

TEST(FiniteRV, MomentSigma) {
  const FiniteRV z = FiniteRV::biased_character(0.2);
  for (double q : {3.0, 4.0}) EXPECT_NEAR(std::pow(z.moment_sigma(q), 2.0 - q), z.abs_moment(q), 1e-12);
}

TEST(MultilinearPoly, EvaluateAndDerivative) {
  // f = 1 + 2 v0 + 3 v0 v1
  const MultilinearPoly f(2, {1.0, 2.0, 0.0, 3.0});
  const double z[] = {2.0, -1.0};
  EXPECT_DOUBLE_EQ(f.evaluate(z), 1.0 + 4.0 - 6.0);
  const MultilinearPoly d = f.derivative(0b01);
  EXPECT_DOUBLE_EQ(d[0], 2.0);
  EXPECT_DOUBLE_EQ(d[0b10], 3.0);
  EXPECT_EQ(f.degree(), 2);
  const auto w = f.w_table();
  EXPECT_DOUBLE_EQ(w[0b01], 4.0 + 9.0);
  EXPECT_DOUBLE_EQ(f.noise(0.5)[0b11], 0.75);
}

TEST(Expectation, ExpansionAgreesWithSupportSum) {
  Rng rng(4);
  const MultilinearPoly f = MultilinearPoly::random(3, 2, rng);
  const std::vector<FiniteRV> rvs{FiniteRV::rademacher(), FiniteRV::biased_character(0.3),
                                  FiniteRV::standardized({0.0, 1.0, 5.0}, {0.3, 0.3, 0.4})};
  for (int q = 1; q <= 4; ++q) {
    const double direct = expectation(f, rvs, [q](double v) { return std::pow(v, q); });
    EXPECT_NEAR(moment_by_expansion(f, rvs, q), direct, 1e-10 * (1 + std::abs(direct)));
  }
  EXPECT_NEAR(abs_moment(f, rvs, 2.0), moment_by_expansion(f, rvs, 2), 1e-12);
}

TEST(RvInfluence, AgreesWithDerivativeEnergy) {
  Rng rng(5);
  const MultilinearPoly f = MultilinearPoly::random(3, 3, rng);
  const std::vector<FiniteRV> rvs{FiniteRV::biased_character(0.1), FiniteRV::rademacher(),
                                  FiniteRV::biased_character(0.4)};
  const auto sig = moment_sigmas(rvs, 4.0);
  for (Mask s = 0; s < 8; ++s)
    EXPECT_NEAR(rv_influence(f, sig, s), rv_influence_by_expectation(f, rvs, sig, s), 1e-10);
}

TEST(QMoment, HoldsForSampleInstances) {
  Rng rng(6);
  for (double q : {3.0, 4.0, 6.0}) {
    const MultilinearPoly f = MultilinearPoly::random(3, 2, rng);
    const std::vector<FiniteRV> rvs{FiniteRV::biased_character(0.2), FiniteRV::rademacher(),
                                    FiniteRV::standardized({-1.0, 2.0, 4.0}, {0.5, 0.4, 0.1})};
    const Report rep = verify_q_moment(f, rvs, q, std::pow(2.0 * q, -1.5));
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
    EXPECT_TRUE(lemma_n1_grid(rvs[2], q, std::pow(2.0 * q, -1.5)).passed());
  }
}

TEST(Invariance, TelescopingMatchesTotalGap) {
  Rng rng(7);
  const MultilinearPoly f = MultilinearPoly::random(4, 2, rng);
  std::vector<FiniteRV> x(4, FiniteRV::rademacher());
  std::vector<FiniteRV> y(4, FiniteRV::biased_character(0.3));
  for (const SmoothTest& t : {cubic_test(), sine_test(1.0)}) {
    const Report rep = invariance_gap(f, x, y, t);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
    const Outcome* tel = rep.find("invariance.telescoping");
    ASSERT_NE(tel, nullptr);
    EXPECT_TRUE(tel->conclusion);
  }
}

TEST(Invariance, ExactExpectationOfCubic) {
  Rng rng(8);
  const MultilinearPoly f = MultilinearPoly::random(3, 2, rng);
  const std::vector<FiniteRV> x(3, FiniteRV::rademacher());
  const double a = exact_expectation(f, x, cubic_test());
  EXPECT_NEAR(a, expectation(f, x, [](double v) { return v * v * v; }), 1e-12);
}

TEST(HammingBall, ThresholdIsClosestInMeasure) {
  const int n = 12;
  const double p = 0.3, alpha = 0.2;
  const BiasedFunction f = hamming_ball(n, p, alpha);
  EXPECT_TRUE(f.is_boolean());
  EXPECT_TRUE(is_monotone(f));
  const int t = hamming_ball_threshold(n, p, alpha);
  const double gap = std::abs(f.mean() - alpha);
  for (int other : {t - 1, t + 1})
    if (other >= 0 && other <= n) EXPECT_LE(gap, std::abs(threshold_function(n, Bias(p), other).mean() - alpha));
}
