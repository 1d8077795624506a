#include <gtest/gtest.h>

#include <cmath>

#include "biasedcube/corpus.hpp"
#include "biasedcube/influence.hpp"
#include "oracles.hpp"

using namespace bcube;

TEST(Influence, TableMatchesIteratedDifferences) {
  Rng rng(3);
  for (double p : {0.1, 0.5}) {
    const BiasedFunction f = random_low_degree(6, Bias(p), 3, rng);
    const InfluenceTable t = influence_table(f);
    const auto def = generalized_influences_definitional(f);
    for (Mask s = 0; s < f.size(); ++s) {
      const double ref = oracle::generalized_influence(f, s);
      EXPECT_NEAR(t[s], ref, 1e-10 * (1 + ref));
      EXPECT_NEAR(def[s], ref, 1e-10 * (1 + ref));
    }
  }
}

TEST(Influence, CoordinateInfluencesAndTotal) {
  const BiasedFunction f = majority(5, Bias(0.3));
  const auto c = coordinate_influences(f);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(c[i], oracle::coordinate_influence(f, i), 1e-13);
    sum += c[i];
  }
  EXPECT_NEAR(total_influence(f), sum, 1e-12);
  EXPECT_NEAR(influence_table(f).total, sum, 1e-12);
}

TEST(Influence, DictatorHasOneInfluentialCoordinate) {
  const BiasedFunction f = dictator(4, Bias(0.2), 2);
  const auto c = coordinate_influences(f);
  EXPECT_NEAR(c[2], 1.0, 1e-15);
  EXPECT_EQ(c[0], 0.0);
}

TEST(Influence, SupersetSumsMatchDirectSums) {
  const int n = 4;
  std::vector<double> in(16);
  for (std::size_t i = 0; i < 16; ++i) in[i] = static_cast<double>(i * i % 7);
  const auto out = superset_sums(in, n);
  for (Mask s = 0; s < 16; ++s) {
    double ref = 0.0;
    for (Mask t = 0; t < 16; ++t)
      if (is_subset(s, t)) ref += in[t];
    EXPECT_DOUBLE_EQ(out[s], ref);
  }
}

TEST(Globalness, BoostsOfAnd) {
  // AND of 3 coordinates at p: fixing J inside the AND multiplies the measure by p^-|J|.
  const double p = 0.3;
  const BiasedFunction f = and_function(4, Bias(p), 0b0111);
  const auto boosts = restriction_boosts(f);
  EXPECT_NEAR(boosts[0], p * p * p, 1e-15);
  EXPECT_NEAR(boosts[0b0001], p * p, 1e-15);
  EXPECT_NEAR(boosts[0b1000], p * p * p, 1e-15);
  EXPECT_NEAR(globalness_delta(f, 1), p * p - p * p * p, 1e-15);
  EXPECT_NEAR(globalness_delta(f, 3), 1.0 - p * p * p, 1e-15);
  EXPECT_TRUE(is_global(f, 1, p * p));
  EXPECT_FALSE(is_global(f, 1, 0.01));
}

TEST(Monotone, ExactCheck) {
  EXPECT_TRUE(is_monotone(majority(5, Bias(0.5))));
  EXPECT_TRUE(is_monotone(tribes(6, Bias(0.5), 2, 3)));
  EXPECT_FALSE(is_monotone(parity(3, Bias(0.5), 0b011)));
}

TEST(Measure, PolynomialInP) {
  const BiasedFunction f = threshold_function(6, Bias(0.5), 4);
  for (double p : {0.1, 0.37, 0.9}) EXPECT_NEAR(mean_at(f, p), f.with_bias(Bias(p)).mean(), 1e-14);
}

TEST(Russo, HoldsOnMonotoneExamples) {
  for (double p : {0.1, 0.5}) {
    EXPECT_TRUE(russo_check(majority(7, Bias(p)), p, 1e-3).passed());
    EXPECT_TRUE(russo_check(tribes(6, Bias(p), 2, 3), p, 1e-3).passed());
  }
}

TEST(ConditionalLemmas, NoViolationsOnStructuredFunctions) {
  for (double p : {0.05, 0.2}) {
    for (const BiasedFunction& f : {majority(7, Bias(p)), tribes(8, Bias(p), 2, 4), dictator(5, Bias(p), 0)}) {
      for (int r = 1; r <= 2; ++r) {
        EXPECT_TRUE(verify_concentration(f, r, 0.1).passed());
        EXPECT_TRUE(verify_equivalence_lemmas(f, r, 0.1).passed());
      }
    }
  }
}

TEST(ConditionalLemmas, GlobalFunctionSatisfiesHypothesis) {
  // Majority on many coordinates at small p is global for small r, so the hypothesis fires.
  const BiasedFunction f = threshold_function(10, Bias(0.05), 1);
  const Report rep = verify_equivalence_lemmas(f, 1, globalness_delta(f, 1));
  const Outcome* o = rep.find("equivalence.restrict_one");
  ASSERT_NE(o, nullptr);
  EXPECT_TRUE(o->hypothesis);
  EXPECT_TRUE(rep.passed());
}
