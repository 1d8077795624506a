#include <gtest/gtest.h>

#include <cmath>

#include "biasedcube/corpus.hpp"
#include "biasedcube/hc_verify.hpp"
#include "biasedcube/noise.hpp"
#include "oracles.hpp"

using namespace bcube;

TEST(GlobalHc, HoldsOnNamedFunctions) {
  for (double p : {0.02, 0.1, 0.5}) {
    const Bias b(p);
    for (const BiasedFunction& f : {dictator(4, b, 1), majority(7, b), tribes(8, b, 2, 4), and_function(6, b, 0b111),
                                    parity(5, b, 0b10101)}) {
      const Report rep = verify_global_hc(f);
      EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
      EXPECT_NE(rep.find("global_hc"), nullptr);
    }
  }
}

TEST(GlobalHc, LhsIsTheNoisyFourNorm) {
  const BiasedFunction f = majority(5, Bias(0.3));
  const Outcome* o = verify_global_hc(f).find("global_hc");
  ASSERT_NE(o, nullptr);
  const BiasedFunction g = noise_apply(f, 0.2);
  EXPECT_NEAR(o->lhs, std::pow(oracle::norm_power(g, 4.0), 0.25), 1e-12);
}

TEST(GlobalHc, DictatorIsCloseToTight) {
  // A negative tolerance demands a strict margin; the constant function has equality.
  const BiasedFunction c = BiasedFunction::constant(3, Bias(0.3), 1.0);
  EXPECT_FALSE(verify_global_hc(c, -1e-3).passed());
  EXPECT_TRUE(verify_global_hc(c).passed());
}

TEST(TermBound, HoldsAtBothRhos) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const BiasedFunction f = random_low_degree(6, Bias(0.1 + 0.04 * i), 3, rng);
    EXPECT_TRUE(verify_term_bound(f, 0.2).passed());
    EXPECT_TRUE(verify_term_bound(f, 1.0 / std::sqrt(12.0)).passed());
  }
}

TEST(DegreeR, Holds) {
  Rng rng(9);
  for (int r = 1; r <= 3; ++r) {
    const BiasedFunction f = random_low_degree(6, Bias(0.2), r, rng);
    EXPECT_TRUE(verify_degree_r(f, r).passed());
  }
}

TEST(CharacterMoment, DefinesSigmaQ) {
  for (double p : {0.1, 0.4})
    for (double q : {3.0, 4.0, 6.0}) {
      const double s = character_moment_sigma(p, q);
      const Bias b(p);
      const double moment = p * std::pow(std::abs(b.chi1()), q) + (1 - p) * std::pow(std::abs(b.chi0()), q);
      EXPECT_NEAR(std::pow(s, 2.0 - q), moment, 1e-10 * moment);
    }
}

TEST(HcCorpus, SmallCorpusHasNoViolations) {
  CorpusSpec spec;
  spec.ns = {2, 4, 6};
  spec.random_boolean_per_density = 3;
  spec.random_low_degree = 3;
  const Summary s = verify_hc_corpus(generate_corpus(5, spec), HcSuiteOptions{});
  EXPECT_EQ(s.violation_count(), 0u);
  EXPECT_GT(s.tally("global_hc").hypothesis_satisfied, 0u);
}
