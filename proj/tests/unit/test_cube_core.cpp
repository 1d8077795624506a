#include <gtest/gtest.h>

#include <cmath>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/corpus.hpp"
#include "oracles.hpp"

using namespace bcube;

namespace {

BiasedFunction random_real(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(std::size_t{1} << n);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return BiasedFunction(n, Bias(p), std::move(v));
}

}  // namespace

TEST(Bias, RejectsDegenerateProbabilities) {
  EXPECT_THROW(Bias(0.0), std::invalid_argument);
  EXPECT_THROW(Bias(1.0), std::invalid_argument);
  EXPECT_THROW(Bias(-0.2), std::invalid_argument);
  EXPECT_THROW(Bias(std::nan("")), std::invalid_argument);
  EXPECT_NEAR(Bias(0.3).sigma(), std::sqrt(0.21), 1e-15);
}

TEST(Bias, CharacterHasMeanZeroVarianceOne) {
  for (double p : {0.02, 0.1, 0.3, 0.5, 0.9}) {
    const Bias b(p);
    EXPECT_NEAR(p * b.chi1() + (1 - p) * b.chi0(), 0.0, 1e-14);
    EXPECT_NEAR(p * b.chi1() * b.chi1() + (1 - p) * b.chi0() * b.chi0(), 1.0, 1e-13);
  }
}

TEST(BiasedFunction, RejectsWrongTableLength) {
  EXPECT_THROW(BiasedFunction(3, Bias(0.5), std::vector<double>(7)), std::invalid_argument);
}

TEST(Transform, MatchesCharacterSums) {
  for (double p : {0.02, 0.3, 0.5, 0.77}) {
    for (int n : {1, 3, 6}) {
      const BiasedFunction f = random_real(n, p, 100 + n);
      const Spectrum s = forward_transform(f);
      const auto naive = oracle::all_coefficients(f);
      for (Mask m = 0; m < f.size(); ++m) EXPECT_NEAR(s[m], naive[m], 1e-11) << "p=" << p << " S=" << m;
    }
  }
}

TEST(Transform, InverseRoundTrip) {
  const BiasedFunction f = random_real(9, 0.1, 7);
  const BiasedFunction g = inverse_transform(forward_transform(f));
  for (Mask x = 0; x < f.size(); ++x) EXPECT_NEAR(f[x], g[x], 1e-10);
}

TEST(Transform, ParsevalAndPlancherel) {
  const BiasedFunction f = random_real(8, 0.2, 1), g = random_real(8, 0.2, 2);
  const Spectrum sf = forward_transform(f), sg = forward_transform(g);
  double cross = 0.0;
  for (Mask m = 0; m < sf.size(); ++m) cross += sf[m] * sg[m];
  EXPECT_NEAR(sf.squared_sum(), oracle::norm_power(f, 2.0), 1e-10);
  EXPECT_NEAR(cross, inner_product(f, g), 1e-10);
}

TEST(Transform, CharactersAreOrthonormal) {
  const int n = 4;
  for (Mask s = 0; s < 16; ++s)
    for (Mask t = 0; t < 16; ++t)
      EXPECT_NEAR(inner_product(character(n, Bias(0.15), s), character(n, Bias(0.15), t)), s == t ? 1.0 : 0.0, 1e-12);
}

TEST(Transform, DegreeOfAnd) {
  const Spectrum s = forward_transform(and_function(5, Bias(0.3), 0b10110));
  EXPECT_EQ(s.degree(1e-12), 3);
}

TEST(Norms, MatchDirectSums) {
  const BiasedFunction f = random_real(6, 0.35, 3);
  for (double q : {1.0, 2.0, 3.0, 4.0})
    EXPECT_NEAR(biased_norm(f, q), std::pow(oracle::norm_power(f, q), 1.0 / q), 1e-12);
  EXPECT_NEAR(f.mean(), oracle::expectation(f), 1e-14);
}

TEST(Restrict, FixesCoordinates) {
  const BiasedFunction f = random_real(4, 0.4, 9);
  // Coordinates 1 and 3 set to 1 and 0.
  const BiasedFunction g = restrict(f, Restriction(0b1010, 0b0010));
  ASSERT_EQ(g.n(), 2);
  for (Mask y = 0; y < 4; ++y) EXPECT_EQ(g[y], f[deposit_bits(y, 0b0101) | 0b0010]);
}

TEST(Derivative, IsIndependentOfItsCoordinates) {
  const BiasedFunction f = random_real(5, 0.25, 11);
  const BiasedFunction d = derivative(f, 0b00101);
  for (Mask x = 0; x < d.size(); ++x) EXPECT_DOUBLE_EQ(d[x], d[x & ~Mask{0b00101}]);
  // sigma^-2|S| ||D_S f||^2 is the generalized influence.
  const double sigma2 = f.bias().variance();
  EXPECT_NEAR(oracle::norm_power(d, 2.0) / (sigma2 * sigma2), oracle::generalized_influence(f, 0b00101), 1e-11);
}

TEST(Truncate, KeepsLowDegreeCoefficients) {
  const BiasedFunction f = random_real(5, 0.3, 5);
  const Spectrum full = forward_transform(f);
  const Spectrum low = forward_transform(truncate(f, 2));
  for (Mask m = 0; m < full.size(); ++m) EXPECT_NEAR(low[m], popcount(m) <= 2 ? full[m] : 0.0, 1e-11);
}

TEST(Bits, DepositExtractInverse) {
  for (Mask where : {0b1011u, 0b110100u, 0u})
    for (Mask x = 0; x < 64; ++x) EXPECT_EQ(extract_bits(deposit_bits(x, where), where), x & ((Mask{1} << popcount(where)) - 1));
  int count = 0;
  for_each_k_subset(6, 3, [&](Mask) { ++count; });
  EXPECT_EQ(count, 20);
  EXPECT_DOUBLE_EQ(binomial(10, 3), 120.0);
}

TEST(Corpus, SeedDeterminesEntries) {
  CorpusSpec spec;
  spec.ns = {4, 6};
  const Corpus a = generate_corpus(42, spec), b = generate_corpus(42, spec), c = generate_corpus(43, spec);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].label, b.entries[i].label);
    for (Mask x = 0; x < a.entries[i].f.size(); ++x) EXPECT_EQ(a.entries[i].f[x], b.entries[i].f[x]);
    if (i < c.entries.size() && c.entries[i].f.size() == a.entries[i].f.size())
      for (Mask x = 0; x < a.entries[i].f.size(); ++x) differs = differs || c.entries[i].f[x] != a.entries[i].f[x];
  }
  EXPECT_TRUE(differs);
}

TEST(Corpus, FullCorpusIsLargeEnough) {
  EXPECT_GE(generate_corpus(1, CorpusSpec{}).entries.size(), 2000u);
}

TEST(Corpus, NamedFunctions) {
  const Bias b(0.5);
  EXPECT_NEAR(majority(5, b).mean(), 0.5, 1e-15);
  EXPECT_NEAR(threshold_function(4, b, 4).mean(), 1.0 / 16, 1e-15);
  // Tribes with 2 blocks of width 2 at p = 1/2: 1 - (3/4)^2.
  EXPECT_NEAR(tribes(4, b, 2, 2).mean(), 1.0 - 0.5625, 1e-15);
  EXPECT_NEAR(anti_tribes(4, b, 2, 2).mean(), 0.5625, 1e-15);
  EXPECT_NEAR(parity(3, b, 0b111).mean(), 0.5, 1e-15);
}
