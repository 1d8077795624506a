// Randomized invariants, each checked over a fixed range of seeds so failures replay exactly.
#include <gtest/gtest.h>

#include <cmath>

#include "biasedcube/corpus.hpp"
#include "biasedcube/families.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"
#include "biasedcube/threshold.hpp"
#include "oracles.hpp"

using namespace bcube;

namespace {

Hypergraph random_graph(std::uint64_t seed, int vertices, int edges, int r) {
  Rng rng(seed);
  std::vector<VertexSet> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < edges && ++guard < 1000) {
    VertexSet e = 0;
    while (std::popcount(e) < r) e |= VertexSet{1} << rng.below(static_cast<std::uint64_t>(vertices));
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return Hypergraph(vertices, out);
}

}  // namespace

TEST(Property, ParsevalOnRandomFunctions) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const int n = 1 + static_cast<int>(rng.below(10));
    const BiasedFunction f = random_boolean(n, Bias(rng.uniform(0.02, 0.98)), 0.4, rng);
    EXPECT_NEAR(forward_transform(f).squared_sum(), f.mean(), 1e-11) << seed;
  }
}

TEST(Property, NoiseContractsNorms) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const BiasedFunction f = random_low_degree(6, Bias(rng.uniform(0.05, 0.95)), 3, rng);
    const double rho = rng.uniform(0.0, 1.0);
    const BiasedFunction g = noise_apply(f, rho);
    for (double q : {1.0, 2.0, 4.0}) EXPECT_LE(biased_norm(g, q), biased_norm(f, q) * (1 + 1e-12)) << seed;
  }
}

TEST(Property, InfluenceIsWeightedSpectrum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const BiasedFunction f = random_boolean(7, Bias(rng.uniform(0.05, 0.95)), 0.3, rng);
    const Spectrum s = forward_transform(f);
    const auto c = coordinate_influences(f);
    for (int i = 0; i < 7; ++i) {
      double acc = 0.0;
      for (Mask m = 0; m < s.size(); ++m)
        if (m >> i & 1) acc += s[m] * s[m];
      EXPECT_NEAR(c[i], acc / f.bias().variance(), 1e-10) << seed;
    }
  }
}

TEST(Property, BoostsAreMonotoneForMonotoneFunctions) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const BiasedFunction f = random_monotone(7, Bias(rng.uniform(0.05, 0.6)), 3, rng);
    ASSERT_TRUE(is_monotone(f));
    const auto b = restriction_boosts(f);
    for (Mask j = 0; j < b.size(); ++j)
      for (int i = 0; i < 7; ++i) EXPECT_LE(b[j], b[j | (Mask{1} << i)] + 1e-14);
  }
}

TEST(Property, CriticalProbabilityHitsHalf) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const BiasedFunction f = random_monotone(6, Bias(0.5), 2, rng);
    const MeasureCurve c = measure_curve(f);
    if (c(0.0) >= 0.5 || c(1.0) < 0.5) continue;
    EXPECT_NEAR(c(critical_probability(c)), 0.5, 1e-9) << seed;
  }
}

TEST(Property, LinksPartitionTheFamily) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetFamily f = random_family(8, 3, 0.4, seed);
    Rng rng(seed);
    const Mask j = static_cast<Mask>(rng.below(256));
    std::size_t total = 0;
    for_each_submask(j, [&](Mask b) {
      const SetFamily l = link(f, j, b);
      total += l.size();
      EXPECT_NEAR(link_measure(f, j, b), l.size() == 0 ? 0.0 : l.measure(), 1e-14);
    });
    EXPECT_EQ(total, f.size()) << seed;
  }
}

TEST(Property, UpClosureIsMonotoneAndIdempotent) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetFamily f = random_family(7, 3, 0.15, seed);
    const BiasedFunction up = up_closure(f, 3.0 / 7.0);
    EXPECT_TRUE(is_monotone(up));
    const BiasedFunction ind = indicator(f, 3.0 / 7.0);
    for (Mask x = 0; x < up.size(); ++x) EXPECT_GE(up[x], ind[x]);
    // Closing the level-k part of the closure again changes nothing.
    std::vector<Mask> level;
    for (Mask x = 0; x < up.size(); ++x)
      if (popcount(x) == 3 && up[x] == 1.0) level.push_back(x);
    const BiasedFunction again = up_closure(SetFamily(7, 3, level), 3.0 / 7.0);
    for (Mask x = 0; x < up.size(); ++x) EXPECT_EQ(again[x], up[x]);
    EXPECT_TRUE(up_closure_measure_check(f).passed());
  }
}

TEST(Property, CompressionPreservesSizeAndReachesFixedPoint) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetFamily f = random_family(7, 3, 0.3, seed);
    Rng rng(seed);
    const int i = static_cast<int>(rng.below(7));
    const int j = (i + 1 + static_cast<int>(rng.below(6))) % 7;
    const SetFamily c = compress(f, i, j);
    EXPECT_EQ(c.size(), f.size());
    EXPECT_TRUE(is_compressed(c, i, j));
    EXPECT_EQ(compress(c, i, j), c);
  }
}

TEST(Property, CompressionKeepsCrossIntersection) {
  // A and B cross-intersecting means no cross 2-matching; compression keeps it that way.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetFamily a = random_family(7, 3, 0.08, seed);
    std::vector<Mask> b_edges;
    for_each_k_subset(7, 3, [&](Mask s) {
      if (std::all_of(a.edges().begin(), a.edges().end(), [&](Mask e) { return (e & s) != 0; })) b_edges.push_back(s);
    });
    const SetFamily b(7, 3, b_edges);
    if (a.empty() || b.empty()) continue;
    const Hypergraph m2 = Hypergraph::matching(2, 3);
    ASSERT_FALSE(contains_cross({a, b}, m2).has_value());
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (i != j) EXPECT_FALSE(contains_cross({compress(a, i, j), compress(b, i, j)}, m2).has_value());
  }
}

TEST(Property, KruskalKatonaOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int n = 4 + static_cast<int>(rng.below(5));
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const SetFamily f = random_family(n, k, rng.uniform(0.02, 0.6), seed);
    if (f.empty()) continue;
    EXPECT_TRUE(kruskal_katona_check(f).passed()) << "seed " << seed;
  }
}

TEST(Property, GlobalImpliesUncapturable) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const SetFamily f = random_family(9, 3, rng.uniform(0.1, 0.9), seed);
    if (f.empty()) continue;
    for (int a = 1; a <= 2; ++a) EXPECT_TRUE(global_uncapturable_check(f, a).passed()) << seed;
  }
}

TEST(Property, JuntaResidualIsGlobal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SetFamily f = SetFamily::generated(10, 3, {Mask{1} << (seed % 10)});
    const SetFamily noisy = random_family(10, 3, 0.2, seed);
    std::vector<Mask> edges = f.edges();
    edges.insert(edges.end(), noisy.edges().begin(), noisy.edges().end());
    const JuntaSplit split = junta_extract(SetFamily(10, 3, edges), 0.6);
    EXPECT_TRUE(split.report.passed()) << seed;
  }
}

TEST(Property, TransversalAtMostCrosscut) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const int r = 2 + static_cast<int>(rng.below(2));
    const Hypergraph g = random_graph(seed, 6, 1 + static_cast<int>(rng.below(4)), r);
    const CoverNumbers c = cover_numbers(g);
    EXPECT_LE(c.tau, c.cc) << seed;
    // The crosscut does not depend on how far the expansion goes.
    EXPECT_EQ(cover_numbers(g, r + 2).cc, c.cc) << seed;
    EXPECT_EQ(c.tau, oracle::transversal(g));
  }
}

TEST(Property, TuranIsMonotoneInN) {
  for (const Hypergraph& g : {Hypergraph::matching(2, 2), Hypergraph::path(2), Hypergraph::complete_graph(3)}) {
    int previous = 0;
    for (int n = 4; n <= 7; ++n) {
      const int v = turan_exact(g, 2, n).value;
      EXPECT_GE(v, previous) << "n=" << n;
      previous = v;
    }
  }
}
