#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "biasedcube/budget.hpp"
#include "biasedcube/families.hpp"
#include "biasedcube/influence.hpp"
#include "oracles.hpp"

using namespace bcube;

TEST(SetFamily, Construction) {
  EXPECT_EQ(SetFamily::complete(6, 3).size(), 20u);
  // Pairs meeting {0}: 4 of the 10.
  const SetFamily star = SetFamily::star(5, 2, 0b1);
  EXPECT_EQ(star.size(), 4u);
  EXPECT_NEAR(star.measure(), 0.4, 1e-15);
  EXPECT_THROW(SetFamily(4, 2, {0b111}), std::invalid_argument);
  EXPECT_THROW(SetFamily(4, 2, {0b10000 | 0b1}), std::invalid_argument);
  // Duplicates collapse.
  EXPECT_EQ(SetFamily(4, 2, {0b11, 0b11, 0b101}).size(), 2u);
}

TEST(SetFamily, GeneratedFamilyIsUpClosureAtLevelK) {
  const SetFamily f = SetFamily::generated(6, 3, {0b11, 0b110000});
  for (Mask a : f.edges()) EXPECT_TRUE(is_subset(0b11, a) || is_subset(0b110000, a));
  EXPECT_EQ(f.size(), 4u + 4u);
}

TEST(Link, MeasureAndReindexing) {
  const SetFamily f = SetFamily::star(6, 3, 0b1);
  const SetFamily l = link(f, 0b11, 0b01);
  EXPECT_EQ(l.n(), 4);
  EXPECT_EQ(l.k(), 2);
  EXPECT_EQ(l.size(), 6u);  // every pair from the 4 remaining coordinates
  EXPECT_NEAR(link_measure(f, 0b11, 0b01), l.measure(), 1e-15);
  EXPECT_THROW(link(f, 0b01, 0b10), std::invalid_argument);
}

TEST(Shadow, MatchesBruteForce) {
  const SetFamily f = random_family(7, 4, 0.3, 5);
  for (int ell = 0; ell <= 4; ++ell) EXPECT_EQ(shadow(f, ell).edges(), oracle::shadow(f.edges(), 7, ell)) << ell;
}

TEST(Compression, MovesTowardsSmallerIndex) {
  EXPECT_EQ(compress_set(0b100, 0, 2), 0b001u);
  EXPECT_EQ(compress_set(0b101, 0, 2), 0b101u);
  EXPECT_EQ(compress_set(0b010, 0, 2), 0b010u);
  const SetFamily f(4, 2, {0b1100, 0b0101});
  const SetFamily c = compress(f, 0, 2);
  // {2,3} -> {0,3}; {0,2} stays since it already contains 0.
  EXPECT_TRUE(c.contains(0b1001));
  EXPECT_TRUE(c.contains(0b0101));
  EXPECT_TRUE(is_compressed(c, 0, 2));
}

TEST(UpClosure, IndicatorAndClosure) {
  const SetFamily f(4, 2, {0b0011});
  const BiasedFunction ind = indicator(f, 0.5), up = up_closure(f, 0.5);
  EXPECT_NEAR(ind.mean(), 1.0 / 16, 1e-15);
  EXPECT_NEAR(up.mean(), 0.25, 1e-15);
  EXPECT_TRUE(is_monotone(up));
}

TEST(Pseudorandomness, StarIsCapturable) {
  const SetFamily star = SetFamily::star(8, 3, 0b1);
  PseudorandomnessParams params;
  params.a = 1;
  params.eps = 0.05;
  const Report rep = pseudorandomness_report(star, params);
  ASSERT_TRUE(rep.data.contains("uncapturable"));
  EXPECT_FALSE(rep.data["uncapturable"].get<bool>());
  const SetFamily full = SetFamily::complete(8, 3);
  EXPECT_TRUE(pseudorandomness_report(full, params).data["uncapturable"].get<bool>());
}

TEST(JuntaExtract, FindsTheStarCentre) {
  const SetFamily star = SetFamily::star(10, 3, 0b1);
  const JuntaSplit split = junta_extract(star, 0.5);
  EXPECT_EQ(split.j, 0b1u);
  EXPECT_TRUE(split.residual.empty());
  EXPECT_TRUE(split.report.passed());
}

TEST(Hypergraph, NamedGraphs) {
  EXPECT_EQ(Hypergraph::matching(3, 2).edge_count(), 3u);
  EXPECT_EQ(Hypergraph::matching(3, 2).vertex_count(), 6);
  EXPECT_EQ(Hypergraph::path(3).vertex_count(), 4);
  EXPECT_EQ(Hypergraph::cycle(4).max_degree(), 2);
  EXPECT_EQ(Hypergraph::complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(Hypergraph::single_edge(3).uniformity(), 3);
  EXPECT_THROW(Hypergraph(3, {0b1000}), std::invalid_argument);
}

TEST(Hypergraph, ExpansionAddsFreshVertices) {
  const Hypergraph g = expand(Hypergraph::complete_graph(3), 4);
  EXPECT_EQ(g.vertex_count(), 3 + 3 * 2);
  EXPECT_EQ(g.uniformity(), 4);
  for (int v = 3; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 1);
}

TEST(CoverNumbers, MatchBruteForce) {
  const std::vector<Hypergraph> graphs{Hypergraph::complete_graph(3), Hypergraph::complete_graph(4),
                                       Hypergraph::path(2),           Hypergraph::path(3),
                                       Hypergraph::path(4),           Hypergraph::cycle(4),
                                       Hypergraph::cycle(5),          Hypergraph::matching(2, 2),
                                       Hypergraph::matching(2, 3),    Hypergraph::single_edge(3),
                                       Hypergraph(4, {0b0111, 0b1100})};
  for (const Hypergraph& g : graphs) {
    const CoverNumbers c = cover_numbers(g);
    EXPECT_EQ(c.tau, oracle::transversal(g));
    EXPECT_EQ(c.cc, oracle::crosscut(g, g.max_edge_size() + 1));
    EXPECT_LE(c.tau, c.cc);
  }
}

TEST(CoverNumbers, Triangle) {
  const CoverNumbers c = cover_numbers(Hypergraph::complete_graph(3));
  EXPECT_EQ(c.tau, 2);
  EXPECT_EQ(c.cc, 2);
  EXPECT_THROW(cover_numbers(Hypergraph(3, {})), std::invalid_argument);
}

TEST(Matching, Numbers) {
  EXPECT_EQ(matching_number(Hypergraph::path(4)), 2);
  EXPECT_EQ(matching_number(Hypergraph::complete_graph(4)), 2);
  EXPECT_EQ(matching_number(Hypergraph::matching(3, 3)), 3);
}

TEST(Criticality, SmallPaths) {
  EXPECT_TRUE(is_critical(Hypergraph::path(3)));
  EXPECT_FALSE(is_critical(Hypergraph::path(4)));
  const Report rep = criticality_classify(Hypergraph::path(4));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.data["tau"], 2);
}

TEST(BoundedGraph, DegreeAndMatchingLimits) {
  const Hypergraph g = extremal_bounded_graph(3, 2);
  EXPECT_LE(g.max_degree(), 2);
  EXPECT_LE(matching_number(g), 1);
  // Degree < 3 and no two disjoint edges: the triangle.
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_THROW(extremal_bounded_graph(4, 3), BudgetExceeded);
}

TEST(ContainsCross, FindsOrRefutes) {
  const SetFamily star = SetFamily::star(6, 2, 0b1);
  EXPECT_FALSE(contains_cross({star}, Hypergraph::matching(2, 2)).has_value());
  const auto hit = contains_cross({SetFamily::complete(6, 2)}, Hypergraph::matching(2, 2));
  ASSERT_TRUE(hit.has_value());
  EXPECT_NE((*hit)[0], (*hit)[2]);
  EXPECT_THROW(contains_cross({star}, Hypergraph::single_edge(3)), std::invalid_argument);
}

TEST(Turan, TwoMatchingValues) {
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(turan_exact(Hypergraph::matching(2, 2), 2, 5).value, 4);
  EXPECT_EQ(turan_exact(Hypergraph::matching(2, 2), 2, 6).value, 5);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
}

TEST(Turan, AgreesWithBruteForce) {
  struct Case {
    Hypergraph g;
    int k, n;
  };
  const std::vector<Case> cases{{Hypergraph::matching(2, 2), 2, 4}, {Hypergraph::matching(2, 2), 2, 5},
                                {Hypergraph::matching(2, 2), 2, 6}, {Hypergraph::path(2), 2, 5},
                                {Hypergraph::path(2), 3, 6},        {Hypergraph::single_edge(2), 3, 5},
                                {Hypergraph::complete_graph(3), 2, 5}};
  for (const Case& c : cases) {
    const TuranResult r = turan_exact(c.g, c.k, c.n);
    EXPECT_EQ(r.value, oracle::turan_brute(c.g, c.k, c.n)) << "n=" << c.n << " k=" << c.k;
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.value);
    EXPECT_FALSE(oracle::contains_copy(r.witness.edges(), c.n, expand(c.g, c.k)));
    EXPECT_LE(r.incumbent, r.value);
  }
}

TEST(Turan, BudgetIsEnforced) {
  TuranBudget tiny;
  tiny.max_nodes = 1;
  EXPECT_THROW(turan_exact(Hypergraph::matching(2, 2), 2, 6, tiny), BudgetExceeded);
}

TEST(FjsFamily, AvoidsTheExpansion) {
  // The three-edge path is (1,1)-critical, so the construction is a star of cc - 1 points.
  const Hypergraph g = Hypergraph::path(3);
  const SetFamily f = fjs_family(g, 1, 1, 7, 3);
  EXPECT_EQ(f, SetFamily::star(7, 3, 0b1));
  EXPECT_FALSE(contains_cross({f}, expand(g, 3)).has_value());
}
