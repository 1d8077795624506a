#pragma once

#include <cstdint>
#include <vector>

#include "biasedcube/corpus.hpp"
#include "biasedcube/hc_verify.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

// Seeded batch runners shared by the command line and the acceptance harness.
// Every violation witness carries {"entry": i, ...} so a single case can be rerun with `only`.

inline constexpr std::size_t kAllEntries = static_cast<std::size_t>(-1);

struct SuiteOptions {
  double tol = kDefaultTolerance;
  std::size_t only = kAllEntries;  // run just this case index
};

// Replacement step at every interpolation index and the telescoped chain, entries with n <= max_n.
Summary replacement_suite(const Corpus& corpus, int max_n, const SuiteOptions& opts = {});

// Random standardized variables, q in `qs`, rho = (2q)^{-1.5}; `count` seeds per q.
Summary q_moment_suite(std::uint64_t seed, int count, const std::vector<double>& qs, const SuiteOptions& opts = {});

// Random product spaces (<= 4 factors, supports <= 3): decomposition invariants and the q-norm bound.
Summary efron_stein_suite(std::uint64_t seed, int count, int q, double rho, const SuiteOptions& opts = {});

// Degree <= 2 polynomials in n <= 6 variables, two smooth test functions each.
Summary invariance_suite(std::uint64_t seed, int count, const SuiteOptions& opts = {});

// Monotone corpus n <= max_n against `pairs` seeded (p,q) pairs.
Summary threshold_suite(std::uint64_t seed, int pairs, int max_n, const SuiteOptions& opts = {});

// Globalness equivalences and concentration lemmas at each r in `rs` over a grid of delta per function.
Summary conditional_suite(const Corpus& corpus, int max_n, const SuiteOptions& opts = {},
                          const std::vector<int>& rs = {1, 2, 3});

// Finite-difference derivative of μ_p against total influence, monotone corpus.
Summary russo_suite(std::uint64_t seed, double h, const SuiteOptions& opts = {});

// (p,q) pairs used by threshold_suite.
std::vector<std::pair<double, double>> threshold_pairs(std::uint64_t seed, int pairs);

}  // namespace bcube
