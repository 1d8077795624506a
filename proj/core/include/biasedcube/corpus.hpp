#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "biasedcube/biased_function.hpp"

namespace bcube {

// mt19937_64 with its own real/int conversions: the engine sequence is standardized, the distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();                   // [0,1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t bound);  // [0,bound)
  bool bernoulli(double prob) { return uniform() < prob; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

struct CorpusEntry {
  BiasedFunction f;
  std::string tag;
  std::string label;
};

struct CorpusSpec {
  std::vector<int> ns{2, 4, 6, 8, 10, 12};
  std::vector<double> ps{0.02, 0.1, 0.3, 0.5};
  std::vector<double> densities{0.05, 0.2, 0.5};
  int random_boolean_per_density = 18;
  int random_low_degree = 16;
  int max_degree = 3;
  int juntas = 4;
  bool structured = true;
};

struct Corpus {
  std::uint64_t seed;
  std::vector<CorpusEntry> entries;
};

Corpus generate_corpus(std::uint64_t seed, const CorpusSpec& spec);
// Boolean monotone members only (dictators, ANDs, majorities, tribes, thresholds, monotone juntas).
Corpus generate_monotone_corpus(std::uint64_t seed, const std::vector<int>& ns, const std::vector<double>& ps);

BiasedFunction dictator(int n, Bias bias, int i);
BiasedFunction parity(int n, Bias bias, Mask s);
BiasedFunction and_function(int n, Bias bias, Mask s);
BiasedFunction or_function(int n, Bias bias, Mask s);
BiasedFunction majority(int n, Bias bias);
// 1 iff at least t coordinates are 1.
BiasedFunction threshold_function(int n, Bias bias, int t);
// AND over s disjoint blocks of width w of the OR inside each block (blocks are consecutive coordinates).
BiasedFunction anti_tribes(int n, Bias bias, int s, int w);
// OR over s blocks of the AND inside each block.
BiasedFunction tribes(int n, Bias bias, int s, int w);
// anti_tribes(s,w) times the AND of the t coordinates following the blocks.
BiasedFunction tribes_with_anchor(int n, Bias bias, int s, int w, int t);
BiasedFunction random_boolean(int n, Bias bias, double density, Rng& rng);
BiasedFunction random_low_degree(int n, Bias bias, int degree, Rng& rng);
BiasedFunction random_junta(int n, Bias bias, int size, Rng& rng);
BiasedFunction random_monotone(int n, Bias bias, int generators, Rng& rng);

}  // namespace bcube
