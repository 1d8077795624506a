#include "biasedcube/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bcube {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string fmt_label(const char* name, int n, double p, int k = -1) {
  std::ostringstream os;
  os << name << "/n=" << n << "/p=" << p;
  if (k >= 0) os << "/#" << k;
  return os.str();
}

Mask random_subset(int n, int size, Rng& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < size; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[i], idx[j]);
  }
  Mask m = 0;
  for (int i = 0; i < size; ++i) m |= Mask{1} << idx[i];
  return m;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix(seed)) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return v % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return splitmix(splitmix(splitmix(seed ^ 0x5bd1e995ULL) + a) + b) + c;
}

BiasedFunction dictator(int n, Bias bias, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("dictator coordinate out of range");
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return (x >> i) & 1; });
}

BiasedFunction parity(int n, Bias bias, Mask s) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return popcount(x & s) % 2; });
}

BiasedFunction and_function(int n, Bias bias, Mask s) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return is_subset(s, x) ? 1 : 0; });
}

BiasedFunction or_function(int n, Bias bias, Mask s) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return (x & s) ? 1 : 0; });
}

BiasedFunction threshold_function(int n, Bias bias, int t) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return popcount(x) >= t ? 1 : 0; });
}

BiasedFunction majority(int n, Bias bias) { return threshold_function(n, bias, n / 2 + 1); }

BiasedFunction anti_tribes(int n, Bias bias, int s, int w) {
  if (s < 0 || w < 1 || s * w > n) throw std::invalid_argument("tribes blocks do not fit: need s*w <= n");
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) {
    for (int j = 0; j < s; ++j)
      if (((x >> (j * w)) & full_mask(w)) == 0) return 0;
    return 1;
  });
}

BiasedFunction tribes(int n, Bias bias, int s, int w) {
  if (s < 0 || w < 1 || s * w > n) throw std::invalid_argument("tribes blocks do not fit: need s*w <= n");
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) {
    for (int j = 0; j < s; ++j)
      if (((x >> (j * w)) & full_mask(w)) == full_mask(w)) return 1;
    return 0;
  });
}

BiasedFunction tribes_with_anchor(int n, Bias bias, int s, int w, int t) {
  if (s * w + t > n) throw std::invalid_argument("anchored tribes do not fit: need s*w + t <= n");
  const BiasedFunction base = anti_tribes(n, bias, s, w);
  const Mask anchor = full_mask(t) << (s * w);
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return base[x] * (is_subset(anchor, x) ? 1.0 : 0.0); });
}

BiasedFunction random_boolean(int n, Bias bias, double density, Rng& rng) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask) { return rng.bernoulli(density) ? 1 : 0; });
}

BiasedFunction random_low_degree(int n, Bias bias, int degree, Rng& rng) {
  std::vector<double> c(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < c.size(); ++s)
    if (popcount(static_cast<Mask>(s)) <= degree) c[s] = rng.uniform(-1.0, 1.0);
  return inverse_transform(Spectrum(n, bias, std::move(c)));
}

BiasedFunction random_junta(int n, Bias bias, int size, Rng& rng) {
  size = std::min(size, n);
  const Mask j = random_subset(n, size, rng);
  std::vector<double> table(std::size_t{1} << size);
  for (double& v : table) v = rng.bernoulli(0.5) ? 1.0 : 0.0;
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) { return table[extract_bits(x, j)]; });
}

BiasedFunction random_monotone(int n, Bias bias, int generators, Rng& rng) {
  // Up-closure of a few random generators.
  std::vector<Mask> gens;
  for (int g = 0; g < generators; ++g) {
    const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n))));
    gens.push_back(random_subset(n, std::min(size, n), rng));
  }
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) {
    for (Mask g : gens)
      if (is_subset(g, x)) return 1;
    return 0;
  });
}

Corpus generate_corpus(std::uint64_t seed, const CorpusSpec& spec) {
  Corpus corpus{seed, {}};
  for (std::size_t ni = 0; ni < spec.ns.size(); ++ni) {
    const int n = spec.ns[ni];
    if (n < 1 || n > kMaxCubeDimension) throw std::invalid_argument("corpus dimension out of range");
    for (std::size_t pi = 0; pi < spec.ps.size(); ++pi) {
      const double p = spec.ps[pi];
      const Bias bias(p);
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n), pi));
      auto push = [&](BiasedFunction f, const char* tag, int k = -1) {
        corpus.entries.push_back({std::move(f), tag, fmt_label(tag, n, p, k)});
      };

      for (double density : spec.densities)
        for (int k = 0; k < spec.random_boolean_per_density; ++k)
          push(random_boolean(n, bias, density, rng), "random_boolean", k);
      for (int k = 0; k < spec.random_low_degree; ++k)
        push(random_low_degree(n, bias, 1 + k % spec.max_degree, rng), "random_low_degree", k);
      for (int k = 0; k < spec.juntas; ++k) push(random_junta(n, bias, 1 + k % 4, rng), "junta", k);
      if (!spec.structured) continue;

      push(dictator(n, bias, 0), "dictator");
      push(parity(n, bias, 1), "parity", 1);
      if (n >= 2) push(parity(n, bias, 3), "parity", 2);
      push(parity(n, bias, full_mask(n)), "parity", n);
      if (n >= 2) push(and_function(n, bias, 3), "and", 2);
      if (n >= 3) push(and_function(n, bias, 7), "and", 3);
      push(majority(n, bias), "majority");
      for (int t : {1, n / 2, n}) push(threshold_function(n, bias, t), "hamming_ball", t);
      for (auto [s, w] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{n / 2, 2}}) {
        if (s < 1 || s * w > n) continue;
        push(anti_tribes(n, bias, s, w), "anti_tribes", s * 10 + w);
        push(tribes(n, bias, s, w), "tribes", s * 10 + w);
      }
      if (n >= 5) push(tribes_with_anchor(n, bias, 2, 2, 1), "anchored_tribes");
    }
  }
  return corpus;
}

Corpus generate_monotone_corpus(std::uint64_t seed, const std::vector<int>& ns, const std::vector<double>& ps) {
  Corpus corpus{seed, {}};
  for (int n : ns)
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
      const double p = ps[pi];
      const Bias bias(p);
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n), pi, 7));
      auto push = [&](BiasedFunction f, const char* tag, int k = -1) {
        corpus.entries.push_back({std::move(f), tag, fmt_label(tag, n, p, k)});
      };
      push(dictator(n, bias, 0), "dictator");
      if (n >= 2) push(and_function(n, bias, 3), "and", 2);
      if (n >= 2) push(or_function(n, bias, 3), "or", 2);
      push(majority(n, bias), "majority");
      for (int t : {1, (n + 1) / 2, n}) push(threshold_function(n, bias, t), "hamming_ball", t);
      for (auto [s, w] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        if (s * w > n) continue;
        push(anti_tribes(n, bias, s, w), "anti_tribes", s * 10 + w);
        push(tribes(n, bias, s, w), "tribes", s * 10 + w);
      }
      for (int k = 0; k < 6; ++k) push(random_monotone(n, bias, 2 + k, rng), "random_monotone", k);
    }
  return corpus;
}

}  // namespace bcube
