#include "biasedcube/suites.hpp"

#include <algorithm>
#include <cmath>

#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"
#include "biasedcube/parallel.hpp"
#include "biasedcube/product_space.hpp"
#include "biasedcube/rv_poly.hpp"
#include "biasedcube/threshold.hpp"

namespace bcube {

namespace {

// Runs body over [0, count) (or just `only`) in parallel and absorbs in index order.
template <class Body, class Context>
Summary run_cases(std::size_t count, std::size_t only, Body&& body, Context&& context) {
  std::vector<std::size_t> indices;
  if (only != kAllEntries) {
    if (only < count) indices.push_back(only);
  } else {
    for (std::size_t i = 0; i < count; ++i) indices.push_back(i);
  }
  const auto reports = parallel_map<Report>(indices.size(), [&](std::size_t k) { return body(indices[k]); });
  Summary sum;
  for (std::size_t k = 0; k < indices.size(); ++k) sum.absorb(reports[k], context(indices[k]));
  return sum;
}

FiniteRV random_standard_rv(Rng& rng) {
  const int atoms = 2 + static_cast<int>(rng.below(2));
  std::vector<double> values, probs;
  double total = 0.0;
  for (int a = 0; a < atoms; ++a) {
    values.push_back(rng.uniform(-2.0, 2.0));
    probs.push_back(rng.uniform(0.05, 1.0));
    total += probs.back();
  }
  for (double& p : probs) p /= total;
  // Separate the atoms so the variable is never (nearly) constant.
  std::sort(values.begin(), values.end());
  for (int a = 1; a < atoms; ++a) values[a] = std::max(values[a], values[a - 1] + 0.25);
  return FiniteRV::standardized(values, probs);
}

}  // namespace

Summary replacement_suite(const Corpus& corpus, int max_n, const SuiteOptions& opts) {
  const double rhos[] = {0.2, 1.0 / (2.0 * std::sqrt(3.0))};
  return run_cases(
      corpus.entries.size(), opts.only,
      [&](std::size_t i) {
        const BiasedFunction& f = corpus.entries[i].f;
        Report rep;
        if (f.n() > max_n) return rep;
        for (double rho : rhos) {
          for (int t = 1; t <= f.n(); ++t) rep.append(replacement_step_check(f, rho, t, opts.tol));
          rep.append(replacement_telescope_check(f, rho, opts.tol));
          rep.append(verify_term_bound(f, rho, opts.tol));
        }
        return rep;
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}, {"label", corpus.entries[i].label}}; });
}

Summary q_moment_suite(std::uint64_t seed, int count, const std::vector<double>& qs, const SuiteOptions& opts) {
  const std::size_t total = qs.size() * static_cast<std::size_t>(count);
  return run_cases(
      total, opts.only,
      [&](std::size_t i) {
        const double q = qs[i / count];
        Rng rng(mix_seed(seed, i, 11));
        const int n = 1 + static_cast<int>(rng.below(5));
        std::vector<FiniteRV> rvs;
        for (int j = 0; j < n; ++j) rvs.push_back(random_standard_rv(rng));
        const MultilinearPoly f = MultilinearPoly::random(n, std::min(n, 3), rng);
        return verify_q_moment(f, rvs, q, std::pow(2.0 * q, -1.5), opts.tol);
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}, {"q", qs[i / count]}}; });
}

Summary efron_stein_suite(std::uint64_t seed, int count, int q, double rho, const SuiteOptions& opts) {
  return run_cases(
      static_cast<std::size_t>(count), opts.only,
      [&](std::size_t i) {
        Rng rng(mix_seed(seed, i, 13));
        const int factors = 1 + static_cast<int>(rng.below(4));
        const ProductSpace space = random_product_space(mix_seed(seed, i, 14), factors, 3);
        const SpaceFunction f = random_space_function(space, mix_seed(seed, i, 15));
        const ESComponents comp = efron_stein(f);
        Report rep = es_invariants(comp, f, 1e-10);
        rep.append(verify_es_hc(f, q, rho, opts.tol));
        rep.append(es_single_coverage_check(f, q, 1e-10));
        return rep;
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}}; });
}

Summary invariance_suite(std::uint64_t seed, int count, const SuiteOptions& opts) {
  return run_cases(
      static_cast<std::size_t>(count), opts.only,
      [&](std::size_t i) {
        Rng rng(mix_seed(seed, i, 17));
        const int n = 1 + static_cast<int>(rng.below(6));
        const int d = 1 + static_cast<int>(rng.below(2));
        const MultilinearPoly f = MultilinearPoly::random(n, std::min(d, n), rng);
        std::vector<FiniteRV> x, y;
        for (int j = 0; j < n; ++j) {
          x.push_back(rng.bernoulli(0.5) ? FiniteRV::rademacher() : FiniteRV::biased_character(rng.uniform(0.1, 0.5)));
          y.push_back(random_standard_rv(rng));
        }
        Report rep = invariance_gap(f, x, y, cubic_test(), std::nullopt, opts.tol);
        rep.append(invariance_gap(f, x, y, sine_test(1.0), std::nullopt, opts.tol));
        rep.data = nullptr;
        return rep;
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}}; });
}

std::vector<std::pair<double, double>> threshold_pairs(std::uint64_t seed, int pairs) {
  std::vector<std::pair<double, double>> out;
  Rng rng(mix_seed(seed, 19));
  for (int k = 0; k < pairs; ++k) {
    const double p = rng.uniform(0.02, 0.45);
    // Half the pairs stay below 1/2, where the quasirandom statement applies.
    const double q = k % 2 == 0 ? rng.uniform(p + 0.01, 0.49) : rng.uniform(p + 0.01, 0.95);
    out.emplace_back(p, q);
  }
  return out;
}

Summary threshold_suite(std::uint64_t seed, int pairs, int max_n, const SuiteOptions& opts) {
  std::vector<int> ns;
  for (int n = 1; n <= max_n; ++n) ns.push_back(n);
  const Corpus corpus = generate_monotone_corpus(seed, ns, {0.5});
  const auto pq = threshold_pairs(seed, pairs);
  ThresholdOptions topts;
  topts.tol = opts.tol;
  const std::size_t total = corpus.entries.size() * pq.size();
  return run_cases(
      total, opts.only,
      [&](std::size_t i) {
        const auto& [p, q] = pq[i % pq.size()];
        return threshold_checks(corpus.entries[i / pq.size()].f, p, q, topts);
      },
      [&](std::size_t i) {
        const auto& [p, q] = pq[i % pq.size()];
        return nlohmann::json{{"entry", i}, {"label", corpus.entries[i / pq.size()].label}, {"p", p}, {"q", q}};
      });
}

Summary conditional_suite(const Corpus& corpus, int max_n, const SuiteOptions& opts, const std::vector<int>& rs) {
  return run_cases(
      corpus.entries.size(), opts.only,
      [&](std::size_t i) {
        const BiasedFunction& f = corpus.entries[i].f;
        Report rep;
        if (f.n() > max_n || !f.is_ternary()) return rep;
        const bool boolean = f.is_boolean();
        const InfluenceTable inf = influence_table(f);
        for (int r : rs) {
          // A tight delta (the function's own globalness) plus a coarse grid.
          std::vector<double> deltas{0.01, 0.05, 0.2};
          if (boolean) deltas.push_back(globalness_delta(f, r));
          double top = 0.0;
          for (std::size_t s = 1; s < inf.gen_inf.size(); ++s)
            if (popcount(static_cast<Mask>(s)) <= r) top = std::max(top, inf.gen_inf[s]);
          deltas.push_back(top);
          for (double delta : deltas) {
            if (!(delta > 0.0)) continue;
            rep.append(verify_concentration(f, r, delta, opts.tol));
            if (boolean) rep.append(verify_equivalence_lemmas(f, r, delta, opts.tol));
          }
        }
        if (boolean && f.mean() > 0.0 && f.mean() < 1.0) rep.append(verify_bourgain_pp(f, opts.tol));
        return rep;
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}, {"label", corpus.entries[i].label}}; });
}

Summary russo_suite(std::uint64_t seed, double h, const SuiteOptions& opts) {
  const Corpus corpus = generate_monotone_corpus(seed, {2, 4, 6, 8, 10}, {0.1, 0.3, 0.5});
  return run_cases(
      corpus.entries.size(), opts.only,
      [&](std::size_t i) {
        const BiasedFunction& f = corpus.entries[i].f;
        return russo_check(f, f.p(), h, opts.tol);
      },
      [&](std::size_t i) { return nlohmann::json{{"entry", i}, {"label", corpus.entries[i].label}}; });
}

}  // namespace bcube
