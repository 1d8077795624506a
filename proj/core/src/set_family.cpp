#include "biasedcube/set_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "biasedcube/budget.hpp"
#include "biasedcube/corpus.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

namespace {

constexpr double kMaxSubsetEnumeration = 2e6;

double count_subsets_up_to(int n, int a) {
  double total = 0.0;
  for (int j = 0; j <= std::min(a, n); ++j) total += binomial(n, j);
  return total;
}

template <class Visit>
void for_each_small_subset(int n, int a, Visit&& visit) {
  if (count_subsets_up_to(n, a) > kMaxSubsetEnumeration)
    throw BudgetExceeded("enumerating all sets of size <= " + std::to_string(a) + " in [" + std::to_string(n) +
                         "] exceeds the budget");
  for (int j = 0; j <= std::min(a, n); ++j) for_each_k_subset(n, j, visit);
}

std::vector<char> up_closure_table(const SetFamily& f) {
  const int n = f.n();
  std::vector<char> up(std::size_t{1} << n, 0);
  for (Mask e : f.edges()) up[e] = 1;
  for (int i = 0; i < n; ++i)
    for (std::size_t x = 0; x < up.size(); ++x)
      if (!(x >> i & 1) && up[x]) up[x | (std::size_t{1} << i)] = 1;
  return up;
}

double level_measure(const std::vector<char>& table, int n, double p) {
  std::vector<double> counts(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table[x]) counts[popcount(static_cast<Mask>(x))] += 1.0;
  double mu = 0.0;
  for (int j = 0; j <= n; ++j)
    if (counts[j] > 0.0) mu += counts[j] * std::pow(p, j) * std::pow(1.0 - p, n - j);
  return mu;
}

nlohmann::json indices_json(Mask m) { return mask_to_indices(m); }

}  // namespace

SetFamily::SetFamily(int n, int k, std::vector<Mask> edges) : n_(n), k_(k), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of range [0,24]");
  if (k < 0 || k > n) throw std::invalid_argument("uniformity k must lie in [0,n]");
  for (Mask e : edges_) {
    if (!is_subset(e, full_mask(n))) throw std::invalid_argument("edge does not fit in the ground set");
    if (popcount(e) != k)
      throw std::invalid_argument("edge of size " + std::to_string(popcount(e)) + " in a " + std::to_string(k) +
                                  "-uniform family");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

SetFamily SetFamily::complete(int n, int k) {
  std::vector<Mask> e;
  for_each_k_subset(n, k, [&](Mask a) { e.push_back(a); });
  return SetFamily(n, k, std::move(e));
}

SetFamily SetFamily::star(int n, int k, Mask j) {
  std::vector<Mask> e;
  for_each_k_subset(n, k, [&](Mask a) {
    if (a & j) e.push_back(a);
  });
  return SetFamily(n, k, std::move(e));
}

SetFamily SetFamily::generated(int n, int k, const std::vector<Mask>& generators) {
  std::vector<Mask> e;
  for_each_k_subset(n, k, [&](Mask a) {
    for (Mask t : generators)
      if (is_subset(t, a)) {
        e.push_back(a);
        break;
      }
  });
  return SetFamily(n, k, std::move(e));
}

bool SetFamily::contains(Mask a) const { return std::binary_search(edges_.begin(), edges_.end(), a); }

double SetFamily::measure() const {
  const double total = binomial(n_, k_);
  return total > 0.0 ? static_cast<double>(edges_.size()) / total : 0.0;
}

SetFamily link(const SetFamily& f, Mask j, Mask b) {
  if (!is_subset(b, j)) throw std::invalid_argument("link needs B contained in J");
  if (!is_subset(j, full_mask(f.n()))) throw std::invalid_argument("link set J does not fit in the ground set");
  const Mask rest = full_mask(f.n()) & ~j;
  const int k = f.k() - popcount(b);
  if (k < 0) return SetFamily(f.n() - popcount(j), 0);
  std::vector<Mask> e;
  for (Mask a : f.edges())
    if ((a & j) == b) e.push_back(extract_bits(a, rest));
  return SetFamily(f.n() - popcount(j), std::min(k, f.n() - popcount(j)), std::move(e));
}

double link_measure(const SetFamily& f, Mask j, Mask b) {
  if (!is_subset(b, j)) throw std::invalid_argument("link needs B contained in J");
  const double total = binomial(f.n() - popcount(j), f.k() - popcount(b));
  if (total == 0.0) return 0.0;
  std::size_t count = 0;
  for (Mask a : f.edges())
    if ((a & j) == b) ++count;
  return static_cast<double>(count) / total;
}

SetFamily shadow(const SetFamily& f, int ell) {
  if (ell < 0 || ell > f.k()) throw std::invalid_argument("shadow level must lie in [0,k]");
  std::vector<Mask> e;
  for (Mask a : f.edges())
    for_each_submask(a, [&](Mask s) {
      if (popcount(s) == ell) e.push_back(s);
    });
  return SetFamily(f.n(), ell, std::move(e));
}

SetFamily fat_shadow(const SetFamily& f, int r, double c) {
  if (r < 0 || r > f.k()) throw std::invalid_argument("fat shadow level must lie in [0,k]");
  std::vector<Mask> e;
  for_each_k_subset(f.n(), r, [&](Mask a) {
    if (link_measure(f, a, a) >= c) e.push_back(a);
  });
  return SetFamily(f.n(), r, std::move(e));
}

Mask compress_set(Mask a, int i, int j) {
  const Mask bi = Mask{1} << i, bj = Mask{1} << j;
  if ((a & bj) && !(a & bi)) return (a & ~bj) | bi;
  return a;
}

SetFamily compress(const SetFamily& f, int i, int j) {
  if (i == j) throw std::invalid_argument("compression needs i != j");
  if (i < 0 || j < 0 || i >= f.n() || j >= f.n()) throw std::invalid_argument("compression index out of range");
  std::vector<Mask> e;
  for (Mask a : f.edges()) {
    const Mask c = compress_set(a, i, j);
    e.push_back(f.contains(c) ? a : c);
  }
  return SetFamily(f.n(), f.k(), std::move(e));
}

bool is_compressed(const SetFamily& f, int i, int j) { return compress(f, i, j) == f; }

BiasedFunction indicator(const SetFamily& f, double p) {
  return BiasedFunction::from_predicate(f.n(), Bias(p), [&](Mask x) { return f.contains(x) ? 1 : 0; });
}

BiasedFunction up_closure(const SetFamily& f, double p) {
  const std::vector<char> up = up_closure_table(f);
  return BiasedFunction::from_predicate(f.n(), Bias(p), [&](Mask x) { return up[x] ? 1 : 0; });
}

Report kruskal_katona_check(const SetFamily& f, double tol) {
  Report rep;
  const double mu = f.measure();
  for (int ell = 1; ell <= f.k(); ++ell)
    rep.inequality("kruskal_katona", true, std::pow(mu, static_cast<double>(ell) / f.k()), shadow(f, ell).measure(),
                   tol, {{"ell", ell}, {"k", f.k()}, {"n", f.n()}, {"size", f.size()}});
  return rep;
}

Report up_closure_measure_check(const SetFamily& f, double tol) {
  Report rep;
  if (f.n() == 0 || f.k() == 0) {
    rep.note("up-closure comparison needs 1 <= k");
    return rep;
  }
  const double p = static_cast<double>(f.k()) / f.n();
  const double up = level_measure(up_closure_table(f), f.n(), p);
  rep.inequality("up_closure_measure", true, f.measure() / 4.0, up, tol, {{"p", p}, {"n", f.n()}, {"k", f.k()}});
  return rep;
}

Report pseudorandomness_report(const SetFamily& f, const PseudorandomnessParams& params) {
  const int n = f.n();
  Report rep;

  double min_uncap = std::numeric_limits<double>::infinity(), max_global = 0.0;
  Mask uncap_witness = 0, global_witness = 0;
  std::size_t boundary_uncap = 0, boundary_global = 0;
  for_each_small_subset(n, params.a, [&](Mask j) {
    const double u = link_measure(f, j, 0);
    if (u < min_uncap) {
      min_uncap = u;
      uncap_witness = j;
    }
    if (u == params.eps) ++boundary_uncap;
    const double g = link_measure(f, j, j);
    if (g > max_global) {
      max_global = g;
      global_witness = j;
    }
    if (g == params.eps) ++boundary_global;
  });
  const bool uncapturable = min_uncap >= params.eps;
  const bool global = max_global <= params.eps;

  const double p = params.p > 0.0 ? params.p : (n > 0 ? static_cast<double>(f.k()) / n : 0.5);
  nlohmann::json restriction = nullptr;
  if (p > 0.0 && p < 1.0 && n > 0) {
    const BiasedFunction ind = indicator(f, p);
    const double mu_p = ind.mean();
    double worst = -std::numeric_limits<double>::infinity();
    Mask worst_j = 0;
    for_each_small_subset(n, params.r, [&](Mask j) {
      double m = 0.0;
      const Mask rest = full_mask(n) & ~j;
      const int free = n - popcount(j);
      for (Mask y = 0; y < (Mask{1} << free); ++y) {
        const Mask x = deposit_bits(y, rest) | j;
        if (ind[x] != 0.0) m += std::pow(p, popcount(y)) * std::pow(1.0 - p, free - popcount(y));
      }
      if (m - mu_p > worst) {
        worst = m - mu_p;
        worst_j = j;
      }
    });
    restriction = {{"p", p},           {"mu_p", mu_p},     {"max_boost", worst},
                   {"witness", indices_json(worst_j)},     {"r", params.r},
                   {"delta", params.delta}, {"global", worst <= params.delta}};
  }

  rep.data = {{"n", n},
              {"k", f.k()},
              {"size", f.size()},
              {"measure", f.measure()},
              {"a", params.a},
              {"eps", params.eps},
              {"uncapturable", uncapturable},
              {"min_unrestricted_measure", min_uncap},
              {"capturing_set", indices_json(uncap_witness)},
              {"global", global},
              {"max_link_measure", max_global},
              {"local_set", indices_json(global_witness)},
              {"restriction_test", restriction}};
  if (boundary_uncap > 0 || boundary_global > 0)
    rep.note("some restriction measure equals eps exactly; uncapturable uses >= eps and global uses <= eps");
  return rep;
}

Report global_uncapturable_check(const SetFamily& f, int a, double tol) {
  if (a < 1) throw std::invalid_argument("uncapturability order a must be >= 1");
  Report rep;
  if (f.k() == 0 || f.n() == 0) return rep;
  const double mu = f.measure();
  const double eps = mu * f.n() / (2.0 * a * f.k());
  double max_link = 0.0;
  for (int i = 0; i < f.n(); ++i) max_link = std::max(max_link, link_measure(f, Mask{1} << i, Mask{1} << i));
  double min_rest = std::numeric_limits<double>::infinity();
  Mask witness = 0;
  for_each_small_subset(f.n(), a, [&](Mask j) {
    const double u = link_measure(f, j, 0);
    if (u < min_rest) {
      min_rest = u;
      witness = j;
    }
  });
  rep.inequality("global_implies_uncapturable", max_link <= eps, mu / 2.0, min_rest, tol,
                 {{"a", a}, {"eps", eps}, {"max_link", max_link}, {"witness", indices_json(witness)}});
  return rep;
}

JuntaSplit junta_extract(const SetFamily& f, double beta, double tol) {
  const int n = f.n(), k = f.k();
  Mask j = 0;
  for (int i = 0; i < n; ++i)
    if (link_measure(f, Mask{1} << i, Mask{1} << i) > beta) j |= Mask{1} << i;
  JuntaSplit out{j, link(f, j, 0), {}};
  const int m = popcount(j);
  const bool small_j = k > 0 && 2.0 * k * m < n;

  double max_link = 0.0;
  int arg = -1;
  for (int i = 0; i < out.residual.n(); ++i) {
    const double g = link_measure(out.residual, Mask{1} << i, Mask{1} << i);
    if (g > max_link) {
      max_link = g;
      arg = i;
    }
  }
  out.report.inequality("junta_residual_global", small_j, max_link, 2.0 * beta, tol,
                        {{"J", indices_json(j)}, {"coordinate", arg}, {"n", n}, {"k", k}});

  // The residual's uncapturability, with the residual's own ground set size.
  const int n_res = out.residual.n();
  const double mu_g = out.residual.measure();
  if (small_j && beta > 0.0 && mu_g > 0.0 && k > 0) {
    const int a = static_cast<int>(std::floor(mu_g * n_res / (4.0 * k * beta)));
    if (a >= 1 && count_subsets_up_to(n_res, a) <= kMaxSubsetEnumeration) {
      double min_rest = std::numeric_limits<double>::infinity();
      for_each_small_subset(n_res, a, [&](Mask s) { min_rest = std::min(min_rest, link_measure(out.residual, s, 0)); });
      out.report.inequality("junta_residual_uncapturable", max_link <= 2.0 * beta, mu_g / 2.0, min_rest, tol,
                            {{"a", a}});
    }
  }
  out.report.data = {{"J", indices_json(j)}, {"residual_size", out.residual.size()}, {"residual_measure", mu_g},
                     {"max_residual_link", max_link}, {"hypothesis_small_J", small_j}};
  return out;
}

SetFamily random_family(int n, int k, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Mask> e;
  for_each_k_subset(n, k, [&](Mask a) {
    if (rng.bernoulli(density)) e.push_back(a);
  });
  return SetFamily(n, k, std::move(e));
}

}  // namespace bcube
