#include "biasedcube/influence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bcube {

namespace {

void check_influence_dimension(int n) {
  if (n > kMaxInfluenceDimension)
    throw std::invalid_argument("influence tables are limited to n <= 20, got " + std::to_string(n));
}

void require_boolean(const BiasedFunction& f, const char* what) {
  if (!f.is_boolean()) throw std::invalid_argument(std::string(what) + " requires a Boolean function");
}

// Power-basis coefficients of mu(p) = sum_j c_j p^j (1-p)^{n-j}.
std::vector<double> power_basis(const std::vector<double>& level_sums) {
  const int n = static_cast<int>(level_sums.size()) - 1;
  std::vector<double> a(level_sums.size(), 0.0);
  for (int j = 0; j <= n; ++j) {
    if (level_sums[j] == 0.0) continue;
    // p^j (1-p)^{n-j} = sum_m C(n-j, m) (-1)^m p^{j+m}
    for (int m = 0; m <= n - j; ++m)
      a[j + m] += level_sums[j] * binomial(n - j, m) * ((m % 2) ? -1.0 : 1.0);
  }
  return a;
}

std::vector<double> level_sums(const BiasedFunction& f) {
  std::vector<double> c(static_cast<std::size_t>(f.n()) + 1, 0.0);
  for (std::size_t x = 0; x < f.size(); ++x) c[popcount(static_cast<Mask>(x))] += f[static_cast<Mask>(x)];
  return c;
}

double max_over(const std::vector<double>& table, int lo, int hi) {
  double m = 0.0;
  for (std::size_t s = 0; s < table.size(); ++s) {
    const int k = popcount(static_cast<Mask>(s));
    if (k >= lo && k <= hi) m = std::max(m, table[s]);
  }
  return m;
}

}  // namespace

std::vector<double> superset_sums(std::vector<double> table, int n) {
  for (int i = 0; i < n; ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < table.size(); base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) table[j] += table[j + h];
  }
  return table;
}

std::vector<double> derivative_energies(const Spectrum& s) {
  std::vector<double> sq(s.coeffs().begin(), s.coeffs().end());
  for (double& c : sq) c *= c;
  return superset_sums(std::move(sq), s.n());
}

InfluenceTable influence_table(const Spectrum& s) {
  check_influence_dimension(s.n());
  std::vector<double> g = derivative_energies(s);
  const double inv_var = 1.0 / s.bias().variance();
  std::vector<double> scale(static_cast<std::size_t>(s.n()) + 1, 1.0);
  for (std::size_t k = 1; k < scale.size(); ++k) scale[k] = scale[k - 1] * inv_var;
  for (std::size_t t = 0; t < g.size(); ++t) g[t] *= scale[popcount(static_cast<Mask>(t))];
  double total = 0.0;
  for (int i = 0; i < s.n(); ++i) total += g[std::size_t{1} << i];
  return InfluenceTable{s.n(), s.bias(), std::move(g), total};
}

InfluenceTable influence_table(const BiasedFunction& f) { return influence_table(forward_transform(f)); }

std::vector<double> generalized_influences_definitional(const BiasedFunction& f) {
  const int n = f.n();
  const Mask all = full_mask(n);
  const double p = f.p();
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t si = 0; si < f.size(); ++si) {
    const Mask S = static_cast<Mask>(si);
    const Mask rest = all & ~S;
    const int k = popcount(S);
    double acc = 0.0;
    for_each_submask(rest, [&](Mask z) {
      double inner = 0.0;
      for_each_submask(S, [&](Mask x) {
        const double sign = ((k - popcount(x)) % 2) ? -1.0 : 1.0;
        inner += sign * f[z | x];
      });
      const int ones = popcount(z);
      acc += std::pow(p, ones) * std::pow(1.0 - p, n - k - ones) * inner * inner;
    });
    out[S] = acc;
  }
  return out;
}

std::vector<double> coordinate_influences(const BiasedFunction& f) {
  std::vector<double> out(static_cast<std::size_t>(f.n()));
  for (int i = 0; i < f.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const BiasedFunction hi = restrict(f, Restriction(bit, bit));
    const BiasedFunction lo = restrict(f, Restriction(bit, 0));
    std::vector<double> diff(hi.size());
    for (std::size_t x = 0; x < diff.size(); ++x) diff[x] = hi[static_cast<Mask>(x)] - lo[static_cast<Mask>(x)];
    out[static_cast<std::size_t>(i)] = absolute_moment(BiasedFunction(hi.n(), f.bias(), std::move(diff)), 2.0);
  }
  return out;
}

double total_influence(const BiasedFunction& f) {
  double t = 0.0;
  for (double v : coordinate_influences(f)) t += v;
  return t;
}

double beta_smallness(const BiasedFunction& f, bool nonempty_only) {
  const InfluenceTable table = influence_table(f);
  const double energy = table.gen_inf[0];
  if (!(energy > 0.0)) throw std::invalid_argument("beta-smallness is undefined for the zero function");
  double best = 0.0;
  for (std::size_t s = nonempty_only ? 1 : 0; s < table.gen_inf.size(); ++s) best = std::max(best, table.gen_inf[s]);
  return best / energy;
}

std::vector<double> restriction_boosts(const BiasedFunction& f) {
  std::vector<double> h(f.values().begin(), f.values().end());
  const double p = f.p();
  // Bits set in the index mean "restricted to 1"; clear bits are averaged out.
  for (int i = 0; i < f.n(); ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t base = 0; base < h.size(); base += 2 * b)
      for (std::size_t j = base; j < base + b; ++j) h[j] = (1.0 - p) * h[j] + p * h[j + b];
  }
  return h;
}

double globalness_delta(const BiasedFunction& f, int r) {
  const std::vector<double> boosts = restriction_boosts(f);
  const double mu = boosts[0];
  double worst = 0.0;
  for (std::size_t j = 0; j < boosts.size(); ++j)
    if (popcount(static_cast<Mask>(j)) <= r) worst = std::max(worst, boosts[j] - mu);
  return worst;
}

bool is_global(const BiasedFunction& f, int r, double delta, double tol) {
  const std::vector<double> boosts = restriction_boosts(f);
  for (std::size_t j = 0; j < boosts.size(); ++j)
    if (popcount(static_cast<Mask>(j)) <= r && !leq_with_slack(boosts[j], boosts[0] + delta, tol)) return false;
  return true;
}

bool is_monotone(const BiasedFunction& f) {
  for (int i = 0; i < f.n(); ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t x = 0; x < f.size(); ++x)
      if (!(x & b) && f[static_cast<Mask>(x)] > f[static_cast<Mask>(x | b)]) return false;
  }
  return true;
}

double mean_at(const BiasedFunction& f, double p) {
  const std::vector<double> c = level_sums(f);
  double acc = 0.0;
  for (int j = 0; j <= f.n(); ++j) acc += c[j] * std::pow(p, j) * std::pow(1.0 - p, f.n() - j);
  return acc;
}

Report verify_concentration(const BiasedFunction& f, int r, double delta, double tol) {
  if (!f.is_ternary()) throw std::invalid_argument("concentration lemmas need values in {-1,0,1}");
  if (r < 0) throw std::invalid_argument("degree r must be nonnegative");
  const bool boolean = f.is_boolean();
  const bool small_p = f.p() <= 0.5;
  const Spectrum s = forward_transform(f);
  const Spectrum low = truncate(s, r);
  const BiasedFunction g = inverse_transform(low);
  const double energy = s.squared_sum();
  const double low_energy = low.squared_sum();
  const double mu = s[0];
  const InfluenceTable low_inf = influence_table(low);
  const double rr = static_cast<double>(r);

  Report rep;
  rep.inequality("concentration.warm_up", boolean && f.p() == 0.5 && r > 0, low_energy,
                 std::pow(3.0, rr) * std::pow(std::max(mu, 0.0), 1.5), tol, {{"r", r}});

  // Holder step for the low and high parts of the spectrum.
  const double f15 = std::pow(energy, 0.75);
  rep.inequality("concentration.nt", true, low_energy, biased_norm(g, 4.0) * f15, tol, {{"part", "low"}, {"r", r}});
  const BiasedFunction high = inverse_transform(
      Spectrum(f.n(), f.bias(), [&] {
        std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
        for (std::size_t t = 0; t < c.size(); ++t) c[t] -= low[static_cast<Mask>(t)];
        return c;
      }()));
  rep.inequality("concentration.nt", true, energy - low_energy, biased_norm(high, 4.0) * f15, tol,
                 {{"part", "high"}, {"r", r}});

  const double infl_all = max_over(low_inf.gen_inf, 0, r);
  const double infl_nonempty = max_over(low_inf.gen_inf, 1, r);
  const double d13 = std::cbrt(std::max(delta, 0.0));
  rep.inequality("concentration.normsense0", r >= 1 && small_p && leq_with_slack(infl_all, delta, tol), low_energy,
                 std::pow(5.0, rr) * d13 * energy, tol, {{"r", r}, {"delta", delta}, {"max_influence", infl_all}});

  const bool global = boolean && is_global(f, r, delta, tol);
  rep.inequality("concentration.normsense", r >= 1 && small_p && global && mu < delta, low_energy,
                 std::pow(10.0, rr) * d13 * mu, tol, {{"r", r}, {"delta", delta}, {"mu", mu}});

  if (boolean) {
    const double total = influence_table(s).total;
    rep.inequality("concentration.normtruncate", small_p && leq_with_slack(infl_nonempty, delta, tol), low_energy,
                   mu * mu + std::pow(5.0, rr - 1.0) * d13 * f.bias().variance() * total, tol,
                   {{"r", r}, {"delta", delta}, {"max_influence", infl_nonempty}});
  }
  return rep;
}

Report verify_equivalence_lemmas(const BiasedFunction& f, int r, double delta, double tol) {
  require_boolean(f, "globalness equivalences");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  const double p = f.p();
  const bool small_p = p <= 0.5;
  const Spectrum s = forward_transform(f);
  const InfluenceTable inf = influence_table(s);
  const InfluenceTable low_inf = influence_table(truncate(s, r));
  const double mu = s[0];
  const bool global = is_global(f, r, delta, tol);
  const bool monotone = is_monotone(f);
  const double rr = static_cast<double>(r);
  const double pow8 = std::pow(8.0, rr) * delta;

  Report rep;
  // Truncation never increases a generalized influence, and kills those above degree r.
  double obs_gap = -1.0;
  for (std::size_t t = 0; t < inf.gen_inf.size(); ++t) {
    const double lhs = low_inf.gen_inf[t];
    const double rhs = popcount(static_cast<Mask>(t)) > r ? 0.0 : inf.gen_inf[t];
    obs_gap = std::max(obs_gap, lhs - rhs);
  }
  rep.inequality("equivalence.obs", true, obs_gap, 0.0, tol, {{"r", r}});

  const double max_small = max_over(inf.gen_inf, 0, r);
  rep.inequality("equivalence.gen_influence_control", small_p && global && leq_with_slack(mu, delta, tol), max_small,
                 pow8, tol, {{"r", r}, {"delta", delta}});

  if (!monotone) rep.note("monotone-only lemmas skipped: input is not monotone");
  const double max_nonempty = max_over(inf.gen_inf, 1, r);
  rep.inequality("equivalence.rem", small_p && monotone && global && r >= 1, max_nonempty, pow8, tol,
                 {{"r", r}, {"delta", delta}});

  if (r >= 1) {
    double boost_hi = 0.0, boost_lo = 0.0, drop = -1e300;
    for (int i = 0; i < f.n(); ++i) {
      const Mask bit = Mask{1} << i;
      const BiasedFunction hi = restrict(f, Restriction(bit, bit));
      const BiasedFunction lo = restrict(f, Restriction(bit, 0));
      boost_hi = std::max(boost_hi, globalness_delta(hi, r - 1));
      boost_lo = std::max(boost_lo, globalness_delta(lo, r - 1));
      drop = std::max(drop, (mu - p * delta / (1.0 - p)) - lo.mean());
    }
    const bool hyp = monotone && global;
    rep.inequality("equivalence.restrict_one", hyp, boost_hi, delta, tol, {{"r", r}, {"delta", delta}});
    rep.inequality("equivalence.restrict_zero_measure", hyp, f.n() > 0 ? drop : 0.0, 0.0, tol,
                   {{"r", r}, {"delta", delta}});
    rep.inequality("equivalence.restrict_zero", hyp, boost_lo, delta / (1.0 - p), tol, {{"r", r}, {"delta", delta}});
  }

  rep.inequality("equivalence.converse", small_p && r >= 1 && leq_with_slack(max_nonempty, delta, tol),
                 globalness_delta(f, r), std::pow(4.0, rr) * delta, tol,
                 {{"r", r}, {"delta", delta}, {"max_influence", max_nonempty}});
  return rep;
}

Report russo_check(const BiasedFunction& f, double p, double h, double tol) {
  require_boolean(f, "Margulis-Russo check");
  if (!is_monotone(f)) throw std::invalid_argument("Margulis-Russo check requires a monotone function");
  if (!(h > 0.0 && p - h > 0.0 && p + h < 1.0)) throw std::invalid_argument("finite-difference window leaves (0,1)");
  const double slope = (mean_at(f, p + h) - mean_at(f, p - h)) / (2.0 * h);
  const double infl = total_influence(f.with_bias(Bias(p)));

  // |mu'''| on [p-h, p+h], bounded through the power-basis coefficients.
  const std::vector<double> a = power_basis(level_sums(f));
  const double reach = p + h;
  double third = 0.0;
  for (std::size_t k = 3; k < a.size(); ++k)
    third += static_cast<double>(k * (k - 1) * (k - 2)) * std::abs(a[k]) * std::pow(reach, static_cast<double>(k - 3));
  const double c_f = third / 6.0;
  // Rounding in the difference quotient: a few ulps of mu divided by h.
  const double rounding = 64.0 * 2.220446049250313e-16 / h;

  Report rep;
  rep.inequality("russo", true, std::abs(slope - infl), c_f * h * h + rounding, tol,
                 {{"p", p}, {"h", h}, {"slope", slope}, {"influence", infl}, {"C_f", c_f}});
  return rep;
}

Report verify_bourgain_pp(const BiasedFunction& f, double tol) {
  require_boolean(f, "Bourgain++ check");
  const InfluenceTable inf = influence_table(f);
  const double mu = f.mean();
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("Bourgain++ needs 0 < mu_p(f) < 1");
  const double K = f.p() * inf.total / (mu * (1.0 - mu));
  const int lo = static_cast<int>(std::floor(2.0 * K));
  const int hi = static_cast<int>(std::ceil(2.0 * K));
  const double bound = std::pow(5.0, -8.0 * K);

  double best = 0.0, best_lo = 0.0, best_hi = 0.0;
  Mask arg = 0;
  for (std::size_t t = 1; t < inf.gen_inf.size(); ++t) {
    const int k = popcount(static_cast<Mask>(t));
    const double v = inf.gen_inf[t];
    if (k <= hi && v > best) {
      best = v;
      arg = static_cast<Mask>(t);
    }
    if (k == lo) best_lo = std::max(best_lo, v);
    if (k == hi) best_hi = std::max(best_hi, v);
  }

  Report rep;
  rep.inequality("bourgain_pp", f.p() <= 0.5, bound, best, tol,
                 {{"K", K}, {"argmax", mask_to_indices(arg)}, {"size_floor", lo}, {"size_ceil", hi},
                  {"max_at_floor", best_lo}, {"max_at_ceil", best_hi}});
  return rep;
}

}  // namespace bcube
