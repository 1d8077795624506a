#include "biasedcube/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "biasedcube/budget.hpp"
#include "biasedcube/corpus.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"

namespace bcube {

namespace {

void require_monotone_boolean(const BiasedFunction& f, const char* what) {
  if (!f.is_boolean()) throw std::invalid_argument(std::string(what) + " needs a Boolean function");
  if (!is_monotone(f)) throw std::invalid_argument(std::string(what) + " needs a monotone function");
}

// Max of μ_p(f_{J→1}) over |J| = m, for every m.
std::vector<std::pair<double, Mask>> best_boost_by_size(const BiasedFunction& f) {
  const std::vector<double> boosts = restriction_boosts(f);
  std::vector<std::pair<double, Mask>> best(static_cast<std::size_t>(f.n()) + 1, {-1.0, 0});
  for (std::size_t j = 0; j < boosts.size(); ++j) {
    auto& slot = best[popcount(static_cast<Mask>(j))];
    if (boosts[j] > slot.first) slot = {boosts[j], static_cast<Mask>(j)};
  }
  return best;
}

}  // namespace

MeasureCurve::MeasureCurve(int n, std::vector<double> level_counts, bool monotone_source)
    : n_(n), counts_(std::move(level_counts)), monotone_(monotone_source) {
  if (counts_.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("need n+1 level counts");
  for (int j = 0; j <= n; ++j)
    if (counts_[j] < 0.0 || counts_[j] > binomial(n, j)) throw std::invalid_argument("level count out of range");
}

double MeasureCurve::operator()(double p) const {
  double acc = 0.0;
  for (int j = 0; j <= n_; ++j)
    if (counts_[j] != 0.0) acc += counts_[j] * std::pow(p, j) * std::pow(1.0 - p, n_ - j);
  return acc;
}

bool MeasureCurve::nondecreasing_on_grid(int points, double tol) const {
  double prev = (*this)(0.0);
  for (int i = 1; i < points; ++i) {
    const double cur = (*this)(static_cast<double>(i) / (points - 1));
    if (cur < prev - tol) return false;
    prev = cur;
  }
  return true;
}

MeasureCurve measure_curve(const BiasedFunction& f) {
  if (f.n() > 24) throw std::invalid_argument("measure curves limited to n <= 24");
  std::vector<double> c(static_cast<std::size_t>(f.n()) + 1, 0.0);
  for (std::size_t x = 0; x < f.size(); ++x) c[popcount(static_cast<Mask>(x))] += f[static_cast<Mask>(x)];
  return MeasureCurve(f.n(), std::move(c), f.is_boolean() && is_monotone(f));
}

MeasureCurve measure_curve(const SetFamily& f) {
  std::vector<double> c(static_cast<std::size_t>(f.n()) + 1, 0.0);
  c[f.k()] = static_cast<double>(f.size());
  // A single-level family is up-closed only when empty, or when it is the whole top level.
  const bool monotone = f.empty() || f.k() == f.n();
  return MeasureCurve(f.n(), std::move(c), monotone);
}

double critical_probability(const MeasureCurve& curve, double t) {
  if (!curve.monotone_source()) throw std::invalid_argument("critical probability is only defined for monotone functions");
  if (curve(0.0) >= t) return 0.0;
  if (curve(1.0) < t) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (curve(mid) >= t ? hi : lo) = mid;
  }
  return hi;
}

Report threshold_checks(const BiasedFunction& f, double p, double q, const ThresholdOptions& opts) {
  require_monotone_boolean(f, "sharp-threshold checks");
  if (!(p > 0.0 && p < q && q < 1.0)) throw std::invalid_argument("need 0 < p < q < 1");
  const double rho = p * (1.0 - q) / (q * (1.0 - p));
  const BiasedFunction fp = f.with_bias(Bias(p));
  const double mu_p = fp.mean(), mu_q = mean_at(f, q);
  const double stab = noise_stability(fp, rho);

  Report rep;
  rep.inequality("sharp_threshold.noise_stability", true, mu_p * mu_p, mu_q * stab, opts.tol,
                 {{"p", p}, {"q", q}, {"rho", rho}, {"mu_p", mu_p}, {"mu_q", mu_q}, {"stab", stab}});

  const double alpha = q / p - 1.0;
  const double c = opts.quasirandom_c.value_or(2.0 / std::log1p(alpha));
  for (double eps : opts.eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
    // Globalness is tested exactly: δ here is far below any floating slack.
    {
      const double r = std::log(2.0 / eps) / std::log(1.0 / rho);
      const double delta = std::pow(10.0, -3.0 * r - 1.0) * eps * eps * eps;
      const int r_int = static_cast<int>(std::floor(r));
      const bool hyp = p <= 0.5 && mu_p < delta && is_global(fp, r_int, delta, 0.0);
      rep.inequality("noise_sensitivity.quantitative", hyp, stab, eps * mu_p, opts.tol,
                     {{"eps", eps}, {"rho", rho}, {"r", r}, {"delta", delta}});
    }
    {
      const double r = c * std::log(1.0 / eps);
      const double delta = std::pow(10.0, -3.0 * r - 1.0) * eps * eps * eps;
      const int r_int = static_cast<int>(std::floor(r));
      const bool in_range = eps < 0.5 && p < 0.5 && q < 0.5;
      const bool hyp = in_range && mu_p <= delta && is_global(fp, r_int, delta, 0.0);
      rep.inequality("sharp_threshold.quasirandom", hyp, mu_p, eps * mu_q, opts.tol,
                     {{"eps", eps}, {"alpha", alpha}, {"C", c}, {"r", r}, {"delta", delta}});
    }
  }
  return rep;
}

Report boost_search(const BiasedFunction& f, int max_size) {
  if (f.n() > 20) throw BudgetExceeded("boost search enumerates all 2^n restrictions; limited to n <= 20");
  if (max_size < 0) throw std::invalid_argument("max_size must be nonnegative");
  const double mu = f.mean();
  const double p = f.p();
  const double infl = total_influence(f);
  const double k = mu > 0.0 ? p * infl / mu : std::numeric_limits<double>::infinity();
  const auto best = best_boost_by_size(f);
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 0; m <= std::min(max_size, f.n()); ++m)
    rows.push_back({{"size", m},
                    {"J", mask_to_indices(best[m].second)},
                    {"mu_restricted", best[m].first},
                    {"gain", best[m].first - mu},
                    {"ratio", mu > 0.0 ? best[m].first / mu : 0.0}});
  Report rep;
  rep.data = {{"n", f.n()},   {"p", p}, {"mu", mu}, {"total_influence", infl}, {"K", k},
              {"exp_minus_K", std::exp(-k)}, {"profile", rows}};
  rep.note("explorer output: the predicted profiles involve unspecified absolute constants, nothing is asserted");
  return rep;
}

Report tribes_closed_forms(int s, int w, double p, double tol) {
  const int n = s * w;
  const BiasedFunction f = anti_tribes(n, Bias(p), s, w);
  const double block = 1.0 - std::pow(1.0 - p, w);
  const double mu = std::pow(block, s);
  const double infl = s * w * std::pow(1.0 - p, w - 1) * std::pow(block, s - 1);
  Report rep;
  const nlohmann::json ctx = {{"s", s}, {"w", w}, {"p", p}};
  rep.identity("tribes.measure", f.mean(), mu, tol, ctx);
  rep.identity("tribes.total_influence", total_influence(f), infl, tol, ctx);
  // Fixing t coordinates in distinct blocks is optimal: the profile is block^{s-t}.
  const auto best = best_boost_by_size(f);
  nlohmann::json loose = nlohmann::json::array();
  for (int t = 0; t <= s; ++t) {
    rep.identity("tribes.boost_profile", best[t].first, std::pow(block, s - t), tol, {{"t", t}, {"s", s}, {"w", w}, {"p", p}});
    const double tuned = std::pow(1.0 - 1.0 / s, s - t);
    loose.push_back({{"t", t}, {"tuned_bound", tuned}, {"doubling_bound", std::pow(2.0, static_cast<double>(t) / s) * mu}});
  }
  rep.data = {{"mu", mu}, {"total_influence", infl}, {"balance", s * std::pow(1.0 - p, w)}, {"profile_bounds", loose}};
  return rep;
}

Report anchored_tribes_check(int s, int w, int t, double p, double tol) {
  const int n = s * w + t;
  if (n > 20) throw BudgetExceeded("anchored tribes check limited to n <= 20");
  const BiasedFunction f = tribes_with_anchor(n, Bias(p), s, w, t);
  const double block = 1.0 - std::pow(1.0 - p, w);
  const double k = s * std::pow(1.0 - p, w);
  Report rep;
  const nlohmann::json ctx = {{"s", s}, {"w", w}, {"t", t}, {"p", p}};
  rep.identity("anchored_tribes.measure", f.mean(), std::pow(p, t) * std::pow(block, s), tol, ctx);
  const double infl = t * std::pow(p, t - 1) * std::pow(block, s) +
                      std::pow(p, t) * s * w * std::pow(1.0 - p, w - 1) * std::pow(block, s - 1);
  rep.identity("anchored_tribes.total_influence", total_influence(f), infl, tol, ctx);
  const auto best = best_boost_by_size(f);
  for (int u = 0; u <= s; ++u) {
    const double got = best[t + u].first;
    rep.inequality("anchored_tribes.profile", true, got, std::pow(block, s - u), tol, {{"u", u}});
    rep.inequality("anchored_tribes.no_early_boost", 2 * u <= s, got, std::exp(-k / 2.0), tol, {{"u", u}, {"K", k}});
  }
  return rep;
}

Report binomial_tail_check(int max_n, double tol) {
  Report rep;
  double worst = 1.0;
  int wn = 0, wk = 0;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      const double p = static_cast<double>(k) / n;
      double tail = k == n ? 1.0 : 0.0;
      if (k < n)
        for (int j = k; j <= n; ++j)
          tail += std::exp(std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) + j * std::log(p) +
                           (n - j) * std::log1p(-p));
      if (tail < worst) {
        worst = tail;
        wn = n;
        wk = k;
      }
    }
  rep.inequality("binomial_tail", true, 0.25, worst, tol, {{"n", wn}, {"k", wk}, {"max_n", max_n}});
  return rep;
}

Report curve_sanity(const MeasureCurve& curve) {
  Report rep;
  if (!curve.monotone_source()) {
    rep.note("curve does not come from a monotone function; sanity checks skipped");
    return rep;
  }
  rep.inequality("curve.nondecreasing", true, curve.nondecreasing_on_grid() ? 0.0 : 1.0, 0.0, 0.0);
  const bool nonconstant = curve(0.0) == 0.0 && curve(1.0) == 1.0;
  for (double eps : {0.01, 0.1, 0.25}) {
    const double lo = critical_probability(curve, eps), hi = critical_probability(curve, 1.0 - eps);
    rep.inequality("curve.threshold_order", nonconstant, lo, hi, 1e-12, {{"eps", eps}});
    rep.inequality("curve.threshold_interior", nonconstant, 0.0, std::min(lo, 1.0 - hi), 0.0, {{"eps", eps}});
  }
  return rep;
}

}  // namespace bcube
