#include "biasedcube/rv_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "biasedcube/corpus.hpp"
#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"

namespace bcube {

namespace {

void check_arity(const MultilinearPoly& f, std::size_t count) {
  if (static_cast<std::size_t>(f.n()) != count) throw std::invalid_argument("one random variable per coordinate required");
}

void check_standard(const std::vector<FiniteRV>& rvs, const char* role) {
  for (std::size_t i = 0; i < rvs.size(); ++i)
    if (!rvs[i].is_standard())
      throw std::invalid_argument(std::string(role) + " variable " + std::to_string(i) + " is not mean 0, variance 1 (mean " +
                                  std::to_string(rvs[i].mean()) + ", variance " + std::to_string(rvs[i].variance()) + ")");
}

// Fold the coefficient table one coordinate at a time: c'[S] = c[S] + z_i c[S + i].
double fold(std::vector<double>& scratch, std::span<const double> coeffs, std::span<const double> z) {
  scratch.assign(coeffs.begin(), coeffs.end());
  std::size_t len = scratch.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < len; base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) scratch[j] += z[i] * scratch[j + h];
  }
  return scratch[0];
}

template <class Visit>
void for_each_point(const std::vector<FiniteRV>& rvs, Visit&& visit) {
  std::size_t total = 1;
  for (const auto& r : rvs) {
    total *= r.size();
    if (total > kMaxSupportProduct) throw std::invalid_argument("product of supports exceeds 2e6 points");
  }
  const std::size_t n = rvs.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> z(n);
  for (std::size_t point = 0; point < total; ++point) {
    double w = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = rvs[i].value(idx[i]);
      w *= rvs[i].prob(idx[i]);
    }
    visit(std::span<const double>(z), w);
    for (std::size_t i = 0; i < n; ++i) {
      if (++idx[i] < rvs[i].size()) break;
      idx[i] = 0;
    }
  }
}

}  // namespace

FiniteRV::FiniteRV(std::vector<double> values, std::vector<double> probs)
    : values_(std::move(values)), probs_(std::move(probs)) {
  if (values_.empty() || values_.size() != probs_.size())
    throw std::invalid_argument("random variable needs matching, nonempty value and probability lists");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0)) throw std::invalid_argument("atom probabilities must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("atom probabilities must sum to 1");
}

FiniteRV FiniteRV::biased_character(double p) {
  const Bias b(p);
  return FiniteRV({b.chi0(), b.chi1()}, {1.0 - p, p});
}

FiniteRV FiniteRV::rademacher() { return FiniteRV({-1.0, 1.0}, {0.5, 0.5}); }

FiniteRV FiniteRV::standardized(std::vector<double> values, std::vector<double> probs) {
  const FiniteRV raw(values, probs);
  const double mu = raw.mean(), sd = std::sqrt(raw.variance());
  if (!(sd > 0.0)) throw std::invalid_argument("cannot standardize a constant random variable");
  for (double& v : values) v = (v - mu) / sd;
  return FiniteRV(std::move(values), std::move(probs));
}

double FiniteRV::moment(int k) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += probs_[i] * std::pow(values_[i], k);
  return acc;
}

double FiniteRV::abs_moment(double q) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += probs_[i] * std::pow(std::abs(values_[i]), q);
  return acc;
}

double FiniteRV::variance() const {
  const double m = mean();
  return moment(2) - m * m;
}

bool FiniteRV::is_standard(double tol) const { return std::abs(mean()) <= tol && std::abs(moment(2) - 1.0) <= tol; }

double FiniteRV::moment_sigma(double q) const {
  if (!(q > 2.0)) throw std::invalid_argument("moment sigma needs q > 2");
  return std::pow(abs_moment(q), 1.0 / (2.0 - q));
}

MultilinearPoly::MultilinearPoly(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 0 || n > 20) throw std::invalid_argument("polynomial arity out of range [0,20]");
  if (coeffs_.size() != (std::size_t{1} << n)) throw std::invalid_argument("coefficient table must have 2^n entries");
}

MultilinearPoly MultilinearPoly::random(int n, int degree, Rng& rng) {
  std::vector<double> c(std::size_t{1} << n, 0.0);
  for (std::size_t s = 0; s < c.size(); ++s)
    if (popcount(static_cast<Mask>(s)) <= degree) c[s] = rng.uniform(-1.0, 1.0);
  return MultilinearPoly(n, std::move(c));
}

int MultilinearPoly::degree(double tol) const {
  int d = 0;
  for (std::size_t s = 0; s < coeffs_.size(); ++s)
    if (std::abs(coeffs_[s]) > tol) d = std::max(d, popcount(static_cast<Mask>(s)));
  return d;
}

std::vector<double> MultilinearPoly::w_table() const {
  std::vector<double> sq(coeffs_);
  for (double& c : sq) c *= c;
  return superset_sums(std::move(sq), n_);
}

MultilinearPoly MultilinearPoly::derivative(Mask s) const {
  std::vector<double> c(coeffs_.size(), 0.0);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (is_subset(s, static_cast<Mask>(t))) c[t & ~static_cast<std::size_t>(s)] = coeffs_[t];
  return MultilinearPoly(n_, std::move(c));
}

MultilinearPoly MultilinearPoly::noise(double rho) const {
  std::vector<double> c(coeffs_);
  for (std::size_t t = 0; t < c.size(); ++t) c[t] *= std::pow(rho, popcount(static_cast<Mask>(t)));
  return MultilinearPoly(n_, std::move(c));
}

MultilinearPoly MultilinearPoly::permuted(const std::vector<int>& perm) const {
  std::vector<double> c(coeffs_.size());
  for (std::size_t t = 0; t < c.size(); ++t) {
    Mask u = 0;
    for (int i = 0; i < n_; ++i)
      if (t >> i & 1) u |= Mask{1} << perm[i];
    c[u] = coeffs_[t];
  }
  return MultilinearPoly(n_, std::move(c));
}

double MultilinearPoly::evaluate(std::span<const double> z) const {
  if (z.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("evaluation point has wrong arity");
  std::vector<double> scratch;
  return fold(scratch, coeffs_, z);
}

SmoothTest cubic_test() {
  return {[](double x) { return x * x * x; }, 6.0, "phi(x) = x^3 has phi''' = 6 everywhere"};
}

SmoothTest sine_test(double a) {
  return {[a](double x) { return std::sin(a * x); }, std::abs(a * a * a),
          "phi(x) = sin(a x) has |phi'''| = |a^3 cos(a x)| <= |a|^3"};
}

double expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, const std::function<double(double)>& g) {
  check_arity(f, rvs.size());
  std::vector<double> scratch;
  double acc = 0.0;
  for_each_point(rvs, [&](std::span<const double> z, double w) { acc += w * g(fold(scratch, f.coeffs(), z)); });
  return acc;
}

double abs_moment(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("moment order must be >= 1");
  return expectation(f, rvs, [q](double v) { return std::pow(std::abs(v), q); });
}

double exact_expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, const SmoothTest& test) {
  return expectation(f, rvs, test.phi);
}

double moment_by_expansion(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, int q) {
  check_arity(f, rvs.size());
  if (q < 1 || q > 4) throw std::invalid_argument("expansion cross-check supports integer q in [1,4]");
  std::vector<std::pair<Mask, double>> terms;
  for (std::size_t s = 0; s < f.coeffs().size(); ++s)
    if (f[static_cast<Mask>(s)] != 0.0) terms.emplace_back(static_cast<Mask>(s), f[static_cast<Mask>(s)]);
  const int n = f.n();
  std::vector<std::vector<double>> mom(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(q) + 1));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= q; ++k) mom[i][k] = rvs[i].moment(k);

  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  double total = 0.0;
  std::function<void(int, double)> rec = [&](int depth, double coef) {
    if (depth == q) {
      double e = coef;
      for (int i = 0; i < n && e != 0.0; ++i) e *= mom[i][counts[i]];
      total += e;
      return;
    }
    for (const auto& [s, a] : terms) {
      for (int i : mask_to_indices(s)) ++counts[i];
      rec(depth + 1, coef * a);
      for (int i : mask_to_indices(s)) --counts[i];
    }
  };
  rec(0, 1.0);
  return total;
}

std::vector<double> moment_sigmas(const std::vector<FiniteRV>& rvs, double q) {
  std::vector<double> out;
  for (const auto& r : rvs) out.push_back(r.moment_sigma(q));
  return out;
}

double rv_influence(const MultilinearPoly& f, const std::vector<double>& sigmas, Mask s) {
  if (sigmas.size() != static_cast<std::size_t>(f.n())) throw std::invalid_argument("one sigma per coordinate required");
  double w = 0.0;
  for (std::size_t t = 0; t < f.coeffs().size(); ++t)
    if (is_subset(s, static_cast<Mask>(t))) w += f[static_cast<Mask>(t)] * f[static_cast<Mask>(t)];
  for (int i : mask_to_indices(s)) w /= sigmas[i] * sigmas[i];
  return w;
}

double rv_influence_by_expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs,
                                   const std::vector<double>& sigmas, Mask s) {
  double e = expectation(f.derivative(s), rvs, [](double v) { return v * v; });
  for (int i : mask_to_indices(s)) e /= sigmas[i] * sigmas[i];
  return e;
}

Report verify_q_moment(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, double q, double rho, double tol) {
  check_arity(f, rvs.size());
  if (!(q > 2.0)) throw std::invalid_argument("general-q bounds need q > 2");
  if (!(rho > 0.0 && rho < 1.0 / (2.0 * std::pow(q, 1.5))))
    throw std::invalid_argument("general-q bounds need 0 < rho < 1/(2 q^1.5)");
  check_standard(rvs, "Z");

  const std::vector<double> sig = moment_sigmas(rvs, q);
  const double common = *std::min_element(sig.begin(), sig.end());
  const std::vector<double> w = f.w_table();
  const double lhs = abs_moment(f.noise(rho), rvs, q);
  const bool small_rho = rho <= std::pow(2.0 * q, -1.5) * (1.0 + 1e-15);

  double uniform_sum = 0.0, split_sum = 0.0, beta = 0.0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    const Mask S = static_cast<Mask>(s);
    const int k = popcount(S);
    double sigma_s = 1.0;
    for (int i : mask_to_indices(S)) sigma_s *= sig[i];
    const double dq = std::pow(w[s], q / 2.0);
    uniform_sum += std::pow(common, (2.0 - q) * k) * dq;
    split_sum += std::pow(sigma_s, 2.0 - q) * dq;
    beta = std::max(beta, w[s] / (sigma_s * sigma_s));
  }
  const double energy = w[0];

  Report rep;
  rep.inequality("q_moment.common_sigma", true, lhs, uniform_sum, tol, {{"q", q}, {"rho", rho}, {"sigma", common}});
  rep.inequality("q_moment.split_sigma", small_rho, lhs, split_sum, tol, {{"q", q}, {"rho", rho}});
  if (energy > 0.0) {
    beta /= energy;
    rep.inequality("q_moment.hypercontractive", small_rho, std::pow(lhs, 1.0 / q),
                   std::pow(beta, (q - 2.0) / (2.0 * q)) * std::sqrt(energy), tol, {{"q", q}, {"beta", beta}});
  }
  for (const auto& z : rvs) rep.append(lemma_n1_grid(z, q, std::min(rho, 0.999 / (2.0 * q)), tol));
  return rep;
}

Report lemma_n1_grid(const FiniteRV& z, double q, double rho, double tol) {
  if (!(rho > 0.0 && rho < 1.0 / (2.0 * q))) throw std::invalid_argument("single-variable lemma needs rho in (0, 1/(2q))");
  if (!z.is_standard()) throw std::invalid_argument("single-variable lemma needs a standardized variable");
  const double sigma = z.moment_sigma(q);
  Report rep;
  for (double rr : {rho, 0.999 / (2.0 * q)}) {
    double worst = -1e300, wl = 0, wr = 0, we = 0, wd = 0;
    for (int e = -2; e <= 2; ++e)
      for (int d = -2; d <= 2; ++d) {
        double lhs = 0.0;
        for (std::size_t a = 0; a < z.size(); ++a) lhs += z.prob(a) * std::pow(std::abs(e + rr * d * z.value(a)), q);
        const double uni = 0.5 * std::pow(std::abs(e + d), q) + 0.5 * std::pow(std::abs(e - d), q);
        const double rhs = uni + std::pow(sigma, 2.0 - q) * std::pow(std::abs(d), q);
        if (lhs - rhs > worst) {
          worst = lhs - rhs;
          wl = lhs;
          wr = rhs;
          we = e;
          wd = d;
        }
      }
    rep.inequality("q_moment.single_variable", true, wl, wr, tol, {{"q", q}, {"rho", rr}, {"e", we}, {"d", wd}});
  }
  return rep;
}

Report invariance_gap(const MultilinearPoly& f, const std::vector<FiniteRV>& x, const std::vector<FiniteRV>& y,
                      const SmoothTest& test, const std::optional<std::vector<double>>& sigmas, double tol) {
  check_arity(f, x.size());
  check_arity(f, y.size());
  check_standard(x, "X");
  check_standard(y, "Y");
  const int n = f.n();

  std::vector<double> sig(static_cast<std::size_t>(n));
  bool moments_ok = true;
  for (int i = 0; i < n; ++i) {
    const double m3 = std::max(x[i].abs_moment(3.0), y[i].abs_moment(3.0));
    sig[i] = sigmas ? (*sigmas)[i] : 1.0 / m3;
    if (m3 > 1.0 / sig[i] * (1.0 + 1e-12)) moments_ok = false;
  }

  const std::vector<double> w = f.w_table();
  double eps = 0.0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    double v = w[s];
    for (int i : mask_to_indices(static_cast<Mask>(s))) v /= sig[i] * sig[i];
    eps = std::max(eps, v);
  }
  const int d = f.degree();

  // hybrid[t] uses Y on coordinates [0,t) and X after.
  std::vector<double> hybrid(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    std::vector<FiniteRV> z;
    for (int i = 0; i < n; ++i) z.push_back(i < t ? y[i] : x[i]);
    hybrid[t] = exact_expectation(f, z, test);
  }
  const double gap = hybrid[0] - hybrid[n];

  Report rep;
  double telescoped = 0.0;
  for (int t = 1; t <= n; ++t) {
    const double step = hybrid[t - 1] - hybrid[t];
    telescoped += step;
    std::vector<FiniteRV> z;
    for (int i = 0; i < n; ++i) z.push_back(i < t ? y[i] : x[i]);
    const double delta3 =
        expectation(f.derivative(Mask{1} << (t - 1)), z, [](double v) { return std::abs(v * v * v); });
    const double taylor = test.m3 / 6.0 * delta3 * (x[t - 1].abs_moment(3.0) + y[t - 1].abs_moment(3.0));
    rep.inequality("invariance.taylor_step", true, std::abs(step), taylor, tol, {{"t", t}});
  }
  rep.identity("invariance.telescoping", telescoped, gap, tol);

  const double base = test.m3 * w[0] * std::sqrt(eps);
  const double asserted = std::pow(2.0, 12.0 * d) * base;
  const double displayed = std::pow(2.0, 5.0 * d) * base;
  rep.inequality("invariance.bound", moments_ok, std::abs(gap), asserted, tol,
                 {{"degree", d}, {"epsilon", eps}, {"W_empty", w[0]}, {"m3", test.m3},
                  {"bound_2_5d", displayed}, {"margin_2_5d", displayed - std::abs(gap)}});
  // The sharper constant is only tallied: the hypothesis flag stays false so it can never count as a violation.
  Outcome sharper;
  sharper.check = "invariance.bound_2_5d_reported";
  sharper.hypothesis = false;
  sharper.conclusion = leq_with_slack(std::abs(gap), displayed, tol);
  sharper.lhs = std::abs(gap);
  sharper.rhs = displayed;
  rep.add(std::move(sharper));
  rep.data = {{"E_phi_X", hybrid[0]}, {"E_phi_Y", hybrid[n]}, {"gap", gap}, {"sigmas", sig}};
  return rep;
}

int hamming_ball_threshold(int n, double p, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("Hamming ball target must lie in [0,1]");
  int best = 0;
  double best_gap = 1e300;
  for (int t = 0; t <= n + 1; ++t) {
    double mu = 0.0;
    for (int j = t; j <= n; ++j) mu += binomial(n, j) * std::pow(p, j) * std::pow(1.0 - p, n - j);
    const double gap = std::abs(mu - alpha);
    if (gap < best_gap - 1e-15) {  // ties keep the smaller t
      best_gap = gap;
      best = t;
    }
  }
  return best;
}

BiasedFunction hamming_ball(int n, double p, double alpha) {
  const int t = hamming_ball_threshold(n, p, alpha);
  return BiasedFunction::from_predicate(n, Bias(p), [t](Mask x) { return popcount(x) >= t ? 1 : 0; });
}

Report majority_is_stablest_explore(const BiasedFunction& f, const BiasedFunction& g, double rho) {
  const BiasedFunction hf = hamming_ball(f.n(), f.p(), std::clamp(f.mean(), 0.0, 1.0));
  const BiasedFunction hg = hamming_ball(g.n(), g.p(), std::clamp(g.mean(), 0.0, 1.0));
  Report rep;
  rep.data = {{"rho", rho},
              {"stability_fg", inner_product(noise_apply(f, rho), g)},
              {"stability_balls", inner_product(noise_apply(hf, rho), hg)},
              {"beta_f", beta_smallness(f, true)},
              {"beta_g", beta_smallness(g, true)}};
  rep.note("exploratory comparison only; no inequality is asserted");
  return rep;
}

}  // namespace bcube
