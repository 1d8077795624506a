#include "biasedcube/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bcube {

namespace {

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("noise rate rho must lie in [0,1]");
}

double fourth_moment(const MixedCubeFunction& g) { return g.moment(4); }

}  // namespace

NoiseParams::NoiseParams(double r, std::optional<double> rp, int t_) : rho(r), rho_prime(rp), t(t_) {
  check_rho(rho);
  if (rho_prime) check_rho(*rho_prime);
  if (t < 0) throw std::invalid_argument("interpolation index must be nonnegative");
}

DirectedParams::DirectedParams(double p_, double q_) : p(p_), q(q_) {
  if (!(p > 0.0 && p < q && q < 1.0)) throw std::invalid_argument("directed noise needs 0 < p < q < 1");
}

Spectrum noise_apply(const Spectrum& s, double rho) {
  check_rho(rho);
  std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
  std::vector<double> powers(static_cast<std::size_t>(s.n()) + 1, 1.0);
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * rho;
  for (std::size_t t = 0; t < c.size(); ++t) c[t] *= powers[popcount(static_cast<Mask>(t))];
  return Spectrum(s.n(), s.bias(), std::move(c));
}

BiasedFunction noise_apply(const BiasedFunction& f, double rho) {
  return inverse_transform(noise_apply(forward_transform(f), rho));
}

BiasedFunction noise_apply_resampling(const BiasedFunction& f, double rho) {
  check_rho(rho);
  MixedCubeFunction g{std::vector<double>(static_cast<std::size_t>(f.n()), f.p()),
                      std::vector<double>(f.values().begin(), f.values().end())};
  const std::vector<double> keep(static_cast<std::size_t>(f.n()), rho);
  g = mixed_resample_noise(g, keep);
  return BiasedFunction(f.n(), f.bias(), std::move(g.values));
}

double noise_stability(const Spectrum& s, double rho) {
  check_rho(rho);
  double acc = 0.0;
  for (std::size_t t = 0; t < s.size(); ++t) acc += std::pow(rho, popcount(static_cast<Mask>(t))) * s[t] * s[t];
  return acc;
}

double noise_stability(const BiasedFunction& f, double rho) { return noise_stability(forward_transform(f), rho); }

BiasedFunction directed_noise_apply(const BiasedFunction& f, const DirectedParams& dp, Direction dir) {
  const double p = dp.p, q = dp.q;
  const double expected = dir == Direction::up ? p : q;
  if (std::abs(f.p() - expected) > 1e-12)
    throw std::invalid_argument("directed noise input carries the wrong bias");
  std::vector<double> v(f.values().begin(), f.values().end());
  for (int i = 0; i < f.n(); ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) {
        const double at0 = v[j], at1 = v[j + h];
        if (dir == Direction::up) {
          // y_i = 1: x_i = 1 with probability p/q. y_i = 0 forces x_i = 0.
          v[j + h] = (p / q) * at1 + (1.0 - p / q) * at0;
        } else {
          // x_i = 1 forces y_i = 1. x_i = 0: y_i = 1 with probability (q-p)/(1-p).
          const double up = (q - p) / (1.0 - p);
          v[j] = up * at1 + (1.0 - up) * at0;
        }
      }
  }
  return BiasedFunction(f.n(), Bias(dir == Direction::up ? q : p), std::move(v));
}

MixedCubeFunction hybrid_function(const Spectrum& s, int t) {
  if (t < 0 || t > s.n()) throw std::invalid_argument("interpolation index out of range");
  std::vector<double> probs(static_cast<std::size_t>(s.n()), s.bias().p());
  for (int i = 0; i < t; ++i) probs[static_cast<std::size_t>(i)] = 0.5;
  return mixed_from_coefficients(std::move(probs), std::vector<double>(s.coeffs().begin(), s.coeffs().end()));
}

MixedCubeFunction hybrid_noise(const MixedCubeFunction& g, int t, double rho_prime, double rho) {
  check_rho(rho);
  check_rho(rho_prime);
  std::vector<double> keep(static_cast<std::size_t>(g.n()), rho);
  for (int i = 0; i < t && i < g.n(); ++i) keep[static_cast<std::size_t>(i)] = rho_prime;
  return mixed_resample_noise(g, keep);
}

Report replacement_step_check(const BiasedFunction& f, double rho, int t, double tol) {
  const int n = f.n();
  if (t < 1 || t > n) throw std::invalid_argument("replacement index t must lie in [1,n]");
  if (!(rho > 0.0 && rho <= 1.0 / (2.0 * std::sqrt(3.0)) + 1e-15))
    throw std::invalid_argument("replacement step needs rho in (0, 1/(2 sqrt 3)]");
  const Spectrum s = forward_transform(f);
  const Mask coord = Mask{1} << (t - 1);
  const Spectrum dt = forward_transform(derivative(f, coord));

  const double before = fourth_moment(hybrid_noise(hybrid_function(s, t - 1), t - 1, 2 * rho, rho));
  const double after = fourth_moment(hybrid_noise(hybrid_function(s, t), t, 2 * rho, rho));
  const double deriv = fourth_moment(hybrid_noise(hybrid_function(dt, t), t, 2 * rho, rho));
  const double lambda = f.bias().lambda();
  const double rho4 = rho * rho * rho * rho;

  Report r;
  r.inequality("replacement_step", true, before, after + 3.0 * lambda * rho4 * deriv, tol,
               {{"t", t}, {"rho", rho}, {"after", after}, {"derivative_term", deriv}});
  return r;
}

Report replacement_telescope_check(const BiasedFunction& f, double rho, double tol) {
  const int n = f.n();
  if (!(rho > 0.0 && rho <= 1.0 / (2.0 * std::sqrt(3.0)) + 1e-15))
    throw std::invalid_argument("telescoped estimate needs rho in (0, 1/(2 sqrt 3)]");
  const Spectrum s = forward_transform(f);
  const std::size_t len = s.size();
  const double factor = 3.0 * f.bias().lambda() * std::pow(rho, 4);
  const std::vector<double> uniform(static_cast<std::size_t>(n), 0.5);

  // term[S] = (3 lambda rho^4)^{|S|} || T_{2rho} (D_S f)_n ||_4^4 under the uniform measure.
  std::vector<double> term(len);
  for (std::size_t S = 0; S < len; ++S) {
    std::vector<double> c(len, 0.0);
    for (std::size_t T = 0; T < len; ++T) {
      if (T & S) continue;
      c[T] = std::pow(2.0 * rho, popcount(static_cast<Mask>(T))) * s[static_cast<Mask>(T | S)];
    }
    const MixedCubeFunction g = mixed_from_coefficients(uniform, std::move(c));
    term[S] = std::pow(factor, popcount(static_cast<Mask>(S))) * fourth_moment(g);
  }

  Report r;
  for (int i = 0; i <= n; ++i) {
    const double lhs = fourth_moment(hybrid_noise(hybrid_function(s, i), i, 2 * rho, rho));
    const Mask allowed = full_mask(n) & ~full_mask(i);
    double rhs = 0.0;
    for (std::size_t S = 0; S < len; ++S)
      if (is_subset(static_cast<Mask>(S), allowed)) rhs += term[S];
    r.inequality(i == 0 ? "replacement_telescope.base" : "replacement_telescope", true, lhs, rhs, tol,
                 {{"i", i}, {"rho", rho}});
  }
  return r;
}

}  // namespace bcube
