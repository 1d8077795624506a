#pragma once

#include <optional>
#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/mixed_cube.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

struct NoiseParams {
  double rho;
  std::optional<double> rho_prime;
  int t = 0;

  explicit NoiseParams(double rho, std::optional<double> rho_prime = std::nullopt, int t = 0);
};

struct DirectedParams {
  double p;
  double q;

  DirectedParams(double p, double q);
  // p(1-q) / (q(1-p)): the correlation of the composed operator.
  double rho() const { return p * (1.0 - q) / (q * (1.0 - p)); }
};

enum class Direction { up, down };

// Spectral multiplier rho^{|S|}.
Spectrum noise_apply(const Spectrum& s, double rho);
BiasedFunction noise_apply(const BiasedFunction& f, double rho);
// Keep-or-resample sweep in value space; must agree with the spectral version.
BiasedFunction noise_apply_resampling(const BiasedFunction& f, double rho);

double noise_stability(const BiasedFunction& f, double rho);
double noise_stability(const Spectrum& s, double rho);

// up: f on mu_p to E[f(x) | y] on mu_q. down: g on mu_q to E[g(y) | x] on mu_p.
BiasedFunction directed_noise_apply(const BiasedFunction& f, const DirectedParams& dp, Direction dir);

// Column x of the result is op applied to the indicator of x. Row-major, 2^n x 2^n.
template <class Op>
std::vector<double> dense_operator(int n, double p_in, Op&& op) {
  const std::size_t len = std::size_t{1} << n;
  std::vector<double> m(len * len);
  for (std::size_t x = 0; x < len; ++x) {
    std::vector<double> e(len, 0.0);
    e[x] = 1.0;
    const BiasedFunction out = op(BiasedFunction(n, Bias(p_in), std::move(e)));
    for (std::size_t y = 0; y < len; ++y) m[y * len + x] = out[static_cast<Mask>(y)];
  }
  return m;
}

// f_t: the same coefficients on characters uniform over coordinates [0,t) and p-biased after.
MixedCubeFunction hybrid_function(const Spectrum& s, int t);
// T^t_{rho',rho}: keep with rho' on the first t coordinates and rho on the rest.
MixedCubeFunction hybrid_noise(const MixedCubeFunction& g, int t, double rho_prime, double rho);

// One step of the replacement argument at interpolation index t in [1,n].
Report replacement_step_check(const BiasedFunction& f, double rho, int t, double tol = kDefaultTolerance);
// The telescoped estimate at every index i in [0,n]; i = 0 bounds ||T_rho f||_4^4.
Report replacement_telescope_check(const BiasedFunction& f, double rho, double tol = kDefaultTolerance);

}  // namespace bcube
