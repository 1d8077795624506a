#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/bits.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

class Rng;

inline constexpr std::size_t kMaxSupportProduct = 2'000'000;

class FiniteRV {
 public:
  FiniteRV(std::vector<double> values, std::vector<double> probs);

  static FiniteRV biased_character(double p);
  static FiniteRV rademacher();
  // Shift and scale an arbitrary finite distribution to mean 0, variance 1.
  static FiniteRV standardized(std::vector<double> values, std::vector<double> probs);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  double prob(std::size_t i) const { return probs_[i]; }

  double moment(int k) const;
  double abs_moment(double q) const;
  double mean() const { return moment(1); }
  double variance() const;
  bool is_standard(double tol = 1e-12) const;
  // sigma with E|Z|^q = sigma^{2-q}.
  double moment_sigma(double q) const;

 private:
  std::vector<double> values_;
  std::vector<double> probs_;
};

// f = sum_S a_S prod_{i in S} v_i.
class MultilinearPoly {
 public:
  MultilinearPoly(int n, std::vector<double> coeffs);

  static MultilinearPoly random(int n, int degree, Rng& rng);

  int n() const { return n_; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](Mask s) const { return coeffs_[s]; }
  int degree(double tol = 0.0) const;
  // W_S = sum over J containing S of a_J^2, for every S.
  std::vector<double> w_table() const;

  MultilinearPoly derivative(Mask s) const;  // coefficient a_T moves to T \ S for T containing S
  MultilinearPoly noise(double rho) const;
  MultilinearPoly permuted(const std::vector<int>& perm) const;
  double evaluate(std::span<const double> z) const;

 private:
  int n_;
  std::vector<double> coeffs_;
};

struct SmoothTest {
  std::function<double(double)> phi;
  double m3;  // certified bound on |phi'''| over the reals
  std::string derivation;
};

SmoothTest cubic_test();                 // x^3, phi''' = 6
SmoothTest sine_test(double frequency);  // sin(a x), |phi'''| <= a^3

// E[g(f(Z))] summed exactly over the product of supports.
double expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, const std::function<double(double)>& g);
// E|f|^q for any real q >= 1.
double abs_moment(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, double q);
// E[f^q] by multiplying out q copies of f and using independence; integer q <= 4.
double moment_by_expansion(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, int q);
double exact_expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, const SmoothTest& test);

std::vector<double> moment_sigmas(const std::vector<FiniteRV>& rvs, double q);
// prod_{i in S} sigma_i^{-2} * W_S.
double rv_influence(const MultilinearPoly& f, const std::vector<double>& sigmas, Mask s);
// Same quantity from E[(D_S f)^2] evaluated over the supports.
double rv_influence_by_expectation(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs,
                                   const std::vector<double>& sigmas, Mask s);

Report verify_q_moment(const MultilinearPoly& f, const std::vector<FiniteRV>& rvs, double q, double rho,
                       double tol = kDefaultTolerance);
// ||e + rho d Z||_q^q <= ||e + d chi||_q^q + sigma^{2-q} |d|^q over e, d in {-2,...,2}, chi uniform +-1.
Report lemma_n1_grid(const FiniteRV& z, double q, double rho, double tol = kDefaultTolerance);

Report invariance_gap(const MultilinearPoly& f, const std::vector<FiniteRV>& x, const std::vector<FiniteRV>& y,
                      const SmoothTest& test, const std::optional<std::vector<double>>& sigmas = std::nullopt,
                      double tol = kDefaultTolerance);

int hamming_ball_threshold(int n, double p, double alpha);
BiasedFunction hamming_ball(int n, double p, double alpha);

// Both sides of the "majority is stablest" comparison; reported, never asserted.
Report majority_is_stablest_explore(const BiasedFunction& f, const BiasedFunction& g, double rho);

}  // namespace bcube
