#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biasedcube/bits.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

inline constexpr std::size_t kMaxProductPoints = 2'000'000;

struct Factor {
  std::vector<double> probs;
  double p_min;
  double sigma;  // sqrt(p_min (1 - p_min))

  std::size_t size() const { return probs.size(); }
};

// Points are indexed mixed-radix with factor 0 varying fastest.
class ProductSpace {
 public:
  explicit ProductSpace(const std::vector<std::vector<double>>& factor_probs);

  int dimension() const { return static_cast<int>(factors_.size()); }
  std::size_t size() const { return size_; }
  const Factor& factor(int t) const { return factors_[static_cast<std::size_t>(t)]; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t stride(int t) const { return strides_[static_cast<std::size_t>(t)]; }
  std::size_t coordinate(std::size_t point, int t) const { return point / stride(t) % factor(t).size(); }

  std::vector<double> weights() const;
  // Some factor has its smallest atom at or above 1/2.
  bool violates_half_assumption() const;
  double sigma_product(Mask s) const;

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::size_t size_;
};

struct SpaceFunction {
  ProductSpace space;
  std::vector<double> values;

  SpaceFunction(ProductSpace s, std::vector<double> v);
  double expectation() const;
  double absolute_moment(double q) const;
  double norm2_squared() const { return absolute_moment(2.0); }
};

// Replaces f by its conditional expectation given the coordinates outside `averaged`.
std::vector<double> average_out(const ProductSpace& space, std::vector<double> values, Mask averaged);
bool depends_only_on(const ProductSpace& space, const std::vector<double>& values, Mask coords, double tol = 1e-12);

struct ESComponents {
  ProductSpace base;
  std::vector<std::vector<double>> pieces;  // index S: table of f^{=S}

  std::vector<double> reconstruct() const;
  double piece_norm2_squared(Mask s) const;
  // ||L_S f||_2^2 = sum over T containing S of ||f^{=T}||^2.
  std::vector<double> laplacian_energies() const;
};

ESComponents efron_stein(const SpaceFunction& f);
SpaceFunction es_laplacian(const ESComponents& comp, Mask s);
SpaceFunction es_noise(const ESComponents& comp, double rho);
// Per-coordinate keep-or-resample matrices rho I + (1 - rho) 1 nu^T applied as sweeps.
SpaceFunction resampling_noise(const SpaceFunction& f, double rho);

// Reconstruction, locality, orthogonality and Parseval of the decomposition.
Report es_invariants(const ESComponents& comp, const SpaceFunction& f, double tol = 1e-10);
// ||T_rho f||_q^q <= sum_S sigma_S^{2-q} ||L_S f||_2^q, q even, rho <= 1/(8 q^1.5).
Report verify_es_hc(const SpaceFunction& f, int q, double rho, double tol = kDefaultTolerance);
// E[prod f^{=S_i}] = 0 whenever some coordinate lies in exactly one S_i; every q-tuple of sets.
Report es_single_coverage_check(const SpaceFunction& f, int q, double tol = 1e-10);
// ||g||_q <= ||g~||_q with g~ built on (p_i/4)-biased characters.
Report reduction_check(const SpaceFunction& g, int q, double tol = kDefaultTolerance);

// A seeded random space: `factors` factors with supports in [2, max_support].
ProductSpace random_product_space(std::uint64_t seed, int factors, int max_support);
SpaceFunction random_space_function(const ProductSpace& space, std::uint64_t seed);

}  // namespace bcube
