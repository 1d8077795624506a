#pragma once

#include <span>
#include <vector>

#include "biasedcube/bits.hpp"

namespace bcube {

// A function on {0,1}^n under a product measure whose i-th coordinate is 1 with
// probability probs[i]. Characters are (x_i - p_i)/sigma_i per coordinate.
struct MixedCubeFunction {
  std::vector<double> probs;
  std::vector<double> values;

  int n() const { return static_cast<int>(probs.size()); }
  double expectation() const;
  double absolute_moment(double r) const;
  double moment(int k) const;
};

// In-place per-coordinate butterflies. Length of `data` must be 2^probs.size().
void forward_butterfly(std::span<double> data, std::span<const double> probs);
void inverse_butterfly(std::span<double> data, std::span<const double> probs);

std::vector<double> mixed_weights(std::span<const double> probs);

MixedCubeFunction mixed_from_coefficients(std::vector<double> probs, std::vector<double> coeffs);
std::vector<double> mixed_coefficients(const MixedCubeFunction& f);

// Keep coordinate i with probability keep[i], else resample it from its own marginal.
MixedCubeFunction mixed_resample_noise(const MixedCubeFunction& f, std::span<const double> keep);

}  // namespace bcube
