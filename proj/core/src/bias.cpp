#include "biasedcube/bias.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "biasedcube/bits.hpp"

namespace bcube {

Bias::Bias(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("bias p must lie in (0,1), got " + std::to_string(p));
  sigma_ = std::sqrt(p * (1.0 - p));
  const double q = 1.0 - p;
  lambda_ = (q * q * q + p * p * p) / (sigma_ * sigma_);
  if (!(lambda_ <= 1.0 / (sigma_ * sigma_) * (1.0 + 1e-15)))
    throw std::logic_error("lambda exceeds sigma^-2");
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace bcube
