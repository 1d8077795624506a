#include "biasedcube/mixed_cube.hpp"

#include <cmath>
#include <stdexcept>

namespace bcube {

namespace {

void check_length(std::size_t len, std::size_t n) {
  if (n > 30 || len != (std::size_t{1} << n)) throw std::invalid_argument("table length is not 2^n");
}

}  // namespace

void forward_butterfly(std::span<double> data, std::span<const double> probs) {
  check_length(data.size(), probs.size());
  const std::size_t len = data.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i], q = 1.0 - p, s = std::sqrt(p * q);
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const double a = data[j], b = data[j + h];
        data[j] = q * a + p * b;
        data[j + h] = s * (b - a);
      }
    }
  }
}

void inverse_butterfly(std::span<double> data, std::span<const double> probs) {
  check_length(data.size(), probs.size());
  const std::size_t len = data.size();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i], q = 1.0 - p, s = std::sqrt(p * q);
    const double lo = p / s, hi = q / s;
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const double c0 = data[j], c1 = data[j + h];
        data[j] = c0 - lo * c1;
        data[j + h] = c0 + hi * c1;
      }
    }
  }
}

std::vector<double> mixed_weights(std::span<const double> probs) {
  std::vector<double> w(std::size_t{1} << probs.size(), 1.0);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t x = 0; x < w.size(); ++x) w[x] *= (x & h) ? probs[i] : 1.0 - probs[i];
  }
  return w;
}

double MixedCubeFunction::expectation() const {
  const auto w = mixed_weights(probs);
  double acc = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) acc += w[x] * values[x];
  return acc;
}

double MixedCubeFunction::absolute_moment(double r) const {
  const auto w = mixed_weights(probs);
  double acc = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) acc += w[x] * std::pow(std::abs(values[x]), r);
  return acc;
}

double MixedCubeFunction::moment(int k) const {
  const auto w = mixed_weights(probs);
  double acc = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= values[x];
    acc += w[x] * v;
  }
  return acc;
}

MixedCubeFunction mixed_from_coefficients(std::vector<double> probs, std::vector<double> coeffs) {
  inverse_butterfly(coeffs, probs);
  return MixedCubeFunction{std::move(probs), std::move(coeffs)};
}

std::vector<double> mixed_coefficients(const MixedCubeFunction& f) {
  std::vector<double> c = f.values;
  forward_butterfly(c, f.probs);
  return c;
}

MixedCubeFunction mixed_resample_noise(const MixedCubeFunction& f, std::span<const double> keep) {
  if (keep.size() != f.probs.size()) throw std::invalid_argument("keep vector length mismatch");
  MixedCubeFunction g = f;
  const std::size_t len = g.values.size();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const double p = f.probs[i], rho = keep[i];
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("keep probability outside [0,1]");
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < len; base += 2 * h) {
      for (std::size_t j = base; j < base + h; ++j) {
        const double a = g.values[j], b = g.values[j + h];
        const double avg = (1.0 - p) * a + p * b;
        g.values[j] = rho * a + (1.0 - rho) * avg;
        g.values[j + h] = rho * b + (1.0 - rho) * avg;
      }
    }
  }
  return g;
}

}  // namespace bcube
