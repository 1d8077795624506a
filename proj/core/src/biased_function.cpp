#include "biasedcube/biased_function.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "biasedcube/mixed_cube.hpp"

namespace bcube {

namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxCubeDimension)
    throw std::invalid_argument("cube dimension out of range [0,24]: " + std::to_string(n));
}

void check_length(int n, std::size_t len) {
  if (len != (std::size_t{1} << n))
    throw std::invalid_argument("expected 2^" + std::to_string(n) + " entries, got " + std::to_string(len));
}

std::vector<double> uniform_probs(int n, double p) { return std::vector<double>(static_cast<std::size_t>(n), p); }

}  // namespace

BiasedFunction::BiasedFunction(int n, Bias bias, std::vector<double> values)
    : n_(n), bias_(bias), values_(std::move(values)) {
  check_dimension(n);
  check_length(n, values_.size());
}

BiasedFunction BiasedFunction::constant(int n, Bias bias, double c) {
  check_dimension(n);
  return BiasedFunction(n, bias, std::vector<double>(std::size_t{1} << n, c));
}

BiasedFunction BiasedFunction::scaled(double c) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= c;
  return BiasedFunction(n_, bias_, std::move(v));
}

BiasedFunction BiasedFunction::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation length mismatch");
  std::vector<double> v(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    Mask y = 0;
    for (int i = 0; i < n_; ++i)
      if (x >> i & 1) y |= Mask{1} << perm[i];
    v[y] = values_[x];
  }
  return BiasedFunction(n_, bias_, std::move(v));
}

bool BiasedFunction::is_boolean() const {
  for (double v : values_)
    if (v != 0.0 && v != 1.0) return false;
  return true;
}

bool BiasedFunction::is_ternary() const {
  for (double v : values_)
    if (v != 0.0 && v != 1.0 && v != -1.0) return false;
  return true;
}

double BiasedFunction::weight(Mask x) const { return point_weight(n_, bias_.p(), x); }

double BiasedFunction::mean() const {
  std::vector<double> c = values_;
  // Averaging out every coordinate is the first half of the butterfly.
  for (int i = 0; i < n_; ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < c.size(); base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) c[j] = (1.0 - p()) * c[j] + p() * c[j + h];
  }
  return c[0];
}

Spectrum::Spectrum(int n, Bias bias, std::vector<double> coeffs) : n_(n), bias_(bias), coeffs_(std::move(coeffs)) {
  check_dimension(n);
  check_length(n, coeffs_.size());
}

double Spectrum::squared_sum() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c * c;
  return acc;
}

int Spectrum::degree(double tol) const {
  int d = 0;
  for (std::size_t s = 0; s < coeffs_.size(); ++s)
    if (std::abs(coeffs_[s]) > tol) d = std::max(d, popcount(static_cast<Mask>(s)));
  return d;
}

Restriction::Restriction(Mask s, Mask x) : set(s), assignment(x) {
  if ((x & ~s) != 0) throw std::invalid_argument("restriction assignment not contained in restricted set");
}

double point_weight(int n, double p, Mask x) {
  const int k = popcount(x);
  return std::pow(p, k) * std::pow(1.0 - p, n - k);
}

std::vector<double> point_weights(int n, double p) { return mixed_weights(uniform_probs(n, p)); }

Spectrum forward_transform(const BiasedFunction& f) {
  std::vector<double> c(f.values().begin(), f.values().end());
  forward_butterfly(c, uniform_probs(f.n(), f.p()));
  return Spectrum(f.n(), f.bias(), std::move(c));
}

BiasedFunction inverse_transform(const Spectrum& s) {
  std::vector<double> v(s.coeffs().begin(), s.coeffs().end());
  inverse_butterfly(v, uniform_probs(s.n(), s.bias().p()));
  return BiasedFunction(s.n(), s.bias(), std::move(v));
}

double absolute_moment(const BiasedFunction& f, double r) {
  const auto w = point_weights(f.n(), f.p());
  double acc = 0.0;
  if (r == 2.0) {
    for (std::size_t x = 0; x < w.size(); ++x) acc += w[x] * f[x] * f[x];
  } else if (r == 4.0) {
    for (std::size_t x = 0; x < w.size(); ++x) {
      const double v2 = f[x] * f[x];
      acc += w[x] * v2 * v2;
    }
  } else {
    for (std::size_t x = 0; x < w.size(); ++x) acc += w[x] * std::pow(std::abs(f[x]), r);
  }
  return acc;
}

double biased_norm(const BiasedFunction& f, double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");
  return std::pow(absolute_moment(f, r), 1.0 / r);
}

double inner_product(const BiasedFunction& f, const BiasedFunction& g) {
  if (f.n() != g.n() || !(f.bias() == g.bias())) throw std::invalid_argument("inner product of mismatched functions");
  const auto w = point_weights(f.n(), f.p());
  double acc = 0.0;
  for (std::size_t x = 0; x < w.size(); ++x) acc += w[x] * f[x] * g[x];
  return acc;
}

BiasedFunction restrict(const BiasedFunction& f, const Restriction& rho) {
  const Mask all = full_mask(f.n());
  if (!is_subset(rho.set, all)) throw std::invalid_argument("restriction set exceeds [n]");
  const Mask free = all & ~rho.set;
  const int m = popcount(free);
  std::vector<double> v(std::size_t{1} << m);
  for (std::size_t y = 0; y < v.size(); ++y) v[y] = f[deposit_bits(static_cast<Mask>(y), free) | rho.assignment];
  return BiasedFunction(m, f.bias(), std::move(v));
}

BiasedFunction derivative(const BiasedFunction& f, Mask s) {
  if (!is_subset(s, full_mask(f.n()))) throw std::invalid_argument("derivative set exceeds [n]");
  std::vector<double> v(f.values().begin(), f.values().end());
  const double sigma = f.bias().sigma();
  for (int i : mask_to_indices(s)) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) {
        const double d = sigma * (v[j + h] - v[j]);
        v[j] = d;
        v[j + h] = d;
      }
  }
  return BiasedFunction(f.n(), f.bias(), std::move(v));
}

BiasedFunction laplacian(const BiasedFunction& f, Mask s) {
  if (!is_subset(s, full_mask(f.n()))) throw std::invalid_argument("laplacian set exceeds [n]");
  std::vector<double> v(f.values().begin(), f.values().end());
  const double p = f.p();
  for (int i : mask_to_indices(s)) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t base = 0; base < v.size(); base += 2 * h)
      for (std::size_t j = base; j < base + h; ++j) {
        const double avg = (1.0 - p) * v[j] + p * v[j + h];
        v[j] -= avg;
        v[j + h] -= avg;
      }
  }
  return BiasedFunction(f.n(), f.bias(), std::move(v));
}

Spectrum truncate(const Spectrum& s, int r) {
  if (r < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  std::vector<double> c(s.coeffs().begin(), s.coeffs().end());
  for (std::size_t t = 0; t < c.size(); ++t)
    if (popcount(static_cast<Mask>(t)) > r) c[t] = 0.0;
  return Spectrum(s.n(), s.bias(), std::move(c));
}

BiasedFunction truncate(const BiasedFunction& f, int r) {
  if (r >= f.n()) return f;
  return inverse_transform(truncate(forward_transform(f), r));
}

BiasedFunction character(int n, Bias bias, Mask s) {
  return BiasedFunction::from_predicate(n, bias, [&](Mask x) {
    double v = 1.0;
    for (int i : mask_to_indices(s)) v *= (x >> i & 1) ? bias.chi1() : bias.chi0();
    return v;
  });
}

}  // namespace bcube
