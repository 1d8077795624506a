#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "biasedcube/bias.hpp"
#include "biasedcube/bits.hpp"

namespace bcube {

inline constexpr int kMaxCubeDimension = 24;

// Dense table of f over {0,1}^n under the p-biased product measure.
class BiasedFunction {
 public:
  BiasedFunction(int n, Bias bias, std::vector<double> values);

  static BiasedFunction constant(int n, Bias bias, double c);
  template <class F>
  static BiasedFunction from_predicate(int n, Bias bias, F&& f) {
    std::vector<double> v(std::size_t{1} << n);
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = static_cast<double>(f(static_cast<Mask>(x)));
    return BiasedFunction(n, bias, std::move(v));
  }

  int n() const { return n_; }
  const Bias& bias() const { return bias_; }
  double p() const { return bias_.p(); }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](Mask x) const { return values_[x]; }

  BiasedFunction with_bias(Bias b) const { return BiasedFunction(n_, b, values_); }
  BiasedFunction scaled(double c) const;
  // Same function with coordinates relabelled: new coordinate perm[i] carries old coordinate i.
  BiasedFunction permuted(const std::vector<int>& perm) const;

  bool is_boolean() const;
  bool is_ternary() const;  // values in {-1, 0, 1}
  double mean() const;      // E_{mu_p} f
  double weight(Mask x) const;

 private:
  int n_;
  Bias bias_;
  std::vector<double> values_;
};

class Spectrum {
 public:
  Spectrum(int n, Bias bias, std::vector<double> coeffs);

  int n() const { return n_; }
  const Bias& bias() const { return bias_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](Mask s) const { return coeffs_[s]; }

  double squared_sum() const;
  int degree(double tol = 0.0) const;

 private:
  int n_;
  Bias bias_;
  std::vector<double> coeffs_;
};

struct Restriction {
  Mask set;
  Mask assignment;
  Restriction(Mask set, Mask assignment);
};

// Weight of x under mu_p on n coordinates.
double point_weight(int n, double p, Mask x);
std::vector<double> point_weights(int n, double p);

Spectrum forward_transform(const BiasedFunction& f);
BiasedFunction inverse_transform(const Spectrum& s);

double biased_norm(const BiasedFunction& f, double r);
double inner_product(const BiasedFunction& f, const BiasedFunction& g);
// E|f|^r without the outer root.
double absolute_moment(const BiasedFunction& f, double r);

BiasedFunction restrict(const BiasedFunction& f, const Restriction& rho);
// D_S f, lifted to the full cube (independent of the coordinates in S).
BiasedFunction derivative(const BiasedFunction& f, Mask s);
BiasedFunction laplacian(const BiasedFunction& f, Mask s);
BiasedFunction truncate(const BiasedFunction& f, int r);
Spectrum truncate(const Spectrum& s, int r);

// The character chi_S as a function on the cube.
BiasedFunction character(int n, Bias bias, Mask s);

}  // namespace bcube
