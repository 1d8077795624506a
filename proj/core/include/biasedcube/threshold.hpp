#pragma once

#include <optional>
#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/set_family.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

// μ_p(F) = Σ_j c_j p^j (1-p)^{n-j} from exact level counts.
class MeasureCurve {
 public:
  MeasureCurve(int n, std::vector<double> level_counts, bool monotone_source);

  int n() const { return n_; }
  const std::vector<double>& level_counts() const { return counts_; }
  bool monotone_source() const { return monotone_; }
  double operator()(double p) const;
  // Nondecreasing on a uniform grid of the given size.
  bool nondecreasing_on_grid(int points = 1001, double tol = 1e-12) const;

 private:
  int n_;
  std::vector<double> counts_;
  bool monotone_;
};

MeasureCurve measure_curve(const BiasedFunction& f);
// The family as a subset of the cube (so only level k is populated).
MeasureCurve measure_curve(const SetFamily& f);

// inf{p : μ_p >= t}, by bisection to 1e-12; 0 or 1 when t is outside (μ_0, μ_1].
double critical_probability(const MeasureCurve& curve, double t = 0.5);

struct ThresholdOptions {
  std::vector<double> eps{0.5, 0.25, 0.1};
  // Constant in r = C log(1/ε) for the quasirandom threshold; default 2/log(1+α) with α = q/p - 1.
  std::optional<double> quasirandom_c;
  double tol = kDefaultTolerance;
};

// Sharp-threshold inequalities for a monotone Boolean f between μ_p and μ_q.
Report threshold_checks(const BiasedFunction& f, double p, double q, const ThresholdOptions& opts = {});

// Explorer: largest μ_p(f_{J→1}) for each |J| <= max_size, next to K = p I[f] / μ_p(f).
Report boost_search(const BiasedFunction& f, int max_size);

// Anti-tribes measure, total influence and exact boost profile against enumeration.
Report tribes_closed_forms(int s, int w, double p, double tol = 1e-12);
// Anti-tribes times an AND of t further coordinates: no large boost from few extra coordinates.
Report anchored_tribes_check(int s, int w, int t, double p, double tol = kDefaultTolerance);

// P(Bin(n,p) >= pn) >= 1/4 for every integer pn, n <= max_n.
Report binomial_tail_check(int max_n, double tol = kDefaultTolerance);
// Monotone curve is nondecreasing and its ε and 1-ε thresholds are finite and ordered.
Report curve_sanity(const MeasureCurve& curve);

}  // namespace bcube
