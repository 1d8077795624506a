#pragma once

#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/corpus.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

inline constexpr int kMaxVerifyDimension = 14;

// ||T_{1/5} f||_4 <= beta^{1/4} ||f||_2 with beta over all S, and the lambda-weighted variant at rho = 1/sqrt(24).
Report verify_global_hc(const BiasedFunction& f, double tol = kDefaultTolerance);
// ||T_rho f||_4^4 <= sum (3 lambda rho^4)^{|S|} ||D_S f||^4 <= sum (3 sigma^2 rho^4)^{|S|} I_S^2, rho <= 1/sqrt(12).
Report verify_term_bound(const BiasedFunction& f, double rho, double tol = kDefaultTolerance);
// Degree-r moment bounds for q = 4 and for q in {3, 4, 6} in the random-variable normalization.
Report verify_degree_r(const BiasedFunction& f, int r, double tol = kDefaultTolerance);

// sigma_q with E|chi|^q = sigma_q^{2-q} for the p-biased character.
double character_moment_sigma(double p, double q);

struct HcSuiteOptions {
  std::vector<double> term_rhos{0.2, 0.28867513459481287};  // the second is 1/sqrt(12)
  std::vector<int> truncation_degrees{1, 2, 3};
  bool homogeneity = true;
  double tol = kDefaultTolerance;
};

// Runs every cube hypercontractivity check on one function.
Report hc_checks(const BiasedFunction& f, const HcSuiteOptions& opts);
Summary verify_hc_corpus(const Corpus& corpus, const HcSuiteOptions& opts);

}  // namespace bcube
