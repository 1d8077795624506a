#pragma once

#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/report.hpp"
#include "biasedcube/tolerance.hpp"

namespace bcube {

inline constexpr int kMaxInfluenceDimension = 20;

struct InfluenceTable {
  int n;
  Bias bias;
  std::vector<double> gen_inf;  // entry S is I_S(f)
  double total;                 // sum_i I_i(f)

  double operator[](Mask s) const { return gen_inf[s]; }
};

// Superset sums: out[S] = sum_{T superset of S} in[T], in O(n 2^n).
std::vector<double> superset_sums(std::vector<double> table, int n);

// All I_S at once: zeta transform of the squared spectrum, scaled by sigma^{-2|S|}.
InfluenceTable influence_table(const BiasedFunction& f);
InfluenceTable influence_table(const Spectrum& s);
// E[(sum_x (-1)^{|S|-|x|} f_{S->x})^2] evaluated literally for every S; O(4^n).
std::vector<double> generalized_influences_definitional(const BiasedFunction& f);
// ||f_{i->1} - f_{i->0}||_2^2 for each coordinate.
std::vector<double> coordinate_influences(const BiasedFunction& f);
// ||D_S f||_2^2 for every S.
std::vector<double> derivative_energies(const Spectrum& s);

double total_influence(const BiasedFunction& f);

// max_S I_S(f) / E[f^2]; all S, or nonempty S only.
double beta_smallness(const BiasedFunction& f, bool nonempty_only);

// entry J is mu_p(f_{J->1}) for every J, in O(n 2^n).
std::vector<double> restriction_boosts(const BiasedFunction& f);
// Smallest delta making f (r,delta)-global: max_{|J|<=r} mu_p(f_{J->1}) - mu_p(f), never below 0.
double globalness_delta(const BiasedFunction& f, int r);
bool is_global(const BiasedFunction& f, int r, double delta, double tol = kDefaultTolerance);

// Exact: f(x) <= f(x + e_i) for every x and i.
bool is_monotone(const BiasedFunction& f);

// mu_p(f) as a polynomial in p, evaluated for Boolean-or-real f given its values.
double mean_at(const BiasedFunction& f, double p);

Report verify_concentration(const BiasedFunction& f, int r, double delta, double tol = kDefaultTolerance);
Report verify_equivalence_lemmas(const BiasedFunction& f, int r, double delta, double tol = kDefaultTolerance);
Report russo_check(const BiasedFunction& f, double p, double h, double tol = kDefaultTolerance);
Report verify_bourgain_pp(const BiasedFunction& f, double tol = kDefaultTolerance);

}  // namespace bcube
