#include "biasedcube/hc_verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "biasedcube/influence.hpp"
#include "biasedcube/noise.hpp"
#include "biasedcube/parallel.hpp"

namespace bcube {

namespace {

void check_verifiable(const BiasedFunction& f) {
  if (f.n() > kMaxVerifyDimension) throw std::invalid_argument("hypercontractivity checks are limited to n <= 14");
}

double energy_of(const Spectrum& s) {
  const double e = s.squared_sum();
  if (!(e > 0.0)) throw std::invalid_argument("hypercontractivity checks need a nonzero function");
  return e;
}

}  // namespace

double character_moment_sigma(double p, double q) {
  const Bias b(p);
  const double m = (1.0 - p) * std::pow(std::abs(b.chi0()), q) + p * std::pow(std::abs(b.chi1()), q);
  return std::pow(m, 1.0 / (2.0 - q));
}

Report verify_global_hc(const BiasedFunction& f, double tol) {
  check_verifiable(f);
  const Spectrum s = forward_transform(f);
  const double energy = energy_of(s);
  const std::vector<double> d2 = derivative_energies(s);
  const double var = f.bias().variance(), lambda = f.bias().lambda();

  double beta = 0.0, beta_plus = 0.0;
  Mask arg = 0;
  for (std::size_t t = 0; t < d2.size(); ++t) {
    const int k = popcount(static_cast<Mask>(t));
    const double infl = d2[t] / std::pow(var, k);
    if (infl > beta) {
      beta = infl;
      arg = static_cast<Mask>(t);
    }
    beta_plus = std::max(beta_plus, d2[t] * std::pow(lambda, k));
  }
  beta /= energy;
  beta_plus /= energy;

  const double norm2 = std::sqrt(energy);
  const double at_fifth = biased_norm(inverse_transform(noise_apply(s, 0.2)), 4.0);
  const double at_plus = biased_norm(inverse_transform(noise_apply(s, 1.0 / std::sqrt(24.0))), 4.0);

  Report r;
  r.inequality("global_hc", f.p() <= 0.5, at_fifth, std::pow(beta, 0.25) * norm2, tol,
               {{"beta", beta}, {"argmax", mask_to_indices(arg)}, {"p", f.p()}});
  r.inequality("global_hc_plus", true, at_plus, std::pow(beta_plus, 0.25) * norm2, tol, {{"beta_plus", beta_plus}});
  r.inequality("noise_contraction", true, at_fifth, at_plus, tol);
  return r;
}

Report verify_term_bound(const BiasedFunction& f, double rho, double tol) {
  check_verifiable(f);
  if (!(rho >= 0.0 && rho <= 1.0 / std::sqrt(12.0) + 1e-15))
    throw std::invalid_argument("term bound needs rho <= 1/sqrt(12)");
  const Spectrum s = forward_transform(f);
  const std::vector<double> d2 = derivative_energies(s);
  const double var = f.bias().variance(), lambda = f.bias().lambda();
  const double rho4 = std::pow(rho, 4);

  double middle = 0.0, right = 0.0;
  for (std::size_t t = 0; t < d2.size(); ++t) {
    const int k = popcount(static_cast<Mask>(t));
    const double infl = d2[t] / std::pow(var, k);
    middle += std::pow(3.0 * lambda * rho4, k) * d2[t] * d2[t];
    right += std::pow(3.0 * var * rho4, k) * infl * infl;
  }
  const double lhs = absolute_moment(inverse_transform(noise_apply(s, rho)), 4.0);

  Report r;
  r.inequality("term_bound.derivatives", true, lhs, middle, tol, {{"rho", rho}});
  r.inequality("term_bound.influences", true, middle, right, tol, {{"rho", rho}});
  return r;
}

Report verify_degree_r(const BiasedFunction& f, int r, double tol) {
  check_verifiable(f);
  const Spectrum s = forward_transform(f);
  double scale = 0.0;
  for (double c : s.coeffs()) scale = std::max(scale, std::abs(c));
  if (s.degree(1e-9 * (1.0 + scale)) > r) throw std::invalid_argument("function degree exceeds r");
  const double energy = energy_of(s);
  const std::vector<double> d2 = derivative_energies(s);
  const double var = f.bias().variance();

  double delta = 0.0;
  for (std::size_t t = 0; t < d2.size(); ++t) {
    const int k = popcount(static_cast<Mask>(t));
    if (k <= r) delta = std::max(delta, d2[t] / std::pow(var, k));
  }
  const double rr = static_cast<double>(r);
  const double norm2 = std::sqrt(energy);

  Report rep;
  rep.inequality("degree_r.q4", f.p() <= 0.5, biased_norm(f, 4.0),
                 std::pow(5.0, 0.75 * rr) * std::pow(delta, 0.25) * std::sqrt(norm2), tol,
                 {{"r", r}, {"delta", delta}});

  for (double q : {3.0, 4.0, 6.0}) {
    const double sq = character_moment_sigma(f.p(), q);
    double dq = 0.0;
    for (std::size_t t = 0; t < d2.size(); ++t) {
      const int k = popcount(static_cast<Mask>(t));
      if (k <= r) dq = std::max(dq, d2[t] / std::pow(sq * sq, k));
    }
    const double bound = std::pow(2.0 * q, 1.5 * rr) * std::pow(dq, (q - 2.0) / (2.0 * q)) * std::pow(norm2, 2.0 / q);
    rep.inequality("degree_r.general_q", true, biased_norm(f, q), bound, tol, {{"r", r}, {"q", q}, {"delta", dq}});
  }
  return rep;
}

Report hc_checks(const BiasedFunction& f, const HcSuiteOptions& opts) {
  Report rep;
  if (!(absolute_moment(f, 2.0) > 0.0)) {
    rep.note("zero function skipped");
    return rep;
  }
  rep.append(verify_global_hc(f, opts.tol));
  for (double rho : opts.term_rhos) rep.append(verify_term_bound(f, rho, opts.tol));
  for (int r : opts.truncation_degrees) {
    if (r > f.n()) continue;
    const BiasedFunction g = truncate(f, r);
    if (absolute_moment(g, 2.0) > 0.0) rep.append(verify_degree_r(g, r, opts.tol));
  }
  if (opts.homogeneity) {
    // Both sides scale alike, so doubling f must not change any verdict.
    const Report doubled = verify_global_hc(f.scaled(2.0), opts.tol);
    const Report& base = rep;
    for (const auto& o : doubled.outcomes()) {
      const Outcome* orig = base.find(o.check);
      Outcome h;
      h.check = "homogeneity";
      h.conclusion = orig && orig->conclusion == o.conclusion;
      h.lhs = o.lhs;
      h.rhs = o.rhs;
      h.detail = {{"of", o.check}};
      rep.add(std::move(h));
    }
  }
  return rep;
}

Summary verify_hc_corpus(const Corpus& corpus, const HcSuiteOptions& opts) {
  const auto reports =
      parallel_map<Report>(corpus.entries.size(), [&](std::size_t i) { return hc_checks(corpus.entries[i].f, opts); });
  Summary sum;
  for (std::size_t i = 0; i < reports.size(); ++i)
    sum.absorb(reports[i], {{"entry", i}, {"label", corpus.entries[i].label}});
  return sum;
}

}  // namespace bcube
