#include "biasedcube/product_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "biasedcube/corpus.hpp"
#include "biasedcube/mixed_cube.hpp"

namespace bcube {

namespace {

template <class F>
void for_each_fiber(const ProductSpace& space, int t, F&& f) {
  const std::size_t stride = space.stride(t), m = space.factor(t).size();
  for (std::size_t hi = 0; hi < space.size(); hi += stride * m)
    for (std::size_t lo = 0; lo < stride; ++lo) f(hi + lo, stride, m);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ProductSpace::ProductSpace(const std::vector<std::vector<double>>& factor_probs) : size_(1) {
  if (factor_probs.empty() || factor_probs.size() > 20) throw std::invalid_argument("product space needs 1..20 factors");
  for (const auto& probs : factor_probs) {
    if (probs.size() < 2) throw std::invalid_argument("each factor needs at least two atoms");
    double sum = 0.0, lo = 1.0;
    for (double p : probs) {
      if (!(p > 0.0)) throw std::invalid_argument("factor atoms must have positive probability");
      sum += p;
      lo = std::min(lo, p);
    }
    if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("factor probabilities must sum to 1");
    strides_.push_back(size_);
    size_ *= probs.size();
    if (size_ > kMaxProductPoints) throw std::invalid_argument("product space exceeds 2e6 points");
    factors_.push_back(Factor{probs, lo, std::sqrt(lo * (1.0 - lo))});
  }
}

std::vector<double> ProductSpace::weights() const {
  std::vector<double> w(size_, 1.0);
  for (std::size_t x = 0; x < size_; ++x)
    for (int t = 0; t < dimension(); ++t) w[x] *= factor(t).probs[coordinate(x, t)];
  return w;
}

bool ProductSpace::violates_half_assumption() const {
  for (const auto& f : factors_)
    if (f.p_min >= 0.5) return true;
  return false;
}

double ProductSpace::sigma_product(Mask s) const {
  double v = 1.0;
  for (int t : mask_to_indices(s)) v *= factor(t).sigma;
  return v;
}

SpaceFunction::SpaceFunction(ProductSpace s, std::vector<double> v) : space(std::move(s)), values(std::move(v)) {
  if (values.size() != space.size()) throw std::invalid_argument("function table does not match the product space");
}

double SpaceFunction::expectation() const {
  const auto w = space.weights();
  double acc = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) acc += w[x] * values[x];
  return acc;
}

double SpaceFunction::absolute_moment(double q) const {
  const auto w = space.weights();
  double acc = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) acc += w[x] * std::pow(std::abs(values[x]), q);
  return acc;
}

std::vector<double> average_out(const ProductSpace& space, std::vector<double> values, Mask averaged) {
  for (int t : mask_to_indices(averaged)) {
    if (t >= space.dimension()) throw std::invalid_argument("averaged coordinate outside the space");
    const auto& probs = space.factor(t).probs;
    for_each_fiber(space, t, [&](std::size_t base, std::size_t stride, std::size_t m) {
      double avg = 0.0;
      for (std::size_t a = 0; a < m; ++a) avg += probs[a] * values[base + a * stride];
      for (std::size_t a = 0; a < m; ++a) values[base + a * stride] = avg;
    });
  }
  return values;
}

bool depends_only_on(const ProductSpace& space, const std::vector<double>& values, Mask coords, double tol) {
  const double scale = 1.0 + max_abs(values);
  for (int t = 0; t < space.dimension(); ++t) {
    if (coords >> t & 1) continue;
    bool ok = true;
    for_each_fiber(space, t, [&](std::size_t base, std::size_t stride, std::size_t m) {
      for (std::size_t a = 1; a < m; ++a)
        if (std::abs(values[base + a * stride] - values[base]) > tol * scale) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<double> ESComponents::reconstruct() const {
  std::vector<double> out(base.size(), 0.0);
  for (const auto& piece : pieces)
    for (std::size_t x = 0; x < out.size(); ++x) out[x] += piece[x];
  return out;
}

double ESComponents::piece_norm2_squared(Mask s) const {
  return SpaceFunction(base, pieces[s]).norm2_squared();
}

std::vector<double> ESComponents::laplacian_energies() const {
  std::vector<double> e(pieces.size());
  for (std::size_t s = 0; s < pieces.size(); ++s) e[s] = piece_norm2_squared(static_cast<Mask>(s));
  const int n = base.dimension();
  for (int i = 0; i < n; ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t b = 0; b < e.size(); b += 2 * h)
      for (std::size_t j = b; j < b + h; ++j) e[j] += e[j + h];
  }
  return e;
}

ESComponents efron_stein(const SpaceFunction& f) {
  const int n = f.space.dimension();
  const std::size_t count = std::size_t{1} << n;
  if (count * f.space.size() > (std::size_t{1} << 26))
    throw std::invalid_argument("Efron-Stein tables exceed the memory cap");
  const Mask all = full_mask(n);
  std::vector<std::vector<double>> pieces(count);
  // f^{subset J} = E over the complement of J.
  for (std::size_t j = 0; j < count; ++j) pieces[j] = average_out(f.space, f.values, all & ~static_cast<Mask>(j));
  // Mobius inversion over the subset lattice.
  for (int i = 0; i < n; ++i) {
    const std::size_t h = std::size_t{1} << i;
    for (std::size_t j = 0; j < count; ++j) {
      if (!(j & h)) continue;
      auto& dst = pieces[j];
      const auto& src = pieces[j ^ h];
      for (std::size_t x = 0; x < dst.size(); ++x) dst[x] -= src[x];
    }
  }
  return ESComponents{f.space, std::move(pieces)};
}

SpaceFunction es_laplacian(const ESComponents& comp, Mask s) {
  std::vector<double> out(comp.base.size(), 0.0);
  for (std::size_t t = 0; t < comp.pieces.size(); ++t)
    if (is_subset(s, static_cast<Mask>(t)))
      for (std::size_t x = 0; x < out.size(); ++x) out[x] += comp.pieces[t][x];
  return SpaceFunction(comp.base, std::move(out));
}

SpaceFunction es_noise(const ESComponents& comp, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0,1]");
  std::vector<double> out(comp.base.size(), 0.0);
  for (std::size_t t = 0; t < comp.pieces.size(); ++t) {
    const double w = std::pow(rho, popcount(static_cast<Mask>(t)));
    for (std::size_t x = 0; x < out.size(); ++x) out[x] += w * comp.pieces[t][x];
  }
  return SpaceFunction(comp.base, std::move(out));
}

SpaceFunction resampling_noise(const SpaceFunction& f, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0,1]");
  std::vector<double> v = f.values;
  for (int t = 0; t < f.space.dimension(); ++t) {
    const auto& probs = f.space.factor(t).probs;
    for_each_fiber(f.space, t, [&](std::size_t base, std::size_t stride, std::size_t m) {
      double avg = 0.0;
      for (std::size_t a = 0; a < m; ++a) avg += probs[a] * v[base + a * stride];
      for (std::size_t a = 0; a < m; ++a) v[base + a * stride] = rho * v[base + a * stride] + (1.0 - rho) * avg;
    });
  }
  return SpaceFunction(f.space, std::move(v));
}

Report es_invariants(const ESComponents& comp, const SpaceFunction& f, double tol) {
  Report rep;
  const double scale = 1.0 + max_abs(f.values);
  const auto rec = comp.reconstruct();
  double err = 0.0;
  for (std::size_t x = 0; x < rec.size(); ++x) err = std::max(err, std::abs(rec[x] - f.values[x]));
  rep.inequality("es.reconstruction", true, err, tol * scale, 0.0);

  bool local = true;
  for (std::size_t s = 0; s < comp.pieces.size(); ++s)
    local = local && depends_only_on(comp.base, comp.pieces[s], static_cast<Mask>(s), tol);
  Outcome o;
  o.check = "es.locality";
  o.conclusion = local;
  rep.add(o);

  const auto w = comp.base.weights();
  double worst = 0.0, parseval = 0.0;
  for (std::size_t s = 0; s < comp.pieces.size(); ++s)
    for (std::size_t t = s; t < comp.pieces.size(); ++t) {
      double ip = 0.0;
      for (std::size_t x = 0; x < w.size(); ++x) ip += w[x] * comp.pieces[s][x] * comp.pieces[t][x];
      if (s == t) parseval += ip;
      else worst = std::max(worst, std::abs(ip));
    }
  rep.inequality("es.orthogonality", true, worst, tol * scale * scale, 0.0);
  rep.identity("es.parseval", f.norm2_squared(), parseval, tol);
  return rep;
}

Report verify_es_hc(const SpaceFunction& f, int q, double rho, double tol) {
  if (q < 4 || q % 2 != 0) throw std::invalid_argument("product-space bound is stated for even q > 2 only");
  if (!(rho >= 0.0 && rho <= 1.0 / (8.0 * std::pow(q, 1.5)) + 1e-15))
    throw std::invalid_argument("product-space bound needs rho <= 1/(8 q^1.5)");
  const ESComponents comp = efron_stein(f);
  const double lhs = es_noise(comp, rho).absolute_moment(q);
  const auto energies = comp.laplacian_energies();
  double rhs = 0.0;
  for (std::size_t s = 0; s < energies.size(); ++s)
    rhs += std::pow(f.space.sigma_product(static_cast<Mask>(s)), 2.0 - q) * std::pow(energies[s], q / 2.0);
  Report rep;
  rep.inequality("es_hc", true, lhs, rhs, tol,
                 {{"q", q}, {"rho", rho}, {"violates_half_assumption", f.space.violates_half_assumption()}});
  return rep;
}

Report es_single_coverage_check(const SpaceFunction& f, int q, double tol) {
  const ESComponents comp = efron_stein(f);
  const int n = f.space.dimension();
  const std::size_t sets = comp.pieces.size();
  std::size_t tuples = 1;
  for (int i = 0; i < q; ++i) tuples *= sets;
  if (tuples > 1'000'000) throw std::invalid_argument("too many set tuples for the exhaustive check");
  const auto w = f.space.weights();
  const double scale = 1.0 + std::pow(max_abs(f.values), q);

  std::size_t checked = 0;
  double worst = 0.0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(q));
  for (std::size_t code = 0; code < tuples; ++code) {
    std::size_t c = code;
    for (int i = 0; i < q; ++i) {
      idx[i] = c % sets;
      c /= sets;
    }
    bool single = false;
    for (int j = 0; j < n && !single; ++j) {
      int hits = 0;
      for (int i = 0; i < q; ++i) hits += (idx[i] >> j) & 1;
      single = hits == 1;
    }
    if (!single) continue;
    double e = 0.0;
    for (std::size_t x = 0; x < w.size(); ++x) {
      double prod = w[x];
      for (int i = 0; i < q; ++i) prod *= comp.pieces[idx[i]][x];
      e += prod;
    }
    worst = std::max(worst, std::abs(e));
    ++checked;
  }
  Report rep;
  rep.inequality("es.single_coverage", true, worst, tol * scale, 0.0, {{"q", q}, {"tuples", checked}});
  return rep;
}

Report reduction_check(const SpaceFunction& g, int q, double tol) {
  const ESComponents comp = efron_stein(g);
  const int n = g.space.dimension();
  std::vector<double> probs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) probs[i] = g.space.factor(i).p_min / 4.0;
  std::vector<double> coeffs(comp.pieces.size());
  for (std::size_t s = 0; s < coeffs.size(); ++s) coeffs[s] = std::sqrt(comp.piece_norm2_squared(static_cast<Mask>(s)));

  // Moment condition on the replacement characters: E[chi_i^j] >= sigma_i^{2-j} for integer j in (2, q].
  bool moments_ok = true;
  for (int i = 0; i < n; ++i) {
    const double pp = probs[i], sp = std::sqrt(pp * (1.0 - pp));
    const double c0 = -pp / sp, c1 = (1.0 - pp) / sp;
    for (int j = 3; j <= q; ++j) {
      const double m = (1.0 - pp) * std::pow(c0, j) + pp * std::pow(c1, j);
      if (m < std::pow(g.space.factor(i).sigma, 2.0 - j)) moments_ok = false;
    }
  }
  const MixedCubeFunction tilde = mixed_from_coefficients(std::move(probs), std::move(coeffs));
  Report rep;
  rep.inequality("reduction", moments_ok, std::pow(g.absolute_moment(q), 1.0 / q),
                 std::pow(tilde.absolute_moment(q), 1.0 / q), tol, {{"q", q}});
  return rep;
}

ProductSpace random_product_space(std::uint64_t seed, int factors, int max_support) {
  Rng rng(seed);
  std::vector<std::vector<double>> probs;
  for (int t = 0; t < factors; ++t) {
    const int m = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_support - 1))));
    std::vector<double> w(static_cast<std::size_t>(m));
    double sum = 0.0;
    for (double& x : w) sum += (x = 0.05 + rng.uniform());
    for (double& x : w) x /= sum;
    // Renormalize so the probabilities sum to 1 exactly within rounding.
    double s2 = 0.0;
    for (std::size_t a = 0; a + 1 < w.size(); ++a) s2 += w[a];
    w.back() = 1.0 - s2;
    probs.push_back(std::move(w));
  }
  return ProductSpace(probs);
}

SpaceFunction random_space_function(const ProductSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(space.size());
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return SpaceFunction(space, std::move(v));
}

}  // namespace bcube
