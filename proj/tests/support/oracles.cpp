#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

double weight(int n, double p, Mask x) {
  double w = 1.0;
  for (int i = 0; i < n; ++i) w *= (x >> i & 1) ? p : 1.0 - p;
  return w;
}

double chi(double p, Mask s, Mask x) {
  const double sigma = std::sqrt(p * (1.0 - p));
  double c = 1.0;
  for (int i = 0; s >> i; ++i)
    if (s >> i & 1) c *= ((x >> i & 1) - p) / sigma;
  return c;
}

double coefficient(const BiasedFunction& f, Mask s) {
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) acc += weight(f.n(), f.p(), x) * f[x] * chi(f.p(), s, x);
  return acc;
}

std::vector<double> all_coefficients(const BiasedFunction& f) {
  // Same sum as coefficient(), with the weights and character values tabulated once.
  const int n = f.n();
  const double p = f.p(), sigma = std::sqrt(p * (1.0 - p));
  std::vector<double> wf(f.size());
  for (Mask x = 0; x < f.size(); ++x) wf[x] = weight(n, p, x) * f[x];
  std::vector<double> pow1(n + 1), pow0(n + 1);
  for (int j = 0; j <= n; ++j) {
    pow1[j] = std::pow((1.0 - p) / sigma, j);
    pow0[j] = std::pow(-p / sigma, j);
  }
  std::vector<double> out(f.size());
  for (Mask s = 0; s < f.size(); ++s) {
    double acc = 0.0;
    const int size = std::popcount(s);
    for (Mask x = 0; x < f.size(); ++x) {
      const int ones = std::popcount(s & x);
      acc += wf[x] * pow1[ones] * pow0[size - ones];
    }
    out[s] = acc;
  }
  return out;
}

std::vector<std::vector<double>> all_coefficients(const std::vector<BiasedFunction>& fs) {
  if (fs.empty()) return {};
  const int n = fs[0].n();
  const double p = fs[0].p(), sigma = std::sqrt(p * (1.0 - p));
  const std::size_t len = std::size_t{1} << n, m = fs.size();
  for (const auto& f : fs)
    if (f.n() != n || f.p() != p) throw std::invalid_argument("batched coefficients need a common n and p");
  // values[x * m + j] = f_j(x), so the inner loop runs over functions contiguously.
  std::vector<double> values(len * m);
  for (std::size_t j = 0; j < m; ++j)
    for (Mask x = 0; x < len; ++x) values[x * m + j] = fs[j][x];
  std::vector<double> pow1(n + 1), pow0(n + 1), row(len), acc(m);
  for (int j = 0; j <= n; ++j) {
    pow1[j] = std::pow((1.0 - p) / sigma, j);
    pow0[j] = std::pow(-p / sigma, j);
  }
  std::vector<double> w(len);
  for (Mask x = 0; x < len; ++x) w[x] = weight(n, p, x);
  std::vector<std::vector<double>> out(m, std::vector<double>(len));
  for (Mask s = 0; s < len; ++s) {
    const int size = std::popcount(s);
    for (Mask x = 0; x < len; ++x) {
      const int ones = std::popcount(s & x);
      row[x] = w[x] * pow1[ones] * pow0[size - ones];
    }
    std::fill(acc.begin(), acc.end(), 0.0);
    for (Mask x = 0; x < len; ++x) {
      const double r = row[x];
      const double* v = &values[x * m];
      for (std::size_t j = 0; j < m; ++j) acc[j] += r * v[j];
    }
    for (std::size_t j = 0; j < m; ++j) out[j][s] = acc[j];
  }
  return out;
}

double expectation(const BiasedFunction& f) {
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) acc += weight(f.n(), f.p(), x) * f[x];
  return acc;
}

double norm_power(const BiasedFunction& f, double q) {
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) acc += weight(f.n(), f.p(), x) * std::pow(std::abs(f[x]), q);
  return acc;
}

double generalized_influence(const BiasedFunction& f, Mask s) {
  double acc = 0.0;
  for (Mask x = 0; x < f.size(); ++x) {
    if (x & s) continue;  // the derivative does not see the coordinates in S
    double d = 0.0;
    for (Mask t = 0; t < f.size(); ++t) {
      if ((t & ~s) != 0) continue;
      const int sign = (std::popcount(s) - std::popcount(t)) % 2 == 0 ? 1 : -1;
      d += sign * f[x | t];
    }
    double w = 1.0;
    for (int i = 0; i < f.n(); ++i)
      if (!(s >> i & 1)) w *= (x >> i & 1) ? f.p() : 1.0 - f.p();
    acc += w * d * d;
  }
  return acc;
}

double coordinate_influence(const BiasedFunction& f, int i) {
  double acc = 0.0;
  const Mask bit = Mask{1} << i;
  for (Mask x = 0; x < f.size(); ++x) {
    const double d = f[x | bit] - f[x & ~bit];
    acc += weight(f.n(), f.p(), x) * d * d;
  }
  return acc;
}

std::vector<double> noise(const BiasedFunction& f, double rho) {
  const int n = f.n();
  const double p = f.p();
  std::vector<double> out(f.size(), 0.0);
  for (Mask x = 0; x < f.size(); ++x)
    for (Mask y = 0; y < f.size(); ++y) {
      double k = 1.0;
      for (int i = 0; i < n; ++i) {
        const bool yi = y >> i & 1, xi = x >> i & 1;
        k *= rho * (yi == xi ? 1.0 : 0.0) + (1.0 - rho) * (yi ? p : 1.0 - p);
      }
      out[x] += k * f[y];
    }
  return out;
}

namespace {

// P(lower bit | upper bit) and P(upper bit | lower bit) for one coordinate of D(p,q).
double lower_given_upper(double p, double q, bool lower, bool upper) {
  if (!upper) return lower ? 0.0 : 1.0;
  return lower ? p / q : 1.0 - p / q;
}

double upper_given_lower(double p, double q, bool lower, bool upper) {
  if (lower) return upper ? 1.0 : 0.0;
  const double rise = (q - p) / (1.0 - p);
  return upper ? rise : 1.0 - rise;
}

}  // namespace

std::vector<double> directed_up_matrix(int n, double p, double q) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> m(dim * dim);
  for (Mask y = 0; y < dim; ++y)
    for (Mask x = 0; x < dim; ++x) {
      double v = 1.0;
      for (int i = 0; i < n; ++i) v *= lower_given_upper(p, q, x >> i & 1, y >> i & 1);
      m[y * dim + x] = v;
    }
  return m;
}

std::vector<double> directed_down_matrix(int n, double p, double q) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> m(dim * dim);
  for (Mask x = 0; x < dim; ++x)
    for (Mask y = 0; y < dim; ++y) {
      double v = 1.0;
      for (int i = 0; i < n; ++i) v *= upper_given_lower(p, q, x >> i & 1, y >> i & 1);
      m[x * dim + y] = v;
    }
  return m;
}

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, std::size_t dim) {
  std::vector<double> c(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += a[i * dim + k] * b[k * dim + j];
  return c;
}

namespace {

std::vector<std::uint64_t> edges_of(const bcube::Hypergraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

// Each edge padded to size k with its own fresh vertices.
std::pair<int, std::vector<std::uint64_t>> padded(const bcube::Hypergraph& g, int k) {
  int next = g.vertex_count();
  std::vector<std::uint64_t> out;
  for (std::uint64_t e : edges_of(g)) {
    for (int extra = std::popcount(e); extra < k; ++extra) e |= std::uint64_t{1} << next++;
    out.push_back(e);
  }
  return {next, out};
}

}  // namespace

int transversal(const bcube::Hypergraph& g) {
  const int v = g.vertex_count();
  int best = v;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << v); ++t) {
    bool ok = true;
    for (std::uint64_t e : edges_of(g)) ok = ok && (e & t) != 0;
    if (ok) best = std::min(best, std::popcount(t));
  }
  return g.empty() ? 0 : best;
}

int crosscut(const bcube::Hypergraph& g, int k) {
  const auto [v, edges] = padded(g, k);
  if (v > 24) throw std::invalid_argument("crosscut oracle limited to 24 vertices");
  int best = -1;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << v); ++t) {
    bool ok = true;
    for (std::uint64_t e : edges) ok = ok && std::popcount(e & t) == 1;
    if (ok && (best < 0 || std::popcount(t) < best)) best = std::popcount(t);
  }
  return g.empty() ? 0 : best;
}

namespace {

// Calls visit(image of every edge) for each injection of the used vertices of h into [n].
void for_each_copy(const std::vector<std::uint64_t>& h_edges, int h_vertices, int n,
                   const std::function<void(const std::vector<Mask>&)>& visit) {
  std::uint64_t used = 0;
  for (std::uint64_t e : h_edges) used |= e;
  std::vector<int> verts;
  for (int v = 0; v < h_vertices; ++v)
    if (used >> v & 1) verts.push_back(v);
  std::vector<int> image(static_cast<std::size_t>(h_vertices), -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == verts.size()) {
      std::vector<Mask> mapped;
      for (std::uint64_t e : h_edges) {
        Mask m = 0;
        for (int v = 0; v < h_vertices; ++v)
          if (e >> v & 1) m |= Mask{1} << image[static_cast<std::size_t>(v)];
        mapped.push_back(m);
      }
      visit(mapped);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (taken[static_cast<std::size_t>(t)]) continue;
      taken[static_cast<std::size_t>(t)] = true;
      image[static_cast<std::size_t>(verts[idx])] = t;
      place(idx + 1);
      taken[static_cast<std::size_t>(t)] = false;
    }
  };
  place(0);
}

}  // namespace

bool contains_copy(const std::vector<Mask>& family, int n, const bcube::Hypergraph& h) {
  const std::set<Mask> members(family.begin(), family.end());
  bool found = false;
  for_each_copy(edges_of(h), h.vertex_count(), n, [&](const std::vector<Mask>& mapped) {
    if (found) return;
    found = std::all_of(mapped.begin(), mapped.end(), [&](Mask m) { return members.count(m) > 0; });
  });
  return found;
}

int turan_brute(const bcube::Hypergraph& g, int k, int n) {
  std::vector<Mask> candidates;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (std::popcount(m) == k) candidates.push_back(m);
  if (candidates.size() > 20) throw std::invalid_argument("turan oracle limited to 20 candidate sets");
  const auto [hv, h_edges] = padded(g, k);
  // Every copy as a bitmask over candidate indices.
  std::set<std::uint32_t> copies;
  for_each_copy(h_edges, hv, n, [&](const std::vector<Mask>& mapped) {
    std::uint32_t c = 0;
    for (Mask m : mapped) {
      const auto it = std::find(candidates.begin(), candidates.end(), m);
      c |= std::uint32_t{1} << (it - candidates.begin());
    }
    copies.insert(c);
  });
  int best = 0;
  for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << candidates.size()); ++fam) {
    if (std::popcount(fam) <= best) continue;
    bool free = true;
    for (std::uint32_t c : copies)
      if ((c & fam) == c) {
        free = false;
        break;
      }
    if (free) best = std::popcount(fam);
  }
  return best;
}

std::vector<Mask> shadow(const std::vector<Mask>& edges, int n, int ell) {
  std::set<Mask> out;
  for (Mask b = 0; b < (Mask{1} << n); ++b) {
    if (std::popcount(b) != ell) continue;
    for (Mask a : edges)
      if ((b & ~a) == 0) {
        out.insert(b);
        break;
      }
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
