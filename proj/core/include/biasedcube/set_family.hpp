#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "biasedcube/biased_function.hpp"
#include "biasedcube/bits.hpp"
#include "biasedcube/report.hpp"

namespace bcube {

inline constexpr int kMaxGroundSet = 24;

// A k-uniform family on the ground set {0..n-1}; edges are kept sorted and distinct.
class SetFamily {
 public:
  SetFamily(int n, int k, std::vector<Mask> edges = {});

  static SetFamily complete(int n, int k);
  // All k-sets meeting `j`.
  static SetFamily star(int n, int k, Mask j);
  // All k-sets containing at least one member of `generators`.
  static SetFamily generated(int n, int k, const std::vector<Mask>& generators);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Mask>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Mask a) const;
  // Uniform measure |F| / C(n,k).
  double measure() const;
  bool operator==(const SetFamily&) const = default;

 private:
  int n_;
  int k_;
  std::vector<Mask> edges_;
};

// F^B_J = {A \ J : A in F, A ∩ J = B}, re-indexed onto the n - |J| coordinates outside J.
SetFamily link(const SetFamily& f, Mask j, Mask b);
// Uniform measure of F^B_J without materializing it.
double link_measure(const SetFamily& f, Mask j, Mask b);

SetFamily shadow(const SetFamily& f, int ell);
// {A in ([n] choose r) : μ(F^A_A) >= c}.
SetFamily fat_shadow(const SetFamily& f, int r, double c);

Mask compress_set(Mask a, int i, int j);
// Shift j towards i: C_{i,j}(F).
SetFamily compress(const SetFamily& f, int i, int j);
bool is_compressed(const SetFamily& f, int i, int j);

// Indicator of the family, or of its up-closure, as a function under μ_p.
BiasedFunction indicator(const SetFamily& f, double p);
BiasedFunction up_closure(const SetFamily& f, double p);

// μ(∂^ℓ A) >= μ(A)^{ℓ/k} for every 1 <= ℓ <= k.
Report kruskal_katona_check(const SetFamily& f, double tol = 1e-9);
// μ_p(A^↑) >= μ(A)/4 at p = k/n.
Report up_closure_measure_check(const SetFamily& f, double tol = 1e-9);

struct PseudorandomnessParams {
  int a = 1;          // sizes |J| <= a for the uncapturable and global tests
  double eps = 0.1;
  int r = 1;          // sizes |J| <= r for the μ_p restriction test
  double delta = 0.1;
  double p = -1.0;    // μ_p for the restriction test; negative means k/n
};

// Exhaustive uncapturability / globalness / μ_p-restriction tests with witnesses.
Report pseudorandomness_report(const SetFamily& f, const PseudorandomnessParams& params);
// (1, ε)-global with ε = μ(F)n/2ak implies (a, μ(F)/2)-uncapturable.
Report global_uncapturable_check(const SetFamily& f, int a, double tol = 1e-9);

struct JuntaSplit {
  Mask j = 0;
  SetFamily residual;  // F^∅_J on the n - |J| remaining coordinates
  Report report;
};

// High-degree coordinates J = {i : μ(F^i_i) > beta} and the globalness of what is left.
JuntaSplit junta_extract(const SetFamily& f, double beta, double tol = 1e-9);

SetFamily random_family(int n, int k, double density, std::uint64_t seed);

}  // namespace bcube
