#include "biasedcube/turan.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "biasedcube/budget.hpp"

namespace bcube {

std::optional<std::vector<int>> contains_cross(const std::vector<SetFamily>& families, const Hypergraph& h) {
  const auto& edges = h.edges();
  if (families.empty()) throw std::invalid_argument("cross containment needs at least one family");
  if (families.size() != 1 && families.size() != edges.size())
    throw std::invalid_argument("need one family per edge of H, or a single shared family");
  const int n = families[0].n();
  for (const auto& f : families)
    if (f.n() != n) throw std::invalid_argument("all families must live on the same ground set");
  auto family_of = [&](std::size_t i) -> const SetFamily& { return families.size() == 1 ? families[0] : families[i]; };
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (std::popcount(edges[i]) != family_of(i).k())
      throw std::invalid_argument("edge " + std::to_string(i) + " of H has size " + std::to_string(std::popcount(edges[i])) +
                                  " but its family is " + std::to_string(family_of(i).k()) + "-uniform");
  if (h.vertex_count() > n) return std::nullopt;

  std::vector<int> phi(static_cast<std::size_t>(h.vertex_count()), -1);
  std::vector<char> done(edges.size(), 0);
  Mask used = 0;

  std::function<bool(std::size_t)> rec = [&](std::size_t placed) -> bool {
    if (placed == edges.size()) return true;
    // Next edge: the one with the most vertices already mapped.
    std::size_t pick = edges.size();
    int most = -1;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (done[i]) continue;
      int mapped = 0;
      for (int v : vertex_list(edges[i]))
        if (phi[v] >= 0) ++mapped;
      if (mapped > most) {
        most = mapped;
        pick = i;
      }
    }
    Mask fixed = 0;
    std::vector<int> open;
    for (int v : vertex_list(edges[pick])) {
      if (phi[v] >= 0)
        fixed |= Mask{1} << phi[v];
      else
        open.push_back(v);
    }
    done[pick] = 1;
    for (Mask a : family_of(pick).edges()) {
      if (!is_subset(fixed, a)) continue;
      const Mask fresh = a & ~fixed;
      if (fresh & used) continue;
      std::vector<int> targets = mask_to_indices(fresh);
      do {
        for (std::size_t t = 0; t < open.size(); ++t) phi[open[t]] = targets[t];
        used |= fresh;
        if (rec(placed + 1)) return true;
        used &= ~fresh;
      } while (std::next_permutation(targets.begin(), targets.end()));
      for (int v : open) phi[v] = -1;
    }
    done[pick] = 0;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  // Isolated vertices of H take any unused points.
  int next = 0;
  for (int& image : phi) {
    if (image >= 0) continue;
    while (used >> next & 1) ++next;
    image = next;
    used |= Mask{1} << next;
  }
  return phi;
}

namespace {

using CopySet = std::uint64_t;

std::vector<CopySet> enumerate_copies(const Hypergraph& h, int n, const std::unordered_map<Mask, int>& index,
                                      const TuranBudget& budget) {
  std::vector<CopySet> out;
  if (h.empty() || h.vertex_count() > n) return out;
  VertexSet active = 0;
  for (VertexSet e : h.edges()) active |= e;
  const std::vector<int> verts = vertex_list(active);
  double injections = 1.0;
  for (std::size_t i = 0; i < verts.size(); ++i) injections *= n - static_cast<double>(i);
  if (injections > budget.max_injections)
    throw BudgetExceeded("copy enumeration needs " + std::to_string(injections) + " injections");

  std::unordered_set<CopySet> seen;
  std::vector<int> phi(static_cast<std::size_t>(h.vertex_count()), -1);
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t depth, Mask used) {
    if (depth == verts.size()) {
      CopySet copy = 0;
      for (VertexSet e : h.edges()) {
        Mask image = 0;
        for (int v : vertex_list(e)) image |= Mask{1} << phi[v];
        copy |= CopySet{1} << index.at(image);
      }
      if (seen.insert(copy).second) out.push_back(copy);
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used >> x & 1) continue;
      phi[verts[depth]] = x;
      rec(depth + 1, used | Mask{1} << x);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool family_is_free(CopySet family, const std::vector<CopySet>& copies) {
  for (CopySet c : copies)
    if ((c & family) == c) return false;
  return true;
}

}  // namespace

TuranResult turan_exact(const Hypergraph& g, int k, int n, const TuranBudget& budget) {
  if (k < 1 || n < k) throw std::invalid_argument("Turán search needs 1 <= k <= n");
  std::vector<Mask> sets;
  for_each_k_subset(n, k, [&](Mask a) { sets.push_back(a); });
  if (sets.size() > 64) throw BudgetExceeded("Turán search limited to C(n,k) <= 64 candidate sets");
  std::unordered_map<Mask, int> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = static_cast<int>(i);
  const int total = static_cast<int>(sets.size());
  const CopySet all = total == 64 ? ~CopySet{0} : (CopySet{1} << total) - 1;

  const Hypergraph h = g.empty() ? g : expand(g, k);
  const std::vector<CopySet> copies = enumerate_copies(h, n, index, budget);

  TuranResult out{0, sets.size(), copies.size(), SetFamily(n, k), 0, 0};

  // Incumbents: stars on the first j points, for every j, whenever they avoid every copy.
  CopySet best_family = 0;
  int best = 0;
  for (int j = 0; j <= n; ++j) {
    CopySet star = 0;
    for (int i = 0; i < total; ++i)
      if (sets[i] & full_mask(j)) star |= CopySet{1} << i;
    if (family_is_free(star, copies) && std::popcount(star) > best) {
      best = std::popcount(star);
      best_family = star;
    }
  }
  if (copies.empty()) {
    best_family = all;
    best = total;
  }
  out.incumbent = best;

  // Minimum hitting set of the copies; its complement is an extremal family.
  int best_hit = total - best;
  CopySet best_removed = all & ~best_family;
  std::function<void(CopySet, int)> rec = [&](CopySet removed, int size) {
    if (++out.nodes > budget.max_nodes) throw BudgetExceeded("Turán branch and bound exceeded its node budget");
    // Lower bound: greedily packed, pairwise disjoint, still-unhit copies.
    int bound = 0;
    CopySet packed = 0;
    CopySet branch = 0;
    int branch_size = 65;
    for (CopySet c : copies) {
      if (c & removed) continue;
      const int sz = std::popcount(c);
      if (sz < branch_size) {
        branch_size = sz;
        branch = c;
      }
      if (!(c & packed)) {
        packed |= c;
        ++bound;
      }
    }
    if (branch == 0) {
      if (size < best_hit) {
        best_hit = size;
        best_removed = removed;
      }
      return;
    }
    if (size + bound >= best_hit) return;
    for (CopySet rest = branch; rest; rest &= rest - 1) rec(removed | (rest & (~rest + 1)), size + 1);
  };
  if (!copies.empty()) rec(0, 0);

  std::vector<Mask> witness;
  const CopySet kept = all & ~best_removed;
  for (int i = 0; i < total; ++i)
    if (kept >> i & 1) witness.push_back(sets[i]);
  out.value = total - best_hit;
  out.witness = SetFamily(n, k, std::move(witness));
  return out;
}

}  // namespace bcube
