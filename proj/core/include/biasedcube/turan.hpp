#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biasedcube/hypergraph.hpp"
#include "biasedcube/set_family.hpp"

namespace bcube {

// Injection phi : V(H) -> [n] with phi(edge i) in families[i]; a single family serves every edge.
// nullopt certifies that no such injection exists.
std::optional<std::vector<int>> contains_cross(const std::vector<SetFamily>& families, const Hypergraph& h);

struct TuranResult {
  int value = 0;              // ex(n, G^+(k))
  std::size_t candidates = 0; // C(n,k)
  std::size_t copies = 0;     // distinct copies of G^+(k) in the complete k-graph
  SetFamily witness;          // one extremal G^+-free family
  int incumbent = 0;          // best construction size before the search
  std::uint64_t nodes = 0;
};

struct TuranBudget {
  double max_injections = 2e7;
  std::uint64_t max_nodes = 50'000'000;
};

// Exact Turán number of the k-expansion of G inside ([n] choose k).
TuranResult turan_exact(const Hypergraph& g, int k, int n, const TuranBudget& budget = {});

}  // namespace bcube
