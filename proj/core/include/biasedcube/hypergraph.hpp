#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biasedcube/report.hpp"
#include "biasedcube/set_family.hpp"

namespace bcube {

using VertexSet = std::uint64_t;

// Vertices are 0..vertex_count-1; edges are distinct nonempty vertex sets, possibly of mixed size.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<VertexSet> edges);

  static Hypergraph matching(int s, int r);
  // Path and cycle with `edges` graph edges.
  static Hypergraph path(int edges);
  static Hypergraph cycle(int edges);
  static Hypergraph complete_graph(int vertices);
  static Hypergraph single_edge(int r);

  int vertex_count() const { return vertex_count_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  // Common edge size, or -1 when sizes differ (or there are no edges).
  int uniformity() const;
  int max_edge_size() const;
  int degree(int v) const;
  int max_degree() const;

  Hypergraph without_edges(const std::vector<int>& indices) const;
  // G - x: drops every edge through x (the vertex itself stays, isolated).
  Hypergraph without_vertex(int x) const;

 private:
  int vertex_count_;
  std::vector<VertexSet> edges_;
};

// G^+(k): each edge gets k - |e| fresh vertices, numbered after V(G) edge by edge, slot by slot.
Hypergraph expand(const Hypergraph& g, int k);

// Minimum vertex set meeting every edge; the empty hypergraph has τ = 0.
int transversal_number(const Hypergraph& g, VertexSet* witness = nullptr);
// Minimum set meeting every edge of G^+(r+1) exactly once; the empty hypergraph has cc = 0.
int crosscut_number(const Hypergraph& g, VertexSet* witness = nullptr);

struct CoverNumbers {
  int tau = 0;
  int cc = 0;
  VertexSet tau_witness = 0;
  VertexSet cc_witness = 0;  // in the vertex labelling of the expansion
  int expansion_uniformity = 0;
};

// `k` selects the expansion used for the crosscut; any k >= r+1 gives the same value, default r+1.
CoverNumbers cover_numbers(const Hypergraph& g, int k = -1);

int matching_number(const Hypergraph& g);

bool is_critical(const Hypergraph& g, int* witness_edge = nullptr);
bool is_degree_critical(const Hypergraph& g, int a1);
bool is_matching_critical(const Hypergraph& g, int a2);

// Edge-maximal graph with every degree < a1 and every matching smaller than a2.
Hypergraph extremal_bounded_graph(int a1, int a2);
// G_{n,k}(T) with T = cc(G)-1 singletons plus a disjoint copy of the bounded graph above.
SetFamily fjs_family(const Hypergraph& g, int a1, int a2, int n, int k);

Report criticality_classify(const Hypergraph& g);

std::vector<int> vertex_list(VertexSet s);

}  // namespace bcube
