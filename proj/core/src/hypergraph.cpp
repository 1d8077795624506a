#include "biasedcube/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "biasedcube/budget.hpp"

namespace bcube {

namespace {

constexpr int kMaxVertices = 64;

VertexSet bit(int v) { return VertexSet{1} << v; }

int vertex_popcount(VertexSet s) { return std::popcount(s); }

std::vector<VertexSet> normalized_edges(int vertex_count, std::vector<VertexSet> edges) {
  for (VertexSet e : edges) {
    if (e == 0) throw std::invalid_argument("hypergraph edges must be nonempty");
    if (vertex_count < kMaxVertices && (e >> vertex_count) != 0)
      throw std::invalid_argument("hypergraph edge uses a vertex outside the vertex set");
  }
  std::vector<VertexSet> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("hypergraph has a repeated edge");
  return edges;
}

}  // namespace

std::vector<int> vertex_list(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Hypergraph::Hypergraph(int vertex_count, std::vector<VertexSet> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) throw std::invalid_argument("hypergraph vertex count out of [0,64]");
  edges_ = normalized_edges(vertex_count, std::move(edges));
}

Hypergraph Hypergraph::matching(int s, int r) {
  std::vector<VertexSet> e;
  for (int i = 0; i < s; ++i) e.push_back(((VertexSet{1} << r) - 1) << (i * r));
  return Hypergraph(s * r, std::move(e));
}

Hypergraph Hypergraph::path(int edges) {
  std::vector<VertexSet> e;
  for (int i = 0; i < edges; ++i) e.push_back(bit(i) | bit(i + 1));
  return Hypergraph(edges + 1, std::move(e));
}

Hypergraph Hypergraph::cycle(int edges) {
  if (edges < 3) throw std::invalid_argument("a cycle needs at least 3 edges");
  std::vector<VertexSet> e;
  for (int i = 0; i < edges; ++i) e.push_back(bit(i) | bit((i + 1) % edges));
  return Hypergraph(edges, std::move(e));
}

Hypergraph Hypergraph::complete_graph(int vertices) {
  std::vector<VertexSet> e;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) e.push_back(bit(i) | bit(j));
  return Hypergraph(vertices, std::move(e));
}

Hypergraph Hypergraph::single_edge(int r) { return Hypergraph(r, {(VertexSet{1} << r) - 1}); }

int Hypergraph::uniformity() const {
  if (edges_.empty()) return -1;
  const int r = vertex_popcount(edges_[0]);
  for (VertexSet e : edges_)
    if (vertex_popcount(e) != r) return -1;
  return r;
}

int Hypergraph::max_edge_size() const {
  int r = 0;
  for (VertexSet e : edges_) r = std::max(r, vertex_popcount(e));
  return r;
}

int Hypergraph::degree(int v) const {
  int d = 0;
  for (VertexSet e : edges_)
    if (e & bit(v)) ++d;
  return d;
}

int Hypergraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
  return d;
}

Hypergraph Hypergraph::without_edges(const std::vector<int>& indices) const {
  std::vector<VertexSet> e;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (std::find(indices.begin(), indices.end(), static_cast<int>(i)) == indices.end()) e.push_back(edges_[i]);
  return Hypergraph(vertex_count_, std::move(e));
}

Hypergraph Hypergraph::without_vertex(int x) const {
  std::vector<VertexSet> e;
  for (VertexSet edge : edges_)
    if (!(edge & bit(x))) e.push_back(edge);
  return Hypergraph(vertex_count_, std::move(e));
}

Hypergraph expand(const Hypergraph& g, int k) {
  if (k < g.max_edge_size()) throw std::invalid_argument("expansion uniformity k is smaller than an edge of G");
  int next = g.vertex_count();
  int total = next;
  for (VertexSet e : g.edges()) total += k - vertex_popcount(e);
  if (total > kMaxVertices) throw std::invalid_argument("expansion needs more than 64 vertices");
  std::vector<VertexSet> out;
  for (VertexSet e : g.edges()) {
    VertexSet grown = e;
    for (int slot = vertex_popcount(e); slot < k; ++slot) grown |= bit(next++);
    out.push_back(grown);
  }
  return Hypergraph(total, std::move(out));
}

int transversal_number(const Hypergraph& g, VertexSet* witness) {
  int best = static_cast<int>(g.edge_count()) + 1;
  VertexSet best_set = 0;
  std::function<void(VertexSet, int)> rec = [&](VertexSet chosen, int size) {
    if (size >= best) return;
    const VertexSet* open = nullptr;
    for (const VertexSet& e : g.edges())
      if (!(e & chosen) && (open == nullptr || vertex_popcount(e) < vertex_popcount(*open))) open = &e;
    if (open == nullptr) {
      best = size;
      best_set = chosen;
      return;
    }
    if (size + 1 >= best) return;
    for (int v : vertex_list(*open)) rec(chosen | bit(v), size + 1);
  };
  rec(0, 0);
  if (witness) *witness = best_set;
  return best;
}

int crosscut_number(const Hypergraph& g, VertexSet* witness) {
  if (g.empty()) {
    if (witness) *witness = 0;
    return 0;
  }
  const Hypergraph h = expand(g, g.max_edge_size() + 1);
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<VertexSet> incident(static_cast<std::size_t>(h.vertex_count()), 0);  // bitset of edge indices
  for (int i = 0; i < m; ++i)
    for (int v : vertex_list(edges[i])) incident[v] |= VertexSet{1} << i;

  int best = m + 1;
  VertexSet best_set = 0;
  std::function<void(VertexSet, VertexSet, int)> rec = [&](VertexSet chosen, VertexSet hit, int size) {
    if (size >= best) return;
    int open = -1, open_options = 1 << 30;
    std::vector<int> options;
    for (int i = 0; i < m; ++i) {
      if (hit >> i & 1) continue;
      int count = 0;
      bool private_seen = false;
      for (int v : vertex_list(edges[i])) {
        if (incident[v] & hit) continue;
        // Degree-one vertices of an edge are interchangeable: keep one.
        if (vertex_popcount(incident[v]) == 1) {
          if (private_seen) continue;
          private_seen = true;
        }
        ++count;
      }
      if (count < open_options) {
        open_options = count;
        open = i;
      }
    }
    if (open < 0) {
      best = size;
      best_set = chosen;
      return;
    }
    if (size + 1 >= best) return;
    bool private_seen = false;
    for (int v : vertex_list(edges[open])) {
      if (incident[v] & hit) continue;
      if (vertex_popcount(incident[v]) == 1) {
        if (private_seen) continue;
        private_seen = true;
      }
      rec(chosen | bit(v), hit | incident[v], size + 1);
    }
  };
  rec(0, 0, 0);
  if (witness) *witness = best_set;
  return best;
}

CoverNumbers cover_numbers(const Hypergraph& g, int k) {
  if (g.empty()) throw std::invalid_argument("cover numbers need a hypergraph with at least one edge");
  CoverNumbers out;
  out.tau = transversal_number(g, &out.tau_witness);
  const int r = g.max_edge_size();
  if (k < 0) k = r + 1;
  if (k < r + 1) throw std::invalid_argument("crosscut needs expansion uniformity k >= r+1");
  out.expansion_uniformity = k;
  if (k == r + 1) {
    out.cc = crosscut_number(g, &out.cc_witness);
  } else {
    // Same search on the wider expansion: pad G so that its own r+1 expansion is G^+(k).
    const Hypergraph wide = expand(g, k - 1);
    std::vector<VertexSet> e = wide.edges();
    out.cc = crosscut_number(Hypergraph(wide.vertex_count(), std::move(e)), &out.cc_witness);
  }
  return out;
}

int matching_number(const Hypergraph& g) {
  const auto& edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, VertexSet, int)> rec = [&](std::size_t i, VertexSet used, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j)
      if (!(edges[j] & used)) rec(j + 1, used | edges[j], size + 1);
  };
  rec(0, 0, 0);
  return best;
}

bool is_critical(const Hypergraph& g, int* witness_edge) {
  const int tau = transversal_number(g), cc = crosscut_number(g);
  if (tau != cc) return false;
  for (int i = 0; i < static_cast<int>(g.edge_count()); ++i) {
    const Hypergraph h = g.without_edges({i});
    const int t = transversal_number(h), c = crosscut_number(h);
    if (t == c && t < tau) {
      if (witness_edge) *witness_edge = i;
      return true;
    }
  }
  return false;
}

bool is_degree_critical(const Hypergraph& g, int a1) {
  const int tau = transversal_number(g), cc = crosscut_number(g);
  if (tau != cc) return false;
  bool drop = false;
  for (int x = 0; x < g.vertex_count(); ++x) {
    const int d = g.degree(x);
    if (d == 0) continue;
    const Hypergraph h = g.without_vertex(x);
    if (d <= a1 && crosscut_number(h) < cc) drop = true;
    if (d < a1 && transversal_number(h) != tau) return false;
  }
  return drop;
}

bool is_matching_critical(const Hypergraph& g, int a2) {
  const int tau = transversal_number(g), cc = crosscut_number(g);
  if (tau != cc) return false;
  const auto& edges = g.edges();
  bool drop = false, stable = true;
  std::vector<int> chosen;
  std::function<void(std::size_t, VertexSet)> rec = [&](std::size_t i, VertexSet used) {
    if (!stable) return;
    const int size = static_cast<int>(chosen.size());
    if (size > 0) {
      const Hypergraph h = g.without_edges(chosen);
      if (size <= a2 && crosscut_number(h) < cc) drop = true;
      if (size < a2 && transversal_number(h) != tau) stable = false;
    }
    if (size >= a2) return;
    for (std::size_t j = i; j < edges.size(); ++j)
      if (!(edges[j] & used)) {
        chosen.push_back(static_cast<int>(j));
        rec(j + 1, used | edges[j]);
        chosen.pop_back();
      }
  };
  rec(0, 0);
  // The empty matching is always allowed in the stability clause and changes nothing.
  return drop && stable;
}

Hypergraph extremal_bounded_graph(int a1, int a2) {
  if (a1 < 1 || a2 < 1) throw std::invalid_argument("degree and matching bounds must be >= 1");
  const int max_deg = a1 - 1, max_match = a2 - 1;
  if (max_deg == 0 || max_match == 0) return Hypergraph(0, {});
  // Every edge meets a maximum matching, so at most 2 * max_match * max_deg vertices are non-isolated.
  const int v = 2 * max_match * max_deg;
  if (v > 8) throw BudgetExceeded("bounded-degree, bounded-matching graph search limited to 8 vertices");
  std::vector<VertexSet> pairs;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) pairs.push_back(bit(i) | bit(j));

  std::vector<VertexSet> current, best;
  std::vector<int> deg(static_cast<std::size_t>(v), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (current.size() > best.size()) best = current;
    if (current.size() + (pairs.size() - i) <= best.size()) return;
    for (std::size_t j = i; j < pairs.size(); ++j) {
      const auto ends = vertex_list(pairs[j]);
      if (deg[ends[0]] >= max_deg || deg[ends[1]] >= max_deg) continue;
      current.push_back(pairs[j]);
      if (matching_number(Hypergraph(v, current)) <= max_match) {
        ++deg[ends[0]];
        ++deg[ends[1]];
        rec(j + 1);
        --deg[ends[0]];
        --deg[ends[1]];
      }
      current.pop_back();
    }
  };
  rec(0);
  return Hypergraph(v, best);
}

SetFamily fjs_family(const Hypergraph& g, int a1, int a2, int n, int k) {
  const int cc = crosscut_number(g);
  const Hypergraph f = extremal_bounded_graph(a1, a2);
  const int singles = std::max(cc - 1, 0);
  if (singles + f.vertex_count() > n) throw std::invalid_argument("ground set too small for the construction");
  std::vector<Mask> generators;
  for (int i = 0; i < singles; ++i) generators.push_back(Mask{1} << i);
  for (VertexSet e : f.edges()) generators.push_back(static_cast<Mask>(e << singles));
  return SetFamily::generated(n, k, generators);
}

Report criticality_classify(const Hypergraph& g) {
  if (g.vertex_count() > 16 || g.edge_count() > 16)
    throw BudgetExceeded("criticality classification limited to 16 vertices and 16 edges");
  Report rep;
  const int tau = transversal_number(g), cc = crosscut_number(g);
  rep.inequality("cover_numbers.order", true, tau, cc, 0.0);
  int witness = -1;
  const bool critical = is_critical(g, &witness);

  std::vector<int> degree_ok, matching_ok;
  const int nu = matching_number(g);
  for (int a1 = 1; a1 <= g.max_degree() + 1; ++a1)
    if (is_degree_critical(g, a1)) degree_ok.push_back(a1);
  for (int a2 = 1; a2 <= nu + 1; ++a2)
    if (is_matching_critical(g, a2)) matching_ok.push_back(a2);
  nlohmann::json pairs = nlohmann::json::array();
  for (int a1 : degree_ok)
    for (int a2 : matching_ok) pairs.push_back({a1, a2});

  nlohmann::json bounded = nullptr;
  if (!degree_ok.empty() && !matching_ok.empty()) {
    try {
      const Hypergraph f = extremal_bounded_graph(degree_ok.front(), matching_ok.front());
      nlohmann::json edges = nlohmann::json::array();
      for (VertexSet e : f.edges()) edges.push_back(vertex_list(e));
      bounded = {{"a1", degree_ok.front()}, {"a2", matching_ok.front()}, {"edges", edges}};
    } catch (const BudgetExceeded& e) {
      rep.note(e.what());
    }
  }
  rep.data = {{"tau", tau},
              {"cc", cc},
              {"critical", critical},
              {"critical_edge", witness >= 0 ? nlohmann::json(vertex_list(g.edges()[witness])) : nlohmann::json(nullptr)},
              {"matching_number", nu},
              {"degree_critical", degree_ok},
              {"matching_critical", matching_ok},
              {"critical_pairs", pairs},
              {"bounded_graph", bounded}};
  if (g.edge_count() <= 1) rep.note("edge deletion reaches the empty hypergraph, taken to have tau = cc = 0");
  return rep;
}

}  // namespace bcube
