#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hwp/digraph.hpp"

namespace hwp {

/// Unordered pair stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge of(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
  static UndirectedGraph from_edges(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  int order_ = 0;
  std::vector<Edge> edges_;  // sorted
};

/// A spanning edge subset: a perfect matching (cycle_length 2) or a union of
/// cycles of length cycle_length.
struct UndirectedFactor {
  int cycle_length = 2;
  std::vector<Edge> edges;  // sorted
};

struct UndirectedFactorization {
  UndirectedGraph host;
  std::vector<UndirectedFactor> factors;
};

UndirectedGraph complete_graph(int n);

/// K_{x,x} with sides [0, x) and [x, 2x).
UndirectedGraph complete_bipartite_graph(int x);

/// K_(x:y) with parts [j·x, (j+1)·x).
UndirectedGraph complete_equipartite_graph(int x, int y);

/// Empty string when the factorization is valid, else the first problem.
std::string check_undirected(const UndirectedFactorization& f);

/// Cycles of a 2-regular factor, each starting at its smallest vertex and
/// continuing to its smaller neighbour.
std::vector<std::vector<Vertex>> factor_cycles(const UndirectedFactor& f, int order);

/// Edges of the closed walk through `cycle`.
std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle);

UndirectedFactor make_undirected_factor(int cycle_length, std::vector<Edge> edges);

}  // namespace hwp
