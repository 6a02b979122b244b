#include "hwp/undirected.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hwp {

UndirectedGraph UndirectedGraph::from_edges(int order, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.a == e.b) throw GraphError(fmt::format("loop at vertex {}", e.a));
    e = Edge::of(e.a, e.b);
    if (e.a < 0 || e.b >= order)
      throw GraphError(fmt::format("edge {{{},{}}} outside [0, {})", e.a, e.b, order));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw GraphError(fmt::format("duplicate edge {{{},{}}}", dup->a, dup->b));
  UndirectedGraph g;
  g.order_ = order;
  g.edges_ = std::move(edges);
  return g;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(u, v));
}

UndirectedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return UndirectedGraph::from_edges(n, std::move(edges));
}

UndirectedGraph complete_bipartite_graph(int x) { return complete_equipartite_graph(x, 2); }

UndirectedGraph complete_equipartite_graph(int x, int y) {
  std::vector<Edge> edges;
  const int n = x * y;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (a / x != b / x) edges.push_back({a, b});
  return UndirectedGraph::from_edges(n, std::move(edges));
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> edges;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge::of(cycle[i], cycle[(i + 1) % n]));
  return edges;
}

UndirectedFactor make_undirected_factor(int cycle_length, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::of(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  return {cycle_length, std::move(edges)};
}

std::vector<std::vector<Vertex>> factor_cycles(const UndirectedFactor& f, int order) {
  std::vector<std::vector<Vertex>> nbr(order);
  for (const Edge& e : f.edges) {
    nbr[e.a].push_back(e.b);
    nbr[e.b].push_back(e.a);
  }
  std::vector<std::vector<Vertex>> cycles;
  std::vector<char> seen(order, 0);
  for (Vertex s = 0; s < order; ++s) {
    if (seen[s] || nbr[s].size() != 2) continue;
    std::vector<Vertex> cycle{s};
    seen[s] = 1;
    Vertex prev = s, cur = std::min(nbr[s][0], nbr[s][1]);
    while (cur != s && !seen[cur]) {
      seen[cur] = 1;
      cycle.push_back(cur);
      if (nbr[cur].size() != 2) break;
      const Vertex nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = nxt;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::string check_undirected(const UndirectedFactorization& f) {
  const int n = f.host.order();
  std::vector<Edge> all;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const auto& factor = f.factors[i];
    std::vector<int> deg(n, 0);
    for (const Edge& e : factor.edges) {
      if (!f.host.has_edge(e.a, e.b))
        return fmt::format("factor {}: edge {{{},{}}} not in host", i, e.a, e.b);
      ++deg[e.a];
      ++deg[e.b];
      all.push_back(e);
    }
    const int want = factor.cycle_length == 2 ? 1 : 2;
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] != want) return fmt::format("factor {}: vertex {} has degree {}", i, v, deg[v]);
    if (factor.cycle_length > 2)
      for (const auto& c : factor_cycles(factor, n))
        if (static_cast<int>(c.size()) != factor.cycle_length)
          return fmt::format("factor {}: cycle of length {}", i, c.size());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "factors overlap";
  if (all != f.host.edges()) return "factors do not cover the host";
  return {};
}

}  // namespace hwp
