#include "hwp/named_graphs.hpp"

#include <fmt/format.h>

namespace hwp {

Digraph complete_symmetric(int v) {
  if (v < 2) throw GraphError(fmt::format("complete_symmetric needs v >= 2, got {}", v));
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(v) * (v - 1));
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = 0; b < v; ++b)
      if (a != b) arcs.push_back({a, b});
  return Digraph::from_arcs(v, arcs);
}

Equipartite complete_symmetric_equipartite(int x, int y) {
  if (x < 1 || y < 2) throw GraphError(fmt::format("invalid equipartite shape ({}:{})", x, y));
  PartitionScheme scheme{x, y};
  const int n = x * y;
  std::vector<Arc> arcs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (scheme.part_of(a) != scheme.part_of(b)) arcs.push_back({a, b});
  return {Digraph::from_arcs(n, arcs), scheme};
}

Digraph blowup(const Digraph& d, int k) {
  if (k < 1) throw GraphError(fmt::format("blowup multiplicity must be >= 1, got {}", k));
  const int n = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(d.size() * k * k);
  for (const Arc& a : d.arcs())
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) arcs.push_back({i * n + a.tail, j * n + a.head});
  return Digraph::from_arcs(n * k, arcs);
}

Digraph cayley(const CayleySpec& spec) {
  if (spec.layers < 1 || spec.modulus < 1) throw GraphError("invalid Cayley group");
  const int n = spec.layers * spec.modulus;
  std::vector<Arc> arcs;
  for (auto [dl, di] : spec.connection) {
    const int l = ((dl % spec.layers) + spec.layers) % spec.layers;
    const int i = ((di % spec.modulus) + spec.modulus) % spec.modulus;
    if (l == 0 && i == 0) throw GraphError("identity in Cayley connection set");
  }
  for (int layer = 0; layer < spec.layers; ++layer)
    for (int index = 0; index < spec.modulus; ++index)
      for (auto [dl, di] : spec.connection)
        arcs.push_back({layered(layer, index, spec.modulus, spec.layers),
                        layered(layer + dl, index + di, spec.modulus, spec.layers)});
  return Digraph::from_arcs(n, arcs);
}

Digraph directed_cycle(int m) {
  if (m < 2) throw GraphError("cycle needs at least 2 vertices");
  std::vector<Vertex> c(m);
  for (int i = 0; i < m; ++i) c[i] = i;
  return Digraph::from_arcs(m, cycle_arcs(c));
}

Digraph symmetric_cycle(int m) {
  if (m < 3) throw GraphError("symmetric cycle needs at least 3 vertices");
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    arcs.push_back({i, (i + 1) % m});
    arcs.push_back({(i + 1) % m, i});
  }
  return Digraph::from_arcs(m, arcs);
}

Factor named_factor_I(int m) {
  if (m < 1) throw GraphError("I needs m >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < m; ++i) pairs.emplace_back(i, m + i);
  return matching_factor(pairs);
}

std::vector<std::pair<Vertex, Vertex>> f_matching(int m) {
  if (m < 4 || m % 2 != 0) throw GraphError(fmt::format("F needs even m >= 4, got {}", m));
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, m / 2}};
  for (int i = 1; i < m / 2; ++i) pairs.emplace_back(i, m - i);
  return pairs;
}

Factor named_factor_F(int m) { return matching_factor(f_matching(m)); }

Digraph cm_star_blowup(int m) { return blowup(symmetric_cycle(m), 2); }

Digraph cm_star_blowup_plus_I(int m) {
  return arc_sum(cm_star_blowup(m), factor_digraph(named_factor_I(m), 2 * m));
}

Digraph named_graph_Gamma(int m) {
  const auto pairs = f_matching(m);
  const Digraph f = Digraph::from_arcs(m, double_arcs(pairs));
  return arc_sum(cm_star_blowup(m), blowup(f, 2));
}

Digraph factor_digraph(const Factor& f, int order) { return Digraph::from_arcs(order, f.arcs); }

std::vector<Arc> translate(const std::vector<Arc>& arcs, int m, int dl, int di) {
  auto shift = [&](Vertex v) { return layered(v / m + dl, v % m + di, m); };
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back({shift(a.tail), shift(a.head)});
  return out;
}

std::vector<Arc> reversed_arcs(const std::vector<Arc>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back(a.reversed());
  return out;
}

}  // namespace hwp
