#include "hwp/digraph.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace hwp {

Digraph Digraph::from_arcs(int order, std::span<const Arc> arcs) {
  if (order < 0) throw GraphError(fmt::format("negative order {}", order));
  Digraph d;
  d.order_ = order;
  d.adjacency_.assign(static_cast<std::size_t>(order) * order, 0);
  d.arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= order || a.head >= order)
      throw GraphError(fmt::format("arc {} has an endpoint outside [0, {})",
                                   to_string(a), order));
    if (a.tail == a.head) throw GraphError(fmt::format("loop at vertex {}", a.tail));
    auto& cell = d.adjacency_[static_cast<std::size_t>(a.tail) * order + a.head];
    if (cell) throw GraphError(fmt::format("duplicate arc {}", to_string(a)));
    cell = 1;
    d.arcs_.push_back(a);
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  return d;
}

int Digraph::out_degree(Vertex v) const {
  auto lo = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v, 0});
  auto hi = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{v + 1, 0});
  return static_cast<int>(hi - lo);
}

int Digraph::in_degree(Vertex v) const {
  int n = 0;
  for (Vertex u = 0; u < order_; ++u) n += has_arc(u, v) ? 1 : 0;
  return n;
}

bool Digraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [this](const Arc& a) { return has_arc(a.head, a.tail); });
}

Digraph arc_sum(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order())
    throw GraphError(fmt::format("order mismatch {} vs {}", a.order(), b.order()));
  std::vector<Arc> arcs = a.arcs();
  arcs.insert(arcs.end(), b.arcs().begin(), b.arcs().end());
  return Digraph::from_arcs(a.order(), arcs);
}

Digraph arc_difference(const Digraph& a, const Digraph& b) {
  std::vector<Arc> arcs;
  for (const Arc& x : a.arcs())
    if (!b.has_arc(x)) arcs.push_back(x);
  return Digraph::from_arcs(a.order(), arcs);
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back(a.reversed());
  return Digraph::from_arcs(d.order(), arcs);
}

Digraph relabel(const Digraph& d, std::span<const Vertex> map, int new_order) {
  if (map.size() != static_cast<std::size_t>(d.order()))
    throw GraphError("relabel map size differs from order");
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({map[a.tail], map[a.head]});
  return Digraph::from_arcs(new_order, arcs);
}

std::vector<Arc> double_arcs(std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * pairs.size());
  for (auto [u, v] : pairs) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return arcs;
}

std::vector<Arc> cycle_arcs(std::span<const Vertex> cycle) {
  std::vector<Arc> arcs;
  const std::size_t n = cycle.size();
  arcs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) arcs.push_back({cycle[i], cycle[(i + 1) % n]});
  return arcs;
}

std::string to_string(const Arc& a) { return fmt::format("({},{})", a.tail, a.head); }

}  // namespace hwp
