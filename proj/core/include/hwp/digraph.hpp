#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwp {

using Vertex = std::int32_t;

/// An ordered pair of distinct vertices.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
  constexpr Arc reversed() const { return {head, tail}; }
};

/// Thrown for malformed graph input: loops, duplicate arcs, out-of-range
/// endpoints, invalid orders.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite digraph on vertices [0, order) with a materialized arc set.
///
/// Arcs are kept sorted by (tail, head); membership is O(1) through a dense
/// adjacency matrix. Instances are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a digraph; throws GraphError on loops, duplicates or endpoints
  /// outside [0, order).
  static Digraph from_arcs(int order, std::span<const Arc> arcs);
  static Digraph from_arcs(int order, const std::vector<Arc>& arcs) {
    return from_arcs(order, std::span<const Arc>(arcs));
  }

  int order() const { return order_; }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool has_arc(Vertex tail, Vertex head) const {
    if (tail < 0 || head < 0 || tail >= order_ || head >= order_) return false;
    return adjacency_[static_cast<std::size_t>(tail) * order_ + head] != 0;
  }
  bool has_arc(const Arc& a) const { return has_arc(a.tail, a.head); }

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;

  /// True when every arc has its reverse.
  bool is_symmetric() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }

 private:
  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::uint8_t> adjacency_;
};

/// Arc-disjoint union (⊕) on a common vertex set. Throws when the
/// operands share an arc or differ in order.
Digraph arc_sum(const Digraph& a, const Digraph& b);

/// Arcs of `a` that are not in `b`; `b` need not be a subgraph of `a`.
Digraph arc_difference(const Digraph& a, const Digraph& b);

/// Digraph with every arc reversed.
Digraph reverse(const Digraph& d);

/// Re-labels vertices through `map` (old id -> new id) into a digraph of
/// order `new_order`.
Digraph relabel(const Digraph& d, std::span<const Vertex> map, int new_order);

/// Arcs (u,v),(v,u) for the given pairs.
std::vector<Arc> double_arcs(std::span<const std::pair<Vertex, Vertex>> pairs);

/// Arcs of the directed cycle visiting `cycle` in order (closing back).
std::vector<Arc> cycle_arcs(std::span<const Vertex> cycle);

std::string to_string(const Arc& a);

}  // namespace hwp
