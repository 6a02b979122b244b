#pragma once

#include <utility>
#include <vector>

#include "hwp/digraph.hpp"
#include "hwp/factor.hpp"

namespace hwp {

/// Id of the structured vertex (layer, index) of Z_layers × Z_m, both reduced
/// modulo their group orders: layer·m + index.
constexpr Vertex layered(int layer, int index, int m, int layers = 2) {
  const int l = ((layer % layers) + layers) % layers;
  const int i = ((index % m) + m) % m;
  return l * m + i;
}

/// y parts of size x; part j is the block [j·x, (j+1)·x).
struct PartitionScheme {
  int part_size = 1;
  int part_count = 1;

  int part_of(Vertex v) const { return v / part_size; }
  Vertex vertex(int part, int offset) const { return part * part_size + offset; }
};

struct Equipartite {
  Digraph graph;
  PartitionScheme scheme;
};

/// K_v*. Throws GraphError for v < 2.
Digraph complete_symmetric(int v);

/// K_(x:y)* with parts as in PartitionScheme. Throws for x < 1 or y < 2.
Equipartite complete_symmetric_equipartite(int x, int y);

/// D[k]: vertex (copy c, original u) has id c·|V(D)| + u.
Digraph blowup(const Digraph& d, int k);

/// Cayley digraph on Z_layers × Z_modulus (layers = 1 gives Z_modulus).
struct CayleySpec {
  int layers = 1;
  int modulus = 1;
  std::vector<std::pair<int, int>> connection;  // (layer step, index step)
};

/// Throws GraphError when the identity lies in the connection set.
Digraph cayley(const CayleySpec& spec);

/// Directed cycle (0, 1, ..., m−1).
Digraph directed_cycle(int m);

/// C_m*, the symmetric m-cycle on 0..m−1.
Digraph symmetric_cycle(int m);

/// I*₂ₘ = {(i, m+i)*}, a K₂*-factor of K*₂ₘ.
Factor named_factor_I(int m);

/// F*ₘ = {(0, m/2)*, (i, m−i)*}. Throws GraphError for odd m or m < 4.
Factor named_factor_F(int m);

/// The edge pairs of Fₘ as unordered pairs {a, b} with a < b.
std::vector<std::pair<Vertex, Vertex>> f_matching(int m);

/// C_m*[2] on Z₂ × Z_m.
Digraph cm_star_blowup(int m);

/// C_m*[2] ⊕ I*₂ₘ.
Digraph cm_star_blowup_plus_I(int m);

/// Γ*ₘ = C_m*[2] ⊕ Fₘ*[2]. Throws GraphError for odd m or m < 4.
Digraph named_graph_Gamma(int m);

/// Digraph on `order` vertices holding exactly the factor's arcs.
Digraph factor_digraph(const Factor& f, int order);

/// Translation (a, i) ↦ (a + dl, i + di) on Z₂ × Z_m applied to arcs.
std::vector<Arc> translate(const std::vector<Arc>& arcs, int m, int dl, int di);

/// Arcs with every direction flipped.
std::vector<Arc> reversed_arcs(const std::vector<Arc>& arcs);

}  // namespace hwp
