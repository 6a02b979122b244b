#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/search.hpp"
#include "hwp/undirected.hpp"

namespace hwp {

/// Round-robin 1-factorization of K_n (n even): vertex n−1 is fixed and
/// factor i is {i, n−1} ∪ {(i+j, i−j) mod (n−1)}.
UndirectedFactorization one_factorization_complete(int n);

/// (m−1)/2 Hamilton cycles of K_m (m odd) from the zig-zag on Z_{m−1} ∪ {∞}.
UndirectedFactorization walecki_odd(int m);

/// Hamilton decomposition of K_m − F_m (m even) into the cycles
/// σ^i(C), C = (0, 1, ..., m−1), 0 ≤ i ≤ (m−4)/2.
struct WaleckiDecomposition {
  int m = 0;
  std::vector<Vertex> starter;                // C
  std::vector<Vertex> sigma;                  // σ as an image table
  std::vector<std::vector<Vertex>> cycles;    // σ^i(C)
  std::vector<std::pair<Vertex, Vertex>> f;   // F_m

  UndirectedFactorization as_factorization() const;
};

/// σ is found by backtracking over permutations fixing 0 and m/2 and
/// commuting with i ↦ −i (so σ preserves F_m), built as one (m−2)-cycle
/// a₁ → a₂ → … → −a₁ → −a₂ → …; the first hit in lexicographic order is used.
WaleckiDecomposition walecki_even(int m);

/// G[2] split into two edge-disjoint copies of H.
struct HaggkvistSplit {
  std::vector<Edge> first;
  std::vector<Edge> second;
};

/// Häggkvist doubling for a path or cycle G given by its vertex walk
/// (`walk` lists n+1 vertices for a path, n for a cycle) and H given by its
/// even cycle lengths summing to 2n. Vertex (copy c, g) of G[2] has id
/// c·order + g. H's cycles are laid on consecutive runs of G's edges: the
/// first and last edge of a run contribute a 2-star at one copy of the run's
/// end vertex, inner edges contribute parallel pairs to the first copy of H
/// and crossed pairs to the second. Throws std::invalid_argument for odd or
/// too-short cycles in H or when the lengths do not sum to 2n.
HaggkvistSplit haggkvist_double(const std::vector<Vertex>& walk, bool is_cycle, int order,
                                const std::vector<int>& h_cycle_lengths);

/// Doubles every edge of every factor; 1-factors become K₂*-factors and
/// ℓ-cycle factors become symmetric C_ℓ*-factors. Throws
/// std::invalid_argument when the input does not verify.
Certificate symmetric_lift(const UndirectedFactorization& f);

/// Splits a symmetric C_ℓ*-factor into its two orientations; each cycle is
/// walked from its smallest vertex towards its smaller neighbour in the
/// first output. Throws std::invalid_argument when F is not symmetric or not
/// a union of ℓ-cycles.
std::pair<Factor, Factor> orient_split(const Factor& symmetric_factor, int order);

/// Cycle-factorization of K_{x,x} into x/2 factors of m-cycles
/// (m even, m | 2x, x even). Primary method pairs translation matchings
/// M_d = {(i, x + i + d)} with M_{d+2x/m}; when that pairing does not exist
/// the factorization comes from backtrack_search.
struct BipartiteCycleResult {
  UndirectedFactorization factorization;
  std::string method;  // "matching-difference" or "search"
};
BipartiteCycleResult bipartite_cycle_factorization(int x, int m);

/// x(y−1) perfect matchings of K_(x:y); needs x·y even.
UndirectedFactorization equipartite_one_factorization(int x, int y);

/// C⃗_ℓ-factorization of K*_(x:2) into x factors (ℓ even, ℓ | 2x); factor k
/// holds a_i → b_{i+k} and b_j → a_{j−k+g} with g = 2x/ℓ, a_i = i, b_j = x+j.
std::vector<Factor> directed_bipartite_factorization(int x, int ell);

/// Resolvable triangle decomposition of K_n, n ≡ 3 (mod 6). Orders 3, 9 and
/// 15 are fixed systems; larger orders are searched and cached under
/// $HWP_CACHE_DIR when it is set.
UndirectedFactorization kirkman_triple_system(int n);

}  // namespace hwp
