#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "hwp/digraph.hpp"
#include "hwp/factor.hpp"

namespace hwp {

/// `count` factors of directed `cycle_length`-cycles. A paired kind asks for
/// factors F together with R(F), i.e. symmetric undirected cycle factors;
/// such an entry yields 2·count factors.
struct SearchKind {
  int cycle_length = kK2;
  int count = 0;
  bool paired = false;
};

struct SearchBudget {
  std::uint64_t node_limit = 50'000'000;
  std::chrono::milliseconds time_limit{std::chrono::seconds(60)};
  bool deterministic = false;  // natural order, no restarts
  std::uint64_t seed = 1;
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<Factor> factors;  // on Found
  std::uint64_t nodes = 0;
  int restarts = 0;
};

/// Backtracking factorization search.
///
/// Branches on the first uncovered arc of a (possibly shuffled) arc order and
/// tries every factor of every remaining kind through that arc, so a run that
/// finishes without hitting its limits is complete. Randomized runs restart
/// with doubling node limits and stay deterministic for a fixed seed.
/// Throws std::invalid_argument when the spec's arc total differs from |E(d)|.
SearchResult backtrack_search(const Digraph& d, const std::vector<SearchKind>& spec,
                              const SearchBudget& budget = {});

std::string to_string(SearchStatus s);

}  // namespace hwp
