#pragma once
// Cycle type of an undirected edge set, computed without the library's own
// cycle walker. Returns {-1} when some vertex does not have degree 2.

#include <map>
#include <set>
#include <vector>

#include "hwp/undirected.hpp"

namespace hwp::testing {

inline std::multiset<int> cycle_type(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) return {-1};
  std::multiset<int> out;
  std::set<Vertex> seen;
  for (const auto& [start, nb] : adj) {
    if (seen.count(start)) continue;
    int len = 0;
    Vertex prev = -1, cur = start;
    while (!seen.count(cur)) {
      seen.insert(cur);
      ++len;
      const auto& n = adj[cur];
      const Vertex next = n[0] != prev ? n[0] : n[1];
      prev = cur;
      cur = next;
    }
    out.insert(len);
  }
  return out;
}

}  // namespace hwp::testing
