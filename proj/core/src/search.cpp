#include "hwp/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace hwp {
namespace {

class Backtracker {
 public:
  Backtracker(const Digraph& d, const std::vector<SearchKind>& spec)
      : n_(d.order()), avail0_(static_cast<std::size_t>(n_) * n_, 0), kinds0_(spec) {
    for (const Arc& a : d.arcs()) avail0_[idx(a.tail, a.head)] = 1;
  }

  // One run with a given ordering; returns Found/Exhausted/BudgetExceeded.
  SearchStatus run(std::uint64_t node_limit, std::chrono::steady_clock::time_point deadline,
                   std::mt19937_64* rng) {
    avail_ = avail0_;
    kinds_ = kinds0_;
    in_factor_.assign(n_, 0);
    succ_.assign(n_, -1);
    chosen_.clear();
    nodes_ = 0;
    limit_ = node_limit;
    deadline_ = deadline;
    exceeded_ = false;
    found_ = false;
    vertex_order_.resize(n_);
    std::iota(vertex_order_.begin(), vertex_order_.end(), 0);
    arc_order_.clear();
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b)
        if (avail0_[idx(a, b)]) arc_order_.push_back({a, b});
    rng_ = rng;
    if (rng_) {
      std::shuffle(vertex_order_.begin(), vertex_order_.end(), *rng_);
      std::shuffle(arc_order_.begin(), arc_order_.end(), *rng_);
    }
    descend();
    total_nodes_ += nodes_;
    if (found_) return SearchStatus::Found;
    return exceeded_ ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  }

  std::vector<Factor> take_solution() { return std::move(solution_); }
  std::uint64_t total_nodes() const { return total_nodes_; }

 private:
  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }
  bool has(Vertex a, Vertex b) const { return avail_[idx(a, b)] != 0; }

  bool stop() const { return found_ || exceeded_; }

  bool charge() {
    ++nodes_;
    if (nodes_ > limit_) exceeded_ = true;
    if ((nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_) exceeded_ = true;
    return !exceeded_;
  }

  int remaining() const {
    int total = 0;
    for (const auto& k : kinds_) total += k.count;
    return total;
  }

  bool k2_feasible() const {
    int need = 0;
    for (const auto& k : kinds_)
      if (k.cycle_length == kK2) need += k.count;
    if (need == 0) return true;
    for (Vertex v = 0; v < n_; ++v) {
      int partners = 0;
      for (Vertex w = 0; w < n_; ++w) partners += avail_[idx(v, w)] & avail_[idx(w, v)];
      if (partners < need) return false;
    }
    return true;
  }

  void descend() {
    if (stop() || !charge()) return;
    const int left = remaining();
    if (left == 0) {
      found_ = true;
      solution_ = chosen_;
      return;
    }
    if (left == 1) {
      finish_last();
      return;
    }
    if (!k2_feasible()) return;
    Arc first{-1, -1};
    for (const Arc& a : arc_order_)
      if (has(a.tail, a.head)) {
        first = a;
        break;
      }
    if (first.tail < 0) return;
    std::vector<std::size_t> order(kinds_.size());
    std::iota(order.begin(), order.end(), 0);
    if (rng_) std::shuffle(order.begin(), order.end(), *rng_);
    for (std::size_t k : order) {
      SearchKind& kind = kinds_[k];
      if (kind.count == 0 || n_ % kind.cycle_length != 0) continue;
      if (kind.paired && !has(first.head, first.tail)) continue;
      length_ = kind.cycle_length;
      paired_ = kind.paired;
      --kind.count;
      build_from(first);
      ++kind.count;
      if (stop()) return;
    }
  }

  bool usable(Vertex a, Vertex b) const {
    return has(a, b) && (!paired_ || has(b, a)) && (length_ != kK2 || has(b, a));
  }

  void build_from(Arc first) {
    std::fill(in_factor_.begin(), in_factor_.end(), 0);
    in_factor_[first.tail] = in_factor_[first.head] = 1;
    succ_[first.tail] = first.head;
    if (length_ == kK2) {
      if (has(first.head, first.tail)) {
        succ_[first.head] = first.tail;
        next_cycle();
      }
    } else {
      extend(first.tail, first.head, 2);
    }
  }

  void extend(Vertex start, Vertex tip, int len) {
    if (stop()) return;
    if (len == length_) {
      if (usable(tip, start)) {
        succ_[tip] = start;
        next_cycle();
      }
      return;
    }
    for (Vertex w : vertex_order_) {
      if (in_factor_[w] || !usable(tip, w)) continue;
      in_factor_[w] = 1;
      succ_[tip] = w;
      extend(start, w, len + 1);
      in_factor_[w] = 0;
      if (stop() || !charge()) return;
    }
  }

  void next_cycle() {
    Vertex w = -1;
    for (Vertex v : vertex_order_)
      if (!in_factor_[v]) {
        w = v;
        break;
      }
    if (w < 0) {
      commit();
      return;
    }
    in_factor_[w] = 1;
    if (length_ == kK2) {
      for (Vertex x : vertex_order_) {
        if (in_factor_[x] || !has(w, x) || !has(x, w)) continue;
        in_factor_[x] = 1;
        succ_[w] = x;
        succ_[x] = w;
        next_cycle();
        in_factor_[x] = 0;
        if (stop() || !charge()) break;
      }
    } else {
      extend(w, w, 1);
    }
    in_factor_[w] = 0;
  }

  std::vector<Arc> factor_arcs(bool reversed) const {
    std::vector<Arc> arcs;
    arcs.reserve(n_);
    for (Vertex v = 0; v < n_; ++v)
      arcs.push_back(reversed ? Arc{succ_[v], v} : Arc{v, succ_[v]});
    return arcs;
  }

  void commit() {
    const bool pair = paired_;
    const int len = length_;
    auto arcs = factor_arcs(false);
    std::vector<Arc> rev;
    if (pair) rev = factor_arcs(true);
    for (const Arc& a : arcs) avail_[idx(a.tail, a.head)] = 0;
    for (const Arc& a : rev) avail_[idx(a.tail, a.head)] = 0;
    const auto saved_succ = succ_;
    const auto saved_in = in_factor_;
    chosen_.push_back(make_factor(len, arcs));
    if (pair) chosen_.push_back(make_factor(len, rev));
    descend();
    chosen_.pop_back();
    if (pair) chosen_.pop_back();
    succ_ = saved_succ;
    in_factor_ = saved_in;
    length_ = len;
    paired_ = pair;
    for (const Arc& a : arcs) avail_[idx(a.tail, a.head)] = 1;
    for (const Arc& a : rev) avail_[idx(a.tail, a.head)] = 1;
  }

  // Exactly one factor (or one pair) is left: the remaining arcs must be it.
  void finish_last() {
    const SearchKind* kind = nullptr;
    for (const auto& k : kinds_)
      if (k.count > 0) kind = &k;
    const int len = kind->cycle_length;
    if (n_ % len != 0) return;
    if (!kind->paired) {
      std::vector<Vertex> succ(n_, -1);
      std::vector<int> indeg(n_, 0);
      std::vector<Arc> arcs;
      for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = 0; b < n_; ++b)
          if (has(a, b)) {
            if (succ[a] != -1) return;
            succ[a] = b;
            ++indeg[b];
            arcs.push_back({a, b});
          }
      for (Vertex v = 0; v < n_; ++v)
        if (succ[v] < 0 || indeg[v] != 1) return;
      if (!cycles_have_length(succ, len)) return;
      chosen_.push_back(make_factor(len, arcs));
      solution_ = chosen_;
      chosen_.pop_back();
      found_ = true;
      return;
    }
    // Paired: the remaining arcs form a symmetric 2-regular graph.
    std::vector<std::vector<Vertex>> nbr(n_);
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b)
        if (has(a, b)) {
          if (!has(b, a)) return;
          nbr[a].push_back(b);
        }
    for (const auto& l : nbr)
      if (l.size() != 2) return;
    std::vector<Vertex> succ(n_, -1);
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      Vertex prev = s, cur = nbr[s][0];
      seen[s] = 1;
      succ[s] = cur;
      while (cur != s) {
        seen[cur] = 1;
        const Vertex nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        succ[cur] = nxt;
        prev = cur;
        cur = nxt;
      }
    }
    if (!cycles_have_length(succ, len)) return;
    std::vector<Arc> fwd, bwd;
    for (Vertex v = 0; v < n_; ++v) {
      fwd.push_back({v, succ[v]});
      bwd.push_back({succ[v], v});
    }
    chosen_.push_back(make_factor(len, fwd));
    chosen_.push_back(make_factor(len, bwd));
    solution_ = chosen_;
    chosen_.resize(chosen_.size() - 2);
    found_ = true;
  }

  bool cycles_have_length(const std::vector<Vertex>& succ, int len) const {
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      int l = 0;
      for (Vertex v = s; !seen[v]; v = succ[v]) {
        seen[v] = 1;
        ++l;
      }
      if (l != len) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::uint8_t> avail0_, avail_;
  std::vector<SearchKind> kinds0_, kinds_;
  std::vector<std::uint8_t> in_factor_;
  std::vector<Vertex> succ_;
  std::vector<Vertex> vertex_order_;
  std::vector<Arc> arc_order_;
  std::vector<Factor> chosen_, solution_;
  std::mt19937_64* rng_ = nullptr;
  int length_ = kK2;
  bool paired_ = false;
  std::uint64_t nodes_ = 0, limit_ = 0, total_nodes_ = 0;
  std::chrono::steady_clock::time_point deadline_;
  bool exceeded_ = false, found_ = false;
};

}  // namespace

SearchResult backtrack_search(const Digraph& d, const std::vector<SearchKind>& spec,
                              const SearchBudget& budget) {
  std::size_t total = 0;
  for (const auto& k : spec) {
    if (k.cycle_length < 2 || k.count < 0 || (k.paired && k.cycle_length < 3))
      throw std::invalid_argument("invalid search kind");
    total += static_cast<std::size_t>(k.count) * d.order() * (k.paired ? 2 : 1);
  }
  if (total != d.size())
    throw std::invalid_argument(
        fmt::format("search spec needs {} arcs but the digraph has {}", total, d.size()));

  Backtracker bt(d, spec);
  const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;
  SearchResult result;
  if (budget.deterministic) {
    result.status = bt.run(budget.node_limit, deadline, nullptr);
  } else {
    std::mt19937_64 rng(budget.seed);
    std::uint64_t used = 0;
    std::uint64_t slice = 20'000;
    result.status = SearchStatus::BudgetExceeded;
    while (used < budget.node_limit && std::chrono::steady_clock::now() < deadline) {
      const std::uint64_t limit = std::min(slice, budget.node_limit - used);
      const SearchStatus s = bt.run(limit, deadline, &rng);
      used = bt.total_nodes();
      ++result.restarts;
      if (s != SearchStatus::BudgetExceeded) {
        result.status = s;
        break;
      }
      slice = slice + slice / 2;
    }
  }
  result.nodes = bt.total_nodes();
  if (result.status == SearchStatus::Found) result.factors = bt.take_solution();
  return result;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

}  // namespace hwp
