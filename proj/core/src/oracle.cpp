#include <stdexcept>

#include <fmt/format.h>

#include "hwp/verifier.hpp"

namespace hwp {
namespace {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Digraph& host, const KindSpec& spec, OracleMode mode,
                   const OracleBudget& budget)
      : n_(host.order()),
        mode_(mode),
        budget_(budget),
        avail_(static_cast<std::size_t>(n_) * n_, 0),
        in_factor_(n_, 0),
        succ_(n_, -1),
        deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
    for (const Arc& a : host.arcs()) avail_[idx(a.tail, a.head)] = 1;
    for (auto [len, count] : spec) kinds_.push_back({len, count});
  }

  OracleResult run() {
    OracleResult result;
    std::uint64_t factorial_product = 1;
    for (auto [len, count] : kinds_)
      for (int i = 2; i <= count; ++i) factorial_product *= static_cast<std::uint64_t>(i);
    if (regular()) descend();
    result.nodes = nodes_;
    result.unordered_count = found_;
    result.ordered_count = found_ * factorial_product;
    result.solutions = std::move(solutions_);
    if (exceeded_) result.status = OracleStatus::BudgetExceeded;
    else result.status = found_ > 0 ? OracleStatus::Found : OracleStatus::Exhausted;
    return result;
  }

 private:
  struct KindCount {
    int length;
    int count;
  };

  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

  int remaining_factors() const {
    int total = 0;
    for (const auto& k : kinds_) total += k.count;
    return total;
  }

  // Every vertex must have in- and out-degree equal to the number of factors.
  bool regular() const {
    const int k = remaining_factors();
    for (Vertex v = 0; v < n_; ++v) {
      int out = 0, in = 0;
      for (Vertex w = 0; w < n_; ++w) {
        out += avail_[idx(v, w)];
        in += avail_[idx(w, v)];
      }
      if (out != k || in != k) return false;
    }
    return true;
  }

  bool stop() const { return exceeded_ || (mode_ == OracleMode::First && found_ > 0); }

  bool charge() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) exceeded_ = true;
    if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) exceeded_ = true;
    return !exceeded_;
  }

  bool k2_feasible() const {
    int need = 0;
    for (const auto& k : kinds_)
      if (k.length == kK2) need = k.count;
    if (need == 0) return true;
    for (Vertex v = 0; v < n_; ++v) {
      int partners = 0;
      for (Vertex w = 0; w < n_; ++w) partners += avail_[idx(v, w)] & avail_[idx(w, v)];
      if (partners < need) return false;
    }
    return true;
  }

  void record() {
    ++found_;
    if (mode_ == OracleMode::Count) return;
    solutions_.push_back(chosen_);
  }

  void descend() {
    if (stop() || !charge()) return;
    if (remaining_factors() == 0) {
      record();
      return;
    }
    if (!k2_feasible()) return;
    Arc first{-1, -1};
    for (Vertex a = 0; a < n_ && first.tail < 0; ++a)
      for (Vertex b = 0; b < n_; ++b)
        if (avail_[idx(a, b)]) {
          first = {a, b};
          break;
        }
    for (auto& k : kinds_) {
      if (k.count == 0 || n_ % k.length != 0) continue;
      current_length_ = k.length;
      --k.count;
      grow_first_cycle(first, k);
      ++k.count;
      if (stop()) return;
    }
  }

  // Builds the cycle through the forced arc `first`, then the rest of the factor.
  void grow_first_cycle(Arc first, KindCount& kind) {
    std::fill(in_factor_.begin(), in_factor_.end(), 0);
    in_factor_[first.tail] = 1;
    in_factor_[first.head] = 1;
    succ_[first.tail] = first.head;
    if (current_length_ == 2) {
      if (avail_[idx(first.head, first.tail)]) {
        succ_[first.head] = first.tail;
        next_cycle(kind);
      }
    } else {
      extend(first.tail, first.head, 2, kind);
    }
    in_factor_[first.tail] = 0;
    in_factor_[first.head] = 0;
  }

  // Path from `start` currently ends at `tip` and holds `len` vertices.
  void extend(Vertex start, Vertex tip, int len, KindCount& kind) {
    if (stop()) return;
    if (len == current_length_) {
      if (avail_[idx(tip, start)]) {
        succ_[tip] = start;
        next_cycle(kind);
      }
      return;
    }
    for (Vertex w = 0; w < n_; ++w) {
      if (in_factor_[w] || !avail_[idx(tip, w)]) continue;
      in_factor_[w] = 1;
      succ_[tip] = w;
      extend(start, w, len + 1, kind);
      in_factor_[w] = 0;
      if (stop()) return;
    }
  }

  void next_cycle(KindCount& kind) {
    Vertex w = 0;
    while (w < n_ && in_factor_[w]) ++w;
    if (w == n_) {
      commit();
      return;
    }
    in_factor_[w] = 1;
    if (current_length_ == 2) {
      for (Vertex x = w + 1; x < n_; ++x) {
        if (in_factor_[x] || !avail_[idx(w, x)] || !avail_[idx(x, w)]) continue;
        in_factor_[x] = 1;
        succ_[w] = x;
        succ_[x] = w;
        next_cycle(kind);
        in_factor_[x] = 0;
        if (stop()) break;
      }
    } else {
      extend(w, w, 1, kind);
    }
    in_factor_[w] = 0;
  }

  void commit() {
    Factor f;
    f.cycle_length = current_length_;
    f.arcs.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) f.arcs.push_back({v, succ_[v]});
    for (const Arc& a : f.arcs) avail_[idx(a.tail, a.head)] = 0;
    const int saved_length = current_length_;
    const auto saved_succ = succ_;
    const auto saved_in = in_factor_;
    chosen_.push_back(std::move(f));
    descend();
    chosen_.pop_back();
    current_length_ = saved_length;
    succ_ = saved_succ;
    in_factor_ = saved_in;
    for (Vertex v = 0; v < n_; ++v) avail_[idx(v, succ_[v])] = 1;
  }

  int n_;
  OracleMode mode_;
  OracleBudget budget_;
  std::vector<std::uint8_t> avail_;
  std::vector<std::uint8_t> in_factor_;
  std::vector<Vertex> succ_;
  std::vector<KindCount> kinds_;
  std::vector<Factor> chosen_;
  std::vector<std::vector<Factor>> solutions_;
  int current_length_ = 2;
  std::uint64_t nodes_ = 0;
  std::uint64_t found_ = 0;
  bool exceeded_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

OracleResult exhaustive_factorize(const Digraph& host, const KindSpec& spec, OracleMode mode,
                                  const OracleBudget& budget, bool force) {
  std::size_t total = 0;
  for (auto [len, count] : spec) {
    if (len < 2 || count < 0) throw std::invalid_argument("invalid kind in spec");
    total += static_cast<std::size_t>(count) * host.order();
  }
  if (total != host.size())
    throw std::invalid_argument(fmt::format(
        "spec {} needs {} arcs but the host has {}", format_kind_spec(spec), total, host.size()));
  if (host.size() > kOracleArcCeiling && !force)
    throw std::invalid_argument(
        fmt::format("host has {} arcs, above the exhaustive ceiling of {}; use force",
                    host.size(), kOracleArcCeiling));
  return ExhaustiveSearch(host, spec, mode, budget).run();
}

}  // namespace hwp
