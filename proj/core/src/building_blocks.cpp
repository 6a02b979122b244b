#include "hwp/building_blocks.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "hwp/certificate_io.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

namespace hwp {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

UndirectedFactorization one_factorization_complete(int n) {
  require(n >= 2 && n % 2 == 0, fmt::format("one_factorization_complete: n={} must be even", n));
  UndirectedFactorization out{complete_graph(n), {}};
  const int q = n - 1;
  for (int i = 0; i < q; ++i) {
    std::vector<Edge> edges{Edge::of(i, q)};
    for (int j = 1; j < n / 2; ++j) edges.push_back(Edge::of(mod(i + j, q), mod(i - j, q)));
    out.factors.push_back(make_undirected_factor(2, std::move(edges)));
  }
  return out;
}

UndirectedFactorization walecki_odd(int m) {
  require(m >= 3 && m % 2 == 1, fmt::format("walecki_odd: m={} must be odd and at least 3", m));
  UndirectedFactorization out{complete_graph(m), {}};
  const int n = m - 1, k = n / 2;
  for (int j = 0; j < k; ++j) {
    std::vector<Vertex> cycle{n, j};
    for (int t = 1; t < k; ++t) {
      cycle.push_back(mod(j + t, n));
      cycle.push_back(mod(j - t, n));
    }
    cycle.push_back(mod(j + k, n));
    out.factors.push_back(make_undirected_factor(m, cycle_edges(cycle)));
  }
  return out;
}

UndirectedFactorization WaleckiDecomposition::as_factorization() const {
  UndirectedFactorization out{complete_graph(m), {}};
  for (const auto& c : cycles) out.factors.push_back(make_undirected_factor(m, cycle_edges(c)));
  std::vector<Edge> fm;
  for (auto [a, b] : f) fm.push_back(Edge::of(a, b));
  out.factors.push_back(make_undirected_factor(2, std::move(fm)));
  return out;
}

namespace {

// σ is stored as an image table with -1 for unassigned points.
class SigmaSearch {
 public:
  explicit SigmaSearch(int m) : m_(m), k_(m / 2), sigma_(m, -1), used_(k_, 0) {
    sigma_[0] = 0;
    sigma_[k_] = k_;
    seq_.push_back(1);
    used_[1] = 1;
  }

  std::vector<Vertex> run() {
    if (k_ == 2) {  // m = 4: σ fixes everything but must not matter
      sigma_[1] = 1;
      sigma_[3] = 3;
      return sigma_;
    }
    if (!extend()) throw std::logic_error(fmt::format("walecki_even: no σ for m={}", m_));
    return sigma_;
  }

 private:
  Vertex neg(Vertex v) const { return mod(-v, m_); }
  bool cycle_edge(Vertex a, Vertex b) const {
    const int d = mod(a - b, m_);
    return d == 1 || d == m_ - 1;
  }

  void assign(Vertex from, Vertex to) {
    sigma_[from] = to;
    sigma_[neg(from)] = neg(to);
  }
  void unassign(Vertex from) {
    sigma_[from] = -1;
    sigma_[neg(from)] = -1;
  }

  // σ^t(C) must avoid C for 1 ≤ t ≤ k−2; checked where images are known.
  bool consistent() const {
    for (Vertex i = 0; i < m_; ++i) {
      Vertex a = i, b = mod(i + 1, m_);
      for (int t = 1; t <= k_ - 2; ++t) {
        a = sigma_[a];
        b = sigma_[b];
        if (a < 0 || b < 0) break;
        if (cycle_edge(a, b)) return false;
      }
    }
    return true;
  }

  bool extend() {
    const Vertex last = seq_.back();
    if (static_cast<int>(seq_.size()) == k_ - 1) {
      assign(last, neg(seq_.front()));
      if (consistent()) return true;
      unassign(last);
      return false;
    }
    for (Vertex c = 2; c < m_ - 1; ++c) {
      if (c == k_) continue;
      const int rep = std::min(c, m_ - c);
      if (used_[rep]) continue;
      assign(last, c);
      used_[rep] = 1;
      seq_.push_back(c);
      if (consistent() && extend()) return true;
      seq_.pop_back();
      used_[rep] = 0;
      unassign(last);
    }
    return false;
  }

  int m_, k_;
  std::vector<Vertex> sigma_;
  std::vector<char> used_;
  std::vector<Vertex> seq_;
};

}  // namespace

WaleckiDecomposition walecki_even(int m) {
  require(m >= 4 && m % 2 == 0, fmt::format("walecki_even: m={} must be even and at least 4", m));
  WaleckiDecomposition w;
  w.m = m;
  w.starter.resize(m);
  std::iota(w.starter.begin(), w.starter.end(), 0);
  w.sigma = SigmaSearch(m).run();
  std::vector<Vertex> c = w.starter;
  for (int i = 0; i <= (m - 4) / 2; ++i) {
    w.cycles.push_back(c);
    for (Vertex& x : c) x = w.sigma[x];
  }
  w.f = f_matching(m);
  return w;
}

HaggkvistSplit haggkvist_double(const std::vector<Vertex>& walk, bool is_cycle, int order,
                                const std::vector<int>& h_cycle_lengths) {
  const int n = static_cast<int>(walk.size()) - (is_cycle ? 0 : 1);
  require(n >= 1, "haggkvist_double: G has no edges");
  int total = 0;
  for (int len : h_cycle_lengths) {
    require(len % 2 == 0, fmt::format("haggkvist_double: H has an odd cycle of length {}", len));
    require(len >= 4, fmt::format("haggkvist_double: H has a cycle of length {}", len));
    total += len;
  }
  require(total == 2 * n,
          fmt::format("haggkvist_double: |V(H)| = {} but G has {} edges", total, n));
  auto g = [&](int pos) { return walk[static_cast<std::size_t>(pos % static_cast<int>(walk.size()))]; };
  auto at = [&](int copy, Vertex v) { return Vertex(copy * order + v); };

  // Each run starts with a star at copy 0 of its first vertex and ends with
  // a star at copy 1 of its last one, so consecutive runs never collide.
  HaggkvistSplit out;
  int pos = 0;
  for (int len : h_cycle_lengths) {
    const int l = len / 2;
    for (int slot = 0; slot < l; ++slot) {
      const Vertex u = g(pos + slot), w = g(pos + slot + 1);
      if (slot == 0) {
        out.first.push_back(Edge::of(at(0, u), at(0, w)));
        out.first.push_back(Edge::of(at(0, u), at(1, w)));
        out.second.push_back(Edge::of(at(1, u), at(0, w)));
        out.second.push_back(Edge::of(at(1, u), at(1, w)));
      } else if (slot == l - 1) {
        out.first.push_back(Edge::of(at(0, u), at(1, w)));
        out.first.push_back(Edge::of(at(1, u), at(1, w)));
        out.second.push_back(Edge::of(at(0, u), at(0, w)));
        out.second.push_back(Edge::of(at(1, u), at(0, w)));
      } else {
        out.first.push_back(Edge::of(at(0, u), at(0, w)));
        out.first.push_back(Edge::of(at(1, u), at(1, w)));
        out.second.push_back(Edge::of(at(0, u), at(1, w)));
        out.second.push_back(Edge::of(at(1, u), at(0, w)));
      }
    }
    pos += l;
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

Certificate symmetric_lift(const UndirectedFactorization& f) {
  const std::string problem = check_undirected(f);
  require(problem.empty(), "symmetric_lift: input does not verify: " + problem);
  const int n = f.host.order();
  std::vector<Arc> host_arcs;
  for (const Edge& e : f.host.edges()) {
    host_arcs.push_back({e.a, e.b});
    host_arcs.push_back({e.b, e.a});
  }
  Certificate c;
  c.host_desc = explicit_host(n, "lift");
  c.host = Digraph::from_arcs(n, std::move(host_arcs));
  for (const auto& uf : f.factors) {
    std::vector<Arc> arcs;
    for (const Edge& e : uf.edges) {
      arcs.push_back({e.a, e.b});
      arcs.push_back({e.b, e.a});
    }
    Factor lifted = make_factor(uf.cycle_length, std::move(arcs));
    lifted.symmetric = uf.cycle_length > 2;
    c.factors.push_back(std::move(lifted));
  }
  c.trace.step = "symmetric_lift";
  c.trace.param("factors", static_cast<long long>(f.factors.size()));
  return c;
}

std::pair<Factor, Factor> orient_split(const Factor& symmetric_factor, int order) {
  const int len = symmetric_factor.cycle_length;
  require(len >= 3, fmt::format("orient_split: cycle length {} cannot be oriented", len));
  const Digraph d = factor_digraph(symmetric_factor, order);
  require(d.is_symmetric(), "orient_split: factor is not symmetric");
  std::vector<Edge> edges;
  for (const Arc& a : symmetric_factor.arcs)
    if (a.tail < a.head) edges.push_back({a.tail, a.head});
  const UndirectedFactor uf = make_undirected_factor(len, std::move(edges));
  std::vector<int> deg(order, 0);
  for (const Edge& e : uf.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  for (Vertex v = 0; v < order; ++v)
    require(deg[v] == 2, fmt::format("orient_split: vertex {} has degree {}", v, deg[v]));
  auto cycles = factor_cycles(uf, order);
  for (const auto& c : cycles)
    require(static_cast<int>(c.size()) == len,
            fmt::format("orient_split: cycle of length {} in a {}-cycle factor", c.size(), len));
  Factor forward = cycles_factor(len, cycles);
  Factor backward = make_factor(len, reversed_arcs(forward.arcs));
  return {std::move(forward), std::move(backward)};
}

namespace {

std::vector<Edge> undirected_edges(const Factor& f) {
  std::vector<Edge> edges;
  for (const Arc& a : f.arcs)
    if (a.tail < a.head) edges.push_back({a.tail, a.head});
  return edges;
}

// Paired search output lists F, R(F), F′, R(F′), ...; keep one of each pair.
std::vector<UndirectedFactor> unpair(const std::vector<Factor>& factors, int len) {
  std::vector<UndirectedFactor> out;
  for (std::size_t i = 0; i < factors.size(); i += 2) {
    std::vector<Edge> edges;
    for (const Arc& a : factors[i].arcs) edges.push_back(Edge::of(a.tail, a.head));
    out.push_back(make_undirected_factor(len, std::move(edges)));
  }
  return out;
}

Digraph symmetric_of(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.a, e.b});
    arcs.push_back({e.b, e.a});
  }
  return Digraph::from_arcs(g.order(), std::move(arcs));
}

}  // namespace

BipartiteCycleResult bipartite_cycle_factorization(int x, int m) {
  require(m >= 4 && m % 2 == 0 && (2 * x) % m == 0 && x % 2 == 0,
          fmt::format("bipartite_cycle_factorization: no {}-cycle factorization of K_{{{},{}}}", m,
                      x, x));
  BipartiteCycleResult out;
  out.factorization.host = complete_bipartite_graph(x);
  const int g = 2 * x / m;
  auto matching = [&](int d) {
    std::vector<Edge> edges;
    for (int i = 0; i < x; ++i) edges.push_back(Edge::of(i, x + mod(i + d, x)));
    return edges;
  };
  if ((m / 2) % 2 == 0) {
    // d and d+g lie in the same class mod g; that class has m/2 members.
    for (int d = 0; d < x; ++d) {
      if ((d / g) % 2 != 0) continue;
      auto edges = matching(d);
      auto more = matching(d + g);
      edges.insert(edges.end(), more.begin(), more.end());
      out.factorization.factors.push_back(make_undirected_factor(m, std::move(edges)));
    }
    out.method = "matching-difference";
    return out;
  }
  SearchBudget budget;
  budget.time_limit = std::chrono::seconds(120);
  auto res = backtrack_search(symmetric_of(out.factorization.host), {{m, x / 2, true}}, budget);
  if (res.status != SearchStatus::Found)
    throw std::runtime_error(fmt::format(
        "bipartite_cycle_factorization: search for x={} m={} ended {}", x, m, to_string(res.status)));
  out.factorization.factors = unpair(res.factors, m);
  out.method = "search";
  return out;
}

UndirectedFactorization equipartite_one_factorization(int x, int y) {
  require(x >= 1 && y >= 2 && (x * y) % 2 == 0,
          fmt::format("equipartite_one_factorization: K_({}:{}) has odd order", x, y));
  UndirectedFactorization out{complete_equipartite_graph(x, y), {}};
  if (y % 2 == 0) {
    for (const auto& parts : one_factorization_complete(y).factors)
      for (int shift = 0; shift < x; ++shift) {
        std::vector<Edge> edges;
        for (const Edge& pq : parts.edges)
          for (int i = 0; i < x; ++i)
            edges.push_back(Edge::of(pq.a * x + i, pq.b * x + mod(i + shift, x)));
        out.factors.push_back(make_undirected_factor(2, std::move(edges)));
      }
    return out;
  }
  // y odd, x even: relabel K_2y so that round-robin factor 0 pairs the two
  // halves (a, 0), (a, 1) of each part, then blow every edge up to K_{h,h}.
  const int h = x / 2;
  const auto rr = one_factorization_complete(2 * y);
  std::vector<int> part(2 * y), half(2 * y);
  int next = 0;
  for (const Edge& e : rr.factors[0].edges) {
    part[e.a] = part[e.b] = next++;
    half[e.a] = 0;
    half[e.b] = 1;
  }
  auto id = [&](int v, int c) { return Vertex(part[v] * x + half[v] * h + c); };
  for (std::size_t f = 1; f < rr.factors.size(); ++f)
    for (int shift = 0; shift < h; ++shift) {
      std::vector<Edge> edges;
      for (const Edge& e : rr.factors[f].edges)
        for (int c = 0; c < h; ++c) edges.push_back(Edge::of(id(e.a, c), id(e.b, mod(c + shift, h))));
      out.factors.push_back(make_undirected_factor(2, std::move(edges)));
    }
  return out;
}

std::vector<Factor> directed_bipartite_factorization(int x, int ell) {
  require(ell >= 2 && ell % 2 == 0 && (2 * x) % ell == 0,
          fmt::format("directed_bipartite_factorization: no C{}-factorization of K*_({}:2)", ell, x));
  const int g = 2 * x / ell;
  std::vector<Factor> out;
  for (int k = 0; k < x; ++k) {
    std::vector<Arc> arcs;
    for (int i = 0; i < x; ++i) {
      arcs.push_back({i, x + mod(i + k, x)});
      arcs.push_back({x + i, mod(i - k + g, x)});
    }
    out.push_back(make_factor(ell, std::move(arcs)));
  }
  return out;
}

namespace {

using Triple = std::array<Vertex, 3>;

UndirectedFactorization kts_from_days(int n, const std::vector<std::vector<Triple>>& days) {
  UndirectedFactorization out{complete_graph(n), {}};
  for (const auto& day : days) {
    std::vector<Edge> edges;
    for (const Triple& t : day) {
      auto e = cycle_edges({t[0], t[1], t[2]});
      edges.insert(edges.end(), e.begin(), e.end());
    }
    out.factors.push_back(make_undirected_factor(3, std::move(edges)));
  }
  return out;
}

// Lines of AG(2,3), point (a, b) ↦ 3a + b, one parallel class per direction.
std::vector<std::vector<Triple>> affine_plane_days() {
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  std::vector<std::vector<Triple>> days;
  for (const auto& d : dirs) {
    std::vector<Triple> day;
    std::vector<char> seen(9, 0);
    for (int p = 0; p < 9; ++p) {
      if (seen[p]) continue;
      Triple t;
      for (int s = 0; s < 3; ++s) {
        const int a = mod(p / 3 + s * d[0], 3), b = mod(p % 3 + s * d[1], 3);
        t[s] = 3 * a + b;
        seen[t[s]] = 1;
      }
      day.push_back(t);
    }
    days.push_back(std::move(day));
  }
  return days;
}

// A fixed KTS(15); letters A..O are points 0..14.
std::vector<std::vector<Triple>> kts15_days() {
  static const char* const kDays[7] = {
      "ABJ CEM FKL HIN DGO", "ACH DEI FGM JLN BKO", "ADL BHM GIK CFN EJO",
      "AEG BIL CJK DMN FHO", "AFI BCD GHJ EKN LMO", "AKM DFJ EHL BGN CIO",
      "BEF CGL DHK IJM ANO"};
  std::vector<std::vector<Triple>> days;
  for (const char* text : kDays) {
    std::vector<Triple> day;
    for (const char* p = text; *p;) {
      day.push_back({p[0] - 'A', p[1] - 'A', p[2] - 'A'});
      p += p[3] ? 4 : 3;
    }
    days.push_back(std::move(day));
  }
  return days;
}

}  // namespace

namespace {

std::optional<std::filesystem::path> kts_cache_path(int n) {
  const char* dir = std::getenv("HWP_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / fmt::format("kts-{}.json", n);
}

// Cached systems are certificate documents of symmetric triangle factors on
// K_n*; anything that fails to parse or verify is ignored.
std::optional<UndirectedFactorization> load_cached_kts(int n) {
  auto path = kts_cache_path(n);
  if (!path) return std::nullopt;
  std::ifstream in(*path);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    const Certificate c = deserialize(text);
    if (c.host.order() != n) return std::nullopt;
    UndirectedFactorization out{complete_graph(n), {}};
    for (const Factor& f : c.factors) {
      if (!f.symmetric || f.cycle_length != 3) return std::nullopt;
      out.factors.push_back(make_undirected_factor(3, undirected_edges(f)));
    }
    if (!check_undirected(out).empty()) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached_kts(int n, const UndirectedFactorization& f) {
  auto path = kts_cache_path(n);
  if (!path) return;
  Certificate c = symmetric_lift(f);
  c.host_desc = complete_host(n);
  c.trace.step = "kirkman_triple_system";
  c.trace.param("n", n);
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  auto tmp = *path;
  tmp += fmt::format(".tmp{}", std::hash<std::string>{}(path->string() + std::to_string(
                                   std::chrono::steady_clock::now().time_since_epoch().count())));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << serialize(c);
    if (!out) return;
  }
  std::filesystem::rename(tmp, *path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

UndirectedFactorization kirkman_triple_system(int n) {
  require(n >= 3 && n % 6 == 3, fmt::format("kirkman_triple_system: n={} is not 3 mod 6", n));
  if (n == 3) return kts_from_days(3, {{{0, 1, 2}}});
  if (n == 9) return kts_from_days(9, affine_plane_days());
  if (n == 15) return kts_from_days(15, kts15_days());
  if (auto cached = load_cached_kts(n)) return *cached;
  SearchBudget budget;
  budget.time_limit = std::chrono::seconds(300);
  budget.node_limit = 500'000'000;
  auto res = backtrack_search(complete_symmetric(n), {{3, (n - 1) / 2, true}}, budget);
  if (res.status != SearchStatus::Found)
    throw std::runtime_error(
        fmt::format("kirkman_triple_system: search for n={} ended {}", n, to_string(res.status)));
  UndirectedFactorization out{complete_graph(n), unpair(res.factors, 3)};
  store_cached_kts(n, out);
  return out;
}

}  // namespace hwp
