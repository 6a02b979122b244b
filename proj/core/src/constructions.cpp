#include "hwp/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "hwp/building_blocks.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

namespace hwp {
namespace {

using Point = std::pair<int, int>;  // (layer, index) in Z₂ × Z_m

void require(bool ok, const std::string& what) {
  if (!ok) throw UnsupportedParameters(what);
}

std::vector<Vertex> at(int m, const std::vector<Point>& points) {
  std::vector<Vertex> out;
  out.reserve(points.size());
  for (auto [l, i] : points) out.push_back(layered(l, i, m));
  return out;
}

std::vector<Arc> arcs_of(const std::vector<Vertex>& cycle) { return cycle_arcs(cycle); }

std::vector<Arc> unite(std::vector<Arc> a, const std::vector<Arc>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Arc> shifted(const std::vector<Arc>& arcs, int m) { return translate(arcs, m, 1, 0); }

// Host arcs not used by any factor.
std::vector<Arc> leftover(const Digraph& host, const std::vector<Factor>& factors) {
  std::set<Arc> used;
  for (const Factor& f : factors) used.insert(f.arcs.begin(), f.arcs.end());
  std::vector<Arc> out;
  for (const Arc& a : host.arcs())
    if (!used.count(a)) out.push_back(a);
  return out;
}

// An undirected union of even cycles of one length, turned into either two
// K₂*-factors (alternate edges, lifted) or two opposite C⃗-factors.
std::vector<Factor> as_k2_pair(const std::vector<Edge>& edges, int len, int order) {
  const UndirectedFactor uf = make_undirected_factor(len, edges);
  std::vector<std::pair<Vertex, Vertex>> even, odd;
  for (const auto& c : factor_cycles(uf, order)) {
    if (c.size() % 2 != 0) throw TranscriptionFault("odd cycle in a K2 split");
    for (std::size_t i = 0; i < c.size(); ++i)
      (i % 2 == 0 ? even : odd).push_back({c[i], c[(i + 1) % c.size()]});
  }
  return {matching_factor(even), matching_factor(odd)};
}

std::vector<Factor> as_directed_pair(const std::vector<Edge>& edges, int len, int order) {
  Factor sym;
  sym.cycle_length = len;
  sym.symmetric = true;
  for (const Edge& e : edges) {
    sym.arcs.push_back({e.a, e.b});
    sym.arcs.push_back({e.b, e.a});
  }
  std::sort(sym.arcs.begin(), sym.arcs.end());
  auto [f, b] = orient_split(sym, order);
  return {std::move(f), std::move(b)};
}

std::vector<Factor> as_pair(bool k2, const std::vector<Edge>& edges, int len, int order) {
  return k2 ? as_k2_pair(edges, len, order) : as_directed_pair(edges, len, order);
}

// Underlying edges of a directed factor.
std::vector<Edge> edges_of(const Factor& f) {
  std::vector<Edge> out;
  for (const Arc& a : f.arcs) out.push_back(Edge::of(a.tail, a.head));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_of(const std::vector<Factor>& fs, int len) {
  return static_cast<int>(std::count_if(fs.begin(), fs.end(), [&](const Factor& f) {
    return f.cycle_length == len && !f.symmetric;
  }));
}

SearchBudget construction_budget() {
  SearchBudget b;
  b.time_limit = std::chrono::seconds(60);
  b.seed = 1;
  return b;
}

// Verify-on-construct gate. Rejected factors are replaced by a search over
// the arcs they should have covered; the replacement is recorded as a repair.
Certificate finish(Certificate c, const std::string& location, KindPair kinds, int r, int s) {
  const int total = r + s;
  auto counts_ok = [&](const Certificate& x) {
    return static_cast<int>(x.factors.size()) == total && count_of(x.factors, kinds.first) == r &&
           count_of(x.factors, kinds.second) == s;
  };
  VerificationReport report = check_certificate(c);
  if (report.accepted() && counts_ok(c)) return c;

  std::set<int> bad;
  for (const Failure& f : report.failures)
    if (f.factor_index >= 0) bad.insert(f.factor_index);
  if (bad.empty() && report.accepted())
    throw TranscriptionFault(fmt::format("{}: wrong factor kinds", location));
  std::vector<Factor> kept;
  std::map<int, int> need;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (bad.count(static_cast<int>(i))) need[c.factors[i].cycle_length]++;
    else kept.push_back(c.factors[i]);
  }
  std::vector<SearchKind> spec;
  for (auto [len, n] : need) spec.push_back({len, n, false});
  const Digraph rest = Digraph::from_arcs(c.host.order(), leftover(c.host, kept));
  SearchResult res;
  try {
    res = backtrack_search(rest, spec, construction_budget());
  } catch (const std::invalid_argument&) {
    res.status = SearchStatus::Exhausted;
  }
  if (res.status != SearchStatus::Found)
    throw TranscriptionFault(fmt::format("{}: verification failed and no repair found\n{}",
                                         location, describe(report)));
  std::string which;
  for (int i : bad) which += (which.empty() ? "" : ",") + std::to_string(i);
  c.repairs.push_back({location, fmt::format("factors {} as transcribed", which),
                       fmt::format("factors {} re-derived by search", which)});
  kept.insert(kept.end(), res.factors.begin(), res.factors.end());
  c.factors = std::move(kept);
  report = check_certificate(c);
  if (!report.accepted() || !counts_ok(c))
    throw TranscriptionFault(fmt::format("{}: repaired certificate rejected\n{}", location,
                                         describe(report)));
  return c;
}

Certificate make_cert(Digraph host, HostDescriptor desc, std::vector<Factor> factors, Trace trace) {
  Certificate c;
  c.host = std::move(host);
  c.host_desc = std::move(desc);
  c.factors = std::move(factors);
  c.trace = std::move(trace);
  return c;
}

Trace step(std::string name, int m, int r) {
  Trace t;
  t.step = std::move(name);
  t.param("m", m).param("r", r);
  return t;
}

HostDescriptor cm2_desc(int m) { return explicit_host(2 * m, fmt::format("C{}*[2]", m)); }
HostDescriptor cm2i_desc(int m) { return explicit_host(2 * m, fmt::format("C{}*[2]+I{}*", m, 2 * m)); }
HostDescriptor gamma_desc(int m) { return explicit_host(2 * m, fmt::format("Gamma{}*", m)); }

}  // namespace

Certificate searched_factorization(const Digraph& host, const HostDescriptor& desc,
                                   const std::vector<SearchKind>& kinds, const std::string& label) {
  const SearchBudget budget = construction_budget();
  auto res = backtrack_search(host, kinds, budget);
  if (res.status != SearchStatus::Found)
    throw UnsupportedParameters(fmt::format("{}: search ended {}", label, to_string(res.status)));
  Trace t;
  t.step = "search";
  t.param("target", label).param("seed", static_cast<long long>(budget.seed));
  std::string spec;
  for (const SearchKind& k : kinds)
    spec += fmt::format("{}{}x{}{}", spec.empty() ? "" : "+", kind_name(k.cycle_length), k.count,
                        k.paired ? "p" : "");
  t.param("spec", spec);
  return make_cert(host, desc, std::move(res.factors), std::move(t));
}

namespace {

// C_m[2] = two edge-disjoint copies of H, H given by its cycle lengths.
std::pair<std::vector<Edge>, std::vector<Edge>> cm2_halves(int m, const std::vector<int>& h) {
  std::vector<Vertex> walk(m);
  for (int i = 0; i < m; ++i) walk[i] = i;
  auto split = haggkvist_double(walk, true, m, h);
  return {std::move(split.first), std::move(split.second)};
}

// r/2 halves become K₂*-pairs, the rest directed pairs of length `len`.
std::vector<Factor> cm2_factors(int m, int r, const std::vector<int>& h, int len) {
  auto [a, b] = cm2_halves(m, h);
  auto out = as_pair(r >= 2, a, len, 2 * m);
  auto more = as_pair(r >= 4, b, len, 2 * m);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// F*ₘ[2] as its two 1-factors: same-layer and cross-layer double arcs.
std::vector<Factor> fm2_k2_factors(int m) {
  std::vector<std::pair<Vertex, Vertex>> same, cross;
  for (auto [a, b] : f_matching(m))
    for (int l = 0; l < 2; ++l) {
      same.push_back({layered(l, a, m), layered(l, b, m)});
      if (l == 0) {
        cross.push_back({layered(0, a, m), layered(1, b, m)});
        cross.push_back({layered(1, a, m), layered(0, b, m)});
      }
    }
  return {matching_factor(same), matching_factor(cross)};
}

Trace haggkvist_trace(const std::string& h) {
  Trace t;
  t.step = "haggkvist_double";
  t.param("H", h);
  return t;
}

}  // namespace

Certificate cm2_k2_vs_c2m(int m, int r) {
  require(m >= 3, fmt::format("cm2_k2_vs_c2m: m={} too small", m));
  require(r == 0 || r == 2 || r == 4, fmt::format("cm2_k2_vs_c2m: r={} not in {{0,2,4}}", r));
  Trace t = step("cm2_k2_vs_c2m", m, r);
  t.children.push_back(haggkvist_trace(fmt::format("C{}", 2 * m)));
  return finish(make_cert(cm_star_blowup(m), cm2_desc(m), cm2_factors(m, r, {2 * m}, 2 * m), t),
                t.step, {kK2, 2 * m}, r, 4 - r);
}

Certificate cm2_k2_vs_cm(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("cm2_k2_vs_cm: m={} must be even", m));
  require(r == 0 || r == 2 || r == 4, fmt::format("cm2_k2_vs_cm: r={} not in {{0,2,4}}", r));
  Trace t = step("cm2_k2_vs_cm", m, r);
  t.children.push_back(haggkvist_trace(fmt::format("2C{}", m)));
  return finish(make_cert(cm_star_blowup(m), cm2_desc(m), cm2_factors(m, r, {m, m}, m), t), t.step,
                {kK2, m}, r, 4 - r);
}

Certificate gamma_k2_vs_c2m(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("gamma_k2_vs_c2m: m={} must be even", m));
  require(r % 2 == 0 && r >= 0 && r <= 6, fmt::format("gamma_k2_vs_c2m: r={} unsupported", r));
  if (r == 0) {
    Certificate c = searched_factorization(named_graph_Gamma(m), gamma_desc(m), {{2 * m, 3, true}},
                                           fmt::format("Gamma{}* into C{}-factor pairs", m, 2 * m));
    Trace t = step("gamma_k2_vs_c2m", m, r);
    t.children.push_back(std::move(c.trace));
    c.trace = std::move(t);
    return finish(std::move(c), "gamma_k2_vs_c2m", {kK2, 2 * m}, 0, 6);
  }
  Certificate inner = cm2_k2_vs_c2m(m, r - 2);
  auto factors = fm2_k2_factors(m);
  factors.insert(factors.end(), inner.factors.begin(), inner.factors.end());
  Trace t = step("gamma_k2_vs_c2m", m, r);
  t.children.push_back(std::move(inner.trace));
  return finish(make_cert(named_graph_Gamma(m), gamma_desc(m), std::move(factors), t), t.step,
                {kK2, 2 * m}, r, 6 - r);
}

namespace {

std::vector<Point> base_cycle(int m) {  // (0,0), (0,1), ..., (0,m−1)
  std::vector<Point> p;
  for (int i = 0; i < m; ++i) p.push_back({0, i});
  return p;
}

std::vector<Point> alternating_cycle(int m) {  // (i mod 2, i)
  std::vector<Point> p;
  for (int i = 0; i < m; ++i) p.push_back({i % 2, i});
  return p;
}

std::vector<Point> zigzag_cycle(int m) {
  std::vector<Point> x{{0, 0}};
  for (int i = 1; i < m; ++i) {
    const int f = i % 2;
    x.push_back(i % 4 == 1 || i % 4 == 2 ? Point{f, m / 2 - i / 2} : Point{f, m / 2 + i / 2});
  }
  return x;
}

// C ⊕ (C + (1,0)) and C ⊕ R(C + (1,0)).
std::vector<Arc> with_shift(int m, const std::vector<Point>& c) {
  const auto a = arcs_of(at(m, c));
  return unite(a, shifted(a, m));
}
std::vector<Arc> with_reversed_shift(int m, const std::vector<Point>& c) {
  const auto a = arcs_of(at(m, c));
  return unite(a, reversed_arcs(shifted(a, m)));
}

Factor residual_factor(const Digraph& host, const std::vector<Factor>& fs, int len) {
  return make_factor(len, leftover(host, fs));
}

// Five Hamilton cycles of C_m*[2] ⊕ I*₂ₘ, odd m ≥ 5.
std::vector<Factor> five_hamilton_odd(int m) {
  const int n = 2 * m;
  std::vector<Point> c0, u(n), x(n), y(n);
  for (int i = 0; i < n; ++i) c0.push_back({i / m, i});
  for (int i = 0; i < m; ++i) {
    u[2 * i] = i <= (m - 1) / 2 ? Point{0, 2 * i} : Point{0, -2 * i - 1};
    u[2 * i + 1] = i <= (m - 3) / 2 ? Point{1, 2 * i + 1} : Point{1, -2 * i - 2};
  }
  for (int i = 0; i < n - 2; ++i)
    x[i] = i % 4 == 0 || i % 4 == 3 ? Point{0, m - i / 2} : Point{1, m - i / 2};
  x[n - 2] = {1, 1};
  x[n - 1] = {0, 1};
  for (int i = 0; i < n; ++i)
    if (i < m - 2 || i >= m + 2) y[i] = {u[i].first + 1, u[i].second + 2};
  y[m - 2] = {1, 0};
  y[m - 1] = {0, 1};
  y[m] = {1, 1};
  y[m + 1] = {0, 0};
  std::vector<Factor> fs;
  for (const auto* c : {&c0, &u, &x, &y}) fs.push_back(make_factor(n, arcs_of(at(m, *c))));
  fs.push_back(residual_factor(cm_star_blowup_plus_I(m), fs, n));
  return fs;
}

// Five Hamilton cycles of C_m*[2] ⊕ I*₂ₘ, even m ≥ 6.
std::vector<Factor> five_hamilton_even(int m) {
  const int n = 2 * m;
  std::vector<Point> c0, x(n), u(n), y(n), z(n);
  for (int i = 0; i < n; ++i) c0.push_back({i / m, i});
  x[0] = {0, 0};
  for (int i = 1; i <= n - 8; ++i)
    x[i] = i % 4 == 1 || i % 4 == 2 ? Point{0, m - (i + 2) / 2} : Point{1, m - (i + 2) / 2 + 1};
  for (int i = 0; i < 3; ++i) x[n - 6 + 2 * i] = {0, 3 - i};
  for (int i = 0; i < 4; ++i) x[n - 7 + 2 * i] = {1, 3 - i};
  u[0] = {0, 0};
  u[1] = {1, 0};
  u[2] = {0, m - 1};
  for (int i = 3; i <= n - 9; ++i)
    u[i] = i % 4 == 0 || i % 4 == 1 ? Point{0, m - (i - 1) / 2 - 1} : Point{1, m - (i - 1) / 2};
  for (int j = 0; j < 8; ++j)
    u[n - 8 + j] = j % 4 == 0 || j % 4 == 2 ? Point{0, 4 - j / 2} : Point{1, 4 - j / 2};
  if (m == 6) u[3] = {1, 5};
  for (int i = 1; i <= m - 4; ++i) y[2 * i + 2] = {0, m - i};
  for (int i = 1; i <= m - 3; ++i) y[2 * i + 1] = {1, m - i};
  y[0] = {0, 0};
  y[1] = {1, 1};
  y[2] = {1, 0};
  y[n - 4] = {1, 2};
  y[n - 3] = {0, 3};
  y[n - 2] = {0, 2};
  y[n - 1] = {0, 1};
  for (int i = 1; i <= m - 5; ++i) z[9 + 2 * i] = {0, 4 + i};
  for (int i = 0; i <= m - 6; ++i) z[10 + 2 * i] = {1, 4 + i};
  const Point head[10] = {{0, 0}, {1, m - 1}, {1, 0}, {0, 1}, {1, 2},
                          {1, 1}, {0, 2},     {1, 3}, {0, 4}, {0, 3}};
  for (int k = 0; k < 10; ++k) z[k] = head[k];
  std::vector<Factor> fs;
  for (const auto* c : {&c0, &x, &u, &y, &z}) fs.push_back(make_factor(n, arcs_of(at(m, *c))));
  return fs;
}

}  // namespace

Certificate cm2_plus_I_k2_vs_c2m(int m, int r) {
  require(m >= 3, fmt::format("cm2_plus_I_k2_vs_c2m: m={} too small", m));
  require(r == 0 || r == 1 || r == 3 || r == 5,
          fmt::format("cm2_plus_I_k2_vs_c2m: r={} not in {{0,1,3,5}}", r));
  Trace t = step("cm2_plus_I_k2_vs_c2m", m, r);
  std::vector<Factor> fs;
  if (r == 0) {
    require(m >= 5, fmt::format("cm2_plus_I_k2_vs_c2m: r=0 needs m >= 5, got m={}", m));
    fs = m % 2 == 1 ? five_hamilton_odd(m) : five_hamilton_even(m);
    t.param("family", m % 2 == 1 ? "odd" : "even");
  } else {
    Certificate inner = cm2_k2_vs_c2m(m, r - 1);
    fs.push_back(named_factor_I(m));
    fs.insert(fs.end(), inner.factors.begin(), inner.factors.end());
    t.children.push_back(std::move(inner.trace));
  }
  return finish(make_cert(cm_star_blowup_plus_I(m), cm2i_desc(m), std::move(fs), t), t.step,
                {kK2, 2 * m}, r, 5 - r);
}

Certificate cm2_plus_I_k2_vs_cm(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("cm2_plus_I_k2_vs_cm: m={} must be even", m));
  require(r == 1 || r == 3 || r == 5, fmt::format("cm2_plus_I_k2_vs_cm: r={} not in {{1,3,5}}", r));
  Certificate inner = cm2_k2_vs_cm(m, r - 1);
  std::vector<Factor> fs{named_factor_I(m)};
  fs.insert(fs.end(), inner.factors.begin(), inner.factors.end());
  Trace t = step("cm2_plus_I_k2_vs_cm", m, r);
  t.children.push_back(std::move(inner.trace));
  return finish(make_cert(cm_star_blowup_plus_I(m), cm2i_desc(m), std::move(fs), t), t.step,
                {kK2, m}, r, 5 - r);
}

Certificate cm2_plus_I_cm_vs_c2m(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("cm2_plus_I_cm_vs_c2m: m={} must be even", m));
  if (r == 0) {
    Certificate c = cm2_plus_I_k2_vs_c2m(m, 0);
    return finish(std::move(c), "cm2_plus_I_cm_vs_c2m", {m, 2 * m}, 0, 5);
  }
  require(r == 1 || r == 3, fmt::format("cm2_plus_I_cm_vs_c2m: r={} not in {{0,1,3}}", r));
  const Digraph host = cm_star_blowup_plus_I(m);
  const Factor f1 = make_factor(m, with_shift(m, base_cycle(m)));
  std::vector<Point> u;
  for (int i = 0; i < m; ++i) {
    u.push_back({0, i});
    u.push_back({1, i});
  }
  const auto c1 = arcs_of(at(m, u));
  std::vector<Factor> fs{f1, make_factor(2 * m, c1), make_factor(2 * m, shifted(c1, m))};
  if (r == 1) {
    std::vector<Point> x(2 * m);
    x[0] = {0, 0};
    x[m] = {1, 0};
    for (int i = 0; i < m - 1; ++i) {
      x[i + 1] = {0, m - 1 - i};
      x[i + 1 + m] = {1, m - 1 - i};
    }
    fs.push_back(make_factor(2 * m, arcs_of(at(m, x))));
    fs.push_back(residual_factor(host, fs, 2 * m));
  } else {
    fs.push_back(make_factor(m, reversed_arcs(f1.arcs)));
    fs.push_back(make_factor(m, reversed_arcs(with_shift(m, alternating_cycle(m)))));
  }
  Trace t = step("cm2_plus_I_cm_vs_c2m", m, r);
  return finish(make_cert(host, cm2i_desc(m), std::move(fs), t), t.step, {m, 2 * m}, r, 5 - r);
}

Certificate cm2_cm_vs_c2m(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("cm2_cm_vs_c2m: m={} must be even", m));
  require(r == 0 || r == 2 || r == 4, fmt::format("cm2_cm_vs_c2m: r={} not in {{0,2,4}}", r));
  Trace t = step("cm2_cm_vs_c2m", m, r);
  if (r != 2) {
    Certificate inner = r == 0 ? cm2_k2_vs_c2m(m, 0) : cm2_k2_vs_cm(m, 0);
    t.children.push_back(std::move(inner.trace));
    inner.trace = t;
    return finish(std::move(inner), t.step, {m, 2 * m}, r, 4 - r);
  }
  std::vector<Point> uu;
  for (int i = 0; i < 2 * m; ++i) uu.push_back({i < m ? 0 : 1, i});
  std::vector<Point> vv = uu;
  for (int i = 1; i < 2 * m; i += 2) vv[i].first += 1;
  const auto f1 = with_shift(m, base_cycle(m));
  std::vector<Factor> fs{make_factor(2 * m, arcs_of(at(m, uu))),
                         make_factor(2 * m, arcs_of(at(m, vv))),
                         make_factor(m, reversed_arcs(f1)),
                         make_factor(m, reversed_arcs(with_shift(m, alternating_cycle(m))))};
  return finish(make_cert(cm_star_blowup(m), cm2_desc(m), std::move(fs), t), t.step, {m, 2 * m}, 2, 2);
}

Certificate gamma_cm_vs_c2m(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("gamma_cm_vs_c2m: m={} must be even", m));
  require(r == 0 || r == 6, fmt::format("gamma_cm_vs_c2m: r={} not in {{0,6}}", r));
  Trace t = step("gamma_cm_vs_c2m", m, r);
  const Digraph host = named_graph_Gamma(m);
  if (r == 0 || m % 4 == 0) {
    const int len = r == 0 ? 2 * m : m;
    Certificate c = searched_factorization(host, gamma_desc(m), {{len, 3, true}},
                                           fmt::format("Gamma{}* into C{}-factor pairs", m, len));
    t.children.push_back(std::move(c.trace));
    c.trace = std::move(t);
    return finish(std::move(c), "gamma_cm_vs_c2m", {m, 2 * m}, r, 6 - r);
  }
  std::vector<Point> u, y{{0, 0}, {0, m / 2}, {1, m / 2 + 1}, {1, m / 2 - 1}};
  for (int i = 0; i < m; ++i) u.push_back(i <= m / 2 ? Point{1, m - 1 - i} : Point{0, m - 1 - i});
  for (int i = 4; i < m; ++i) {
    const int sign_odd = i % 2 == 0 ? -1 : 1;  // (−1)^(i+1)
    y.push_back(i % 4 == 0 || i % 4 == 1 ? Point{1, m / 2 + sign_odd * (i / 2)}
                                         : Point{0, m / 2 - sign_odd * (i / 2)});
  }
  const auto g1 = with_reversed_shift(m, zigzag_cycle(m));
  std::vector<Factor> fs{make_factor(m, with_shift(m, base_cycle(m))), make_factor(m, g1),
                         make_factor(m, reversed_arcs(g1)), make_factor(m, with_shift(m, u)),
                         make_factor(m, with_shift(m, y))};
  fs.push_back(residual_factor(host, fs, m));
  return finish(make_cert(host, gamma_desc(m), std::move(fs), t), t.step, {m, 2 * m}, 6, 0);
}

Certificate gamma_k2_vs_cm(int m, int r) {
  require(m >= 4 && m % 2 == 0, fmt::format("gamma_k2_vs_cm: m={} must be even", m));
  require(r >= 0 && r <= 6 && r != 5, fmt::format("gamma_k2_vs_cm: r={} unsupported", r));
  Trace t = step("gamma_k2_vs_cm", m, r);
  const Digraph host = named_graph_Gamma(m);
  if (r == 0) {
    Certificate c = gamma_cm_vs_c2m(m, 6);
    t.children.push_back(std::move(c.trace));
    c.trace = std::move(t);
    return finish(std::move(c), "gamma_k2_vs_cm", {kK2, m}, 0, 6);
  }
  if (r % 2 == 0) {
    Certificate inner = cm2_k2_vs_cm(m, r - 2);
    auto fs = fm2_k2_factors(m);
    fs.insert(fs.end(), inner.factors.begin(), inner.factors.end());
    t.children.push_back(std::move(inner.trace));
    return finish(make_cert(host, gamma_desc(m), std::move(fs), t), t.step, {kK2, m}, r, 6 - r);
  }
  require(m % 4 == 2, fmt::format("gamma_k2_vs_cm: odd r needs m = 2 mod 4, got m={}", m));
  const auto c0 = with_shift(m, base_cycle(m));
  std::vector<Factor> fs{fm2_k2_factors(m)[0]};
  if (r == 1) {
    fs.push_back(make_factor(m, c0));
    fs.push_back(make_factor(m, reversed_arcs(c0)));
  } else {
    auto k2 = as_k2_pair(edges_of(make_factor(m, c0)), m, 2 * m);
    fs.insert(fs.end(), k2.begin(), k2.end());
  }
  fs.push_back(make_factor(m, with_reversed_shift(m, alternating_cycle(m))));
  fs.push_back(make_factor(m, with_reversed_shift(m, zigzag_cycle(m))));
  fs.push_back(residual_factor(host, fs, m));
  return finish(make_cert(host, gamma_desc(m), std::move(fs), t), t.step, {kK2, m}, r, 6 - r);
}

namespace {

using Cycles = std::vector<std::vector<Vertex>>;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Factor c4_factor(const Cycles& cycles) { return cycles_factor(4, cycles); }

// C₄*[2] ⊕ I₈*: five C⃗₄-factors.
const std::vector<Cycles> kC42I8AllC4 = {{{0, 1, 2, 3}, {4, 5, 6, 7}},
                                         {{0, 3, 2, 1}, {4, 7, 6, 5}},
                                         {{0, 5, 1, 4}, {2, 7, 3, 6}},
                                         {{0, 4, 3, 7}, {1, 5, 2, 6}},
                                         {{0, 7, 2, 5}, {1, 6, 3, 4}}};
// C₄*[2] ⊕ I₈*: three C⃗₄-factors and two K₂*-factors.
const std::vector<Cycles> kC42I8Mixed = {{{0, 1, 2, 3}, {4, 5, 6, 7}},
                                         {{0, 3, 6, 5}, {1, 4, 7, 2}},
                                         {{0, 5, 4, 1}, {2, 7, 6, 3}}};
const std::vector<Pairs> kC42I8MixedK2 = {{{0, 4}, {1, 5}, {2, 6}, {3, 7}},
                                          {{0, 7}, {1, 6}, {2, 5}, {3, 4}}};

const std::vector<Pairs> kK12K2First = {{{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}},
                                        {{0, 10}, {4, 6}, {1, 5}, {7, 11}, {2, 9}, {3, 8}}};
const std::vector<Cycles> kK12C4First = {
    {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}, {{0, 2, 1, 4}, {3, 5, 7, 6}, {8, 11, 10, 9}},
    {{0, 3, 1, 8}, {2, 4, 11, 6}, {5, 9, 7, 10}}, {{0, 4, 2, 11}, {1, 6, 8, 10}, {3, 7, 9, 5}},
    {{0, 5, 8, 7}, {1, 3, 4, 9}, {2, 10, 6, 11}}, {{0, 7, 5, 2}, {1, 10, 8, 4}, {3, 6, 9, 11}},
    {{0, 8, 6, 1}, {2, 5, 10, 7}, {3, 11, 9, 4}}, {{0, 9, 6, 5}, {1, 11, 4, 8}, {2, 7, 3, 10}},
    {{0, 11, 1, 9}, {2, 6, 10, 3}, {4, 7, 8, 5}}};
const std::vector<Pairs> kK12K2Second = {{{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}},
                                         {{0, 10}, {4, 6}, {1, 5}, {7, 11}, {2, 9}, {3, 8}},
                                         {{0, 8}, {2, 6}, {1, 10}, {4, 7}, {3, 11}, {5, 9}},
                                         {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}}};
const std::vector<Cycles> kK12C4Second = {
    {{0, 2, 1, 3}, {4, 8, 11, 9}, {5, 7, 10, 6}}, {{0, 3, 10, 5}, {1, 8, 6, 11}, {2, 4, 9, 7}},
    {{0, 4, 11, 2}, {1, 6, 10, 9}, {3, 5, 8, 7}}, {{0, 5, 6, 9}, {1, 2, 11, 4}, {3, 7, 8, 10}},
    {{0, 7, 9, 11}, {1, 4, 3, 6}, {2, 10, 8, 5}}, {{0, 9, 10, 7}, {1, 11, 6, 8}, {2, 5, 3, 4}},
    {{0, 11, 8, 4}, {1, 9, 6, 3}, {2, 7, 5, 10}}};

const std::vector<Cycles> kK43C4 = {
    {{0, 4, 2, 5}, {1, 8, 3, 11}, {6, 9, 7, 10}}, {{0, 5, 1, 7}, {2, 9, 4, 11}, {3, 8, 6, 10}},
    {{0, 7, 1, 9}, {2, 4, 3, 10}, {5, 11, 6, 8}}, {{0, 8, 1, 10}, {2, 7, 3, 5}, {4, 9, 6, 11}},
    {{0, 9, 2, 11}, {1, 5, 3, 6}, {4, 10, 7, 8}}, {{0, 10, 4, 8}, {1, 11, 5, 9}, {2, 6, 3, 7}},
    {{0, 11, 3, 4}, {1, 6, 2, 10}, {5, 8, 7, 9}}};
const Pairs kK43K2 = {{0, 6}, {1, 4}, {2, 8}, {3, 9}, {5, 10}, {7, 11}};

std::vector<Factor> table_factors(const std::vector<Pairs>& k2, const std::vector<Cycles>& c4) {
  std::vector<Factor> fs;
  for (const auto& p : k2) fs.push_back(matching_factor(p));
  for (const auto& c : c4) fs.push_back(c4_factor(c));
  return fs;
}

Trace table_trace(const std::string& name, int r) {
  Trace t;
  t.step = name;
  t.param("r", r).param("source", "table");
  return t;
}

// Four undirected C₄-factors of K_(4:3), as directed pairs F, R(F).
const Certificate& k43_c4_pairs() {
  static const Certificate c = searched_factorization(
      complete_symmetric_equipartite(4, 3).graph, equipartite_host(4, 3), {{4, 4, true}},
      "K(4:3)* into C4-factor pairs");
  return c;
}

// K₄*-pieces of K₁₂* minus I = {(0,1),(2,3),...}: the C₄ (a, a+2, a+1, a+3)
// on each part {a..a+3}.
std::vector<Edge> k12_part_cycles() {
  std::vector<Edge> edges;
  for (int a = 0; a < 12; a += 4) {
    auto e = cycle_edges({a, a + 2, a + 1, a + 3});
    edges.insert(edges.end(), e.begin(), e.end());
  }
  return edges;
}

}  // namespace

Certificate c42_plus_I8(int r) {
  require(r == 0 || r == 1 || r == 2 || r == 3 || r == 5,
          fmt::format("c42_plus_I8: r={} not in {{0,1,2,3,5}}", r));
  if (r % 2 == 1) {
    Certificate c = cm2_plus_I_k2_vs_cm(4, r);
    return finish(std::move(c), "c42_plus_I8", {kK2, 4}, r, 5 - r);
  }
  auto fs = r == 0 ? table_factors({}, kC42I8AllC4) : table_factors(kC42I8MixedK2, kC42I8Mixed);
  return finish(make_cert(cm_star_blowup_plus_I(4), cm2i_desc(4), std::move(fs),
                          table_trace("c42_plus_I8", r)),
                "c42_plus_I8", {kK2, 4}, r, 5 - r);
}

Certificate k43_factorization(int r) {
  require(r == 0 || r == 1 || r == 2 || r == 4 || r == 6 || r == 8,
          fmt::format("k43_factorization: r={} not in {{0,1,2,4,6,8}}", r));
  const Digraph host = complete_symmetric_equipartite(4, 3).graph;
  if (r == 1)
    return finish(make_cert(host, equipartite_host(4, 3), table_factors({kK43K2}, kK43C4),
                            table_trace("k43_factorization", r)),
                  "k43_factorization", {kK2, 4}, 1, 7);
  const Certificate& pairs = k43_c4_pairs();
  std::vector<Factor> fs;
  for (int j = 0; j < 4; ++j) {
    auto p = as_pair(2 * j < r, edges_of(pairs.factors[2 * j]), 4, 12);
    fs.insert(fs.end(), p.begin(), p.end());
  }
  Trace t = table_trace("k43_factorization", r);
  t.params["source"] = "lift";
  t.children.push_back(pairs.trace);
  return finish(make_cert(host, equipartite_host(4, 3), std::move(fs), t), t.step, {kK2, 4}, r,
                8 - r);
}

Certificate k12_factorization(int r) {
  require(r >= 0 && r <= 11 && (r % 2 == 1 || r <= 4),
          fmt::format("k12_factorization: r={} not in {{0,1,2,3,4,5,7,9,11}}", r));
  const Digraph host = complete_symmetric(12);
  if (r == 2 || r == 4) {
    auto fs = r == 2 ? table_factors(kK12K2First, kK12C4First)
                     : table_factors(kK12K2Second, kK12C4Second);
    return finish(make_cert(host, complete_host(12), std::move(fs), table_trace("k12_factorization", r)),
                  "k12_factorization", {kK2, 4}, r, 11 - r);
  }
  Trace t = table_trace("k12_factorization", r);
  if (r == 0) {
    Certificate c = searched_factorization(host, complete_host(12), {{4, 11, false}}, "K12* into C4-factors");
    t.params["source"] = "search";
    t.children.push_back(std::move(c.trace));
    c.trace = std::move(t);
    return finish(std::move(c), "k12_factorization", {kK2, 4}, 0, 11);
  }
  // I, the part cycles and the four C₄-factors of K_(4:3), each of the last
  // five lifted either to two K₂*-factors or to two C⃗₄-factors.
  t.params["source"] = "lift";
  Pairs ipairs;
  for (int a = 0; a < 12; a += 2) ipairs.push_back({a, a + 1});
  std::vector<Factor> fs{matching_factor(ipairs)};
  std::vector<std::vector<Edge>> pieces{k12_part_cycles()};
  const Certificate& pairs = k43_c4_pairs();
  for (int j = 0; j < 4; ++j) pieces.push_back(edges_of(pairs.factors[2 * j]));
  for (int j = 0; j < 5; ++j) {
    auto p = as_pair(2 * j + 1 < r, pieces[j], 4, 12);
    fs.insert(fs.end(), p.begin(), p.end());
  }
  t.children.push_back(pairs.trace);
  return finish(make_cert(host, complete_host(12), std::move(fs), t), t.step, {kK2, 4}, r, 11 - r);
}

}  // namespace hwp
