// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Tolerances are exact; time limits are
// wall-clock per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hwp/building_blocks.hpp"
#include "hwp/certificate_io.hpp"
#include "hwp/composer.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"
#include "support/cycles.hpp"
#include "support/fixtures.hpp"

using namespace hwp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& what) {
    pass = false;
    if (problems.size() < 10) problems.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

ParamRequest request(Family f, int v, int m, int r) { return {f, v, m, r, v - 1 - r}; }

// Solves q and checks it against the verifier and the exact kind counts.
void solve_and_check(const ParamRequest& q, Outcome& out) {
  const std::string id = to_string(q);
  const FeasibilityVerdict verdict = feasibility(q);
  if (verdict.kind != VerdictKind::Solvable) {
    out.fail(id + ": verdict " + to_string(verdict.kind) + " (" + verdict.detail + ")");
    return;
  }
  try {
    const Certificate c = solve(q);
    const VerificationReport report = check_certificate(c);
    if (!report.accepted()) out.fail(id + ": rejected\n" + describe(report));
    const KindPair k = q.kinds();
    if (c.count_kind(k.first) != q.r || c.count_kind(k.second) != q.s ||
        c.factors.size() != static_cast<std::size_t>(q.v - 1))
      out.fail(id + ": wrong kind counts");
  } catch (const std::exception& e) {
    out.fail(id + ": " + e.what());
  }
}

// Criterion 1: the printed factorizations verify as entered.
Outcome printed_fixtures() {
  Outcome out;
  int n = 0;
  for (const auto& f : testing::load_all_fixtures()) {
    ++n;
    const Certificate& c = f.certificate;
    const VerificationReport report = check_certificate(c);
    if (!report.accepted()) out.fail(f.file + ": rejected\n" + describe(report));
    if (c.host.size() != f.arcs) out.fail(f.file + ": host has " + std::to_string(c.host.size()) + " arcs");
    if (c.count_kind(kK2) != f.r || static_cast<int>(c.factors.size()) - f.r != f.s)
      out.fail(f.file + ": wrong kind counts");
    if (!c.repairs.empty()) out.fail(f.file + ": carries repairs");
  }
  if (n != 5) out.fail("expected 5 fixtures, found " + std::to_string(n));
  out.detail = std::to_string(n) + " printed factorizations";
  return out;
}

// Even r that the case split for m = 2 (mod 4) and odd v/m writes down:
// (m/2)·r' + r₂ with r' even in [0, 2x−2] and r₂ even in [0, m−6].
bool in_odd_quotient_case_set(int m, int x, int r) {
  for (int rp = 0; rp <= 2 * x - 2; rp += 2)
    for (int r2 = 0; r2 <= m - 6; r2 += 2)
      if ((m / 2) * rp + r2 == r) return true;
  return false;
}

// Criterion 2: the sweep for m in {6, 8, 10, 12}.
Outcome even_m_sweep() {
  Outcome out;
  int count = 0;
  for (int m : {6, 8, 10, 12})
    for (int v = m; v <= 48; v += m) {
      const int x = v / m;
      for (int r = 1; r <= v - 1; ++r) {
        const int s = v - 1 - r;
        bool in_set = true;
        if (r % 2 == 0) {
          if (s == 1) in_set = false;
          else if (s == 3) in_set = m % 4 == 2 && x % 2 == 0;
          else if (m % 4 == 2 && x % 2 == 1) in_set = in_odd_quotient_case_set(m, x, r);
        }
        if (v == 6 && r == 0) in_set = false;
        if (!in_set) continue;
        ++count;
        solve_and_check(request(Family::K2VsCm, v, m, r), out);
      }
    }
  out.detail = std::to_string(count) + " instances";
  return out;
}

// Criterion 3: m = 4 lists.
Outcome four_cycle_sweep() {
  Outcome out;
  int count = 0;
  auto run = [&](int v, int r) {
    ++count;
    solve_and_check(request(Family::K2VsCm, v, 4, r), out);
  };
  for (int v : {8, 16, 24, 32, 40, 48})
    for (int r = 0; r <= v - 1; ++r)
      if (v - 1 - r != 1) run(v, r);
  for (int v : {12, 36})
    for (int r = 0; r <= v - 1; ++r) {
      const int s = v - 1 - r;
      if (r % 2 == 1 || (s != 3 && s != 5 && s != 1)) run(v, r);
    }
  for (int v : {4, 20, 28, 44})
    for (int r = 1; r <= v - 1; r += 2) run(v, r);
  out.detail = std::to_string(count) + " instances";
  return out;
}

// Criterion 4: m-cycles versus 2m-cycles.
Outcome cycle_pair_sweep() {
  Outcome out;
  int count = 0;
  auto excluded = [](int s, int v, int m) {
    return (s == 0 && v == 4 && m == 4) || (s == 0 && v == 6 && m == 3) || (s == 0 && v == 6 && m == 6);
  };
  for (int m : {4, 6, 8, 10}) {
    std::vector<int> orders{m};
    for (int v = 2 * m; v <= 48; v += 2 * m) orders.push_back(v);
    for (int v : orders)
      for (int s = 0; s <= v - 1; ++s) {
        if (s == 1 || s == 3 || excluded(s, v, m)) continue;
        if (v % (2 * m) != 0 && s != 0) continue;  // base case v = m admits only m-cycle factors
        ++count;
        solve_and_check(request(Family::CmVsC2m, v, m, v - 1 - s), out);
      }
  }
  out.detail = std::to_string(count) + " instances";
  return out;
}

// Criterion 5: exhaustive nonexistence checks.
Outcome oracle_nonexistence() {
  Outcome out;
  const std::vector<std::pair<int, std::string>> cases{
      {4, "c4x3"}, {6, "c6x5"}, {4, "k2x2+c4x1"}, {6, "k2x4+c6x1"}};
  std::ostringstream nodes;
  for (const auto& [v, spec] : cases) {
    OracleBudget budget;
    budget.time_limit = std::chrono::minutes(5);
    const OracleResult res = exhaustive_factorize(complete_symmetric(v), *parse_kind_spec(spec), OracleMode::First, budget);
    if (res.status != OracleStatus::Exhausted)
      out.fail("K" + std::to_string(v) + "* " + spec + ": " + to_string(res.status));
    nodes << (nodes.tellp() > 0 ? ", " : "") << "K" << v << "* " << spec << " " << res.nodes << " nodes";
  }
  out.detail = nodes.str();
  return out;
}

std::vector<Edge> blowup_edges(const std::vector<Vertex>& walk, bool is_cycle, int order) {
  std::vector<Edge> out;
  const std::size_t n = is_cycle ? walk.size() : walk.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex g = walk[i], h = walk[(i + 1) % walk.size()];
    for (int c = 0; c < 2; ++c)
      for (int d = 0; d < 2; ++d) out.push_back(Edge::of(c * order + g, d * order + h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Even cycle lengths >= 4 summing to 2n.
std::vector<int> random_cycle_type(int n, std::mt19937& rng) {
  std::vector<int> parts;
  int units = n;
  while (units > 0) {
    int p = units;
    if (units >= 4) {
      p = std::uniform_int_distribution<int>(2, units - 1)(rng);
      if (p == units - 1) p = units;
    }
    parts.push_back(2 * p);
    units -= p;
  }
  return parts;
}

std::vector<Edge> edges_of(const Factor& f) {
  std::set<Edge> s;
  for (const Arc& a : f.arcs) s.insert(Edge::of(a.tail, a.head));
  return {s.begin(), s.end()};
}

UndirectedFactorization random_factorization(std::mt19937& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return one_factorization_complete(2 * std::uniform_int_distribution<int>(1, 8)(rng));
    case 1: return walecki_odd(2 * std::uniform_int_distribution<int>(1, 7)(rng) + 1);
    default: return walecki_even(2 * std::uniform_int_distribution<int>(2, 7)(rng)).as_factorization();
  }
}

// Criterion 6: 1000 building-block property cases.
Outcome building_block_properties() {
  Outcome out;
  int cases = 0;
  for (int m = 3; m <= 15; ++m, ++cases) {
    const UndirectedFactorization f = m % 2 ? walecki_odd(m) : walecki_even(m).as_factorization();
    std::size_t edges = 0;
    for (const auto& x : f.factors) edges += x.edges.size();
    // Even orders carry F_m as the last factor after (m−2)/2 Hamilton cycles.
    const std::size_t cycles = m % 2 ? (m - 1) / 2 : (m - 2) / 2 + 1;
    if (!check_undirected(f).empty() || edges != static_cast<std::size_t>(m * (m - 1) / 2) ||
        f.factors.size() != cycles)
      out.fail("Walecki order " + std::to_string(m));
  }
  for (int n : {9, 15}) {
    ++cases;
    const auto kts = kirkman_triple_system(n);
    if (!check_undirected(kts).empty() || kts.factors.size() != static_cast<std::size_t>((n - 1) / 2))
      out.fail("KTS(" + std::to_string(n) + ")");
  }

  std::mt19937 rng(20240611);
  for (int i = 0; cases < 1000; ++i, ++cases) {
    const std::string tag = "case " + std::to_string(cases);
    switch (i % 4) {
      case 0: {  // symmetric_lift round trip
        const UndirectedFactorization f = random_factorization(rng);
        const Certificate c = symmetric_lift(f);
        if (!check_certificate(c).accepted()) out.fail(tag + ": lift rejected");
        for (std::size_t j = 0; j < f.factors.size(); ++j)
          if (edges_of(c.factors[j]) != f.factors[j].edges) out.fail(tag + ": lift changed factor edges");
        break;
      }
      case 1: {  // orient_split reversal and partition
        const UndirectedFactorization f = std::uniform_int_distribution<int>(0, 1)(rng)
                                              ? walecki_odd(2 * std::uniform_int_distribution<int>(1, 7)(rng) + 1)
                                              : walecki_even(2 * std::uniform_int_distribution<int>(2, 7)(rng)).as_factorization();
        const Certificate c = symmetric_lift(f);
        std::vector<const Factor*> cycles;
        for (const Factor& f : c.factors)
          if (f.symmetric) cycles.push_back(&f);
        const Factor& s = *cycles[std::uniform_int_distribution<std::size_t>(0, cycles.size() - 1)(rng)];
        const int n = c.host.order();
        const auto [a, b] = orient_split(s, n);
        const Digraph da = factor_digraph(a, n), db = factor_digraph(b, n);
        if (!(reverse(da) == db)) out.fail(tag + ": halves are not reverses");
        if (!(arc_sum(da, db) == factor_digraph(s, n))) out.fail(tag + ": halves do not partition");
        if (!check_factor(a, c.host).accepted() || !check_factor(b, c.host).accepted())
          out.fail(tag + ": half is not a cycle factor");
        break;
      }
      case 2: {  // haggkvist_double cycle types
        const bool is_cycle = std::uniform_int_distribution<int>(0, 1)(rng);
        const int n = std::uniform_int_distribution<int>(is_cycle ? 3 : 2, 12)(rng);
        const int order = n + 1 + std::uniform_int_distribution<int>(0, 3)(rng);
        std::vector<Vertex> ids(order);
        for (int v = 0; v < order; ++v) ids[v] = v;
        std::shuffle(ids.begin(), ids.end(), rng);
        const std::vector<Vertex> walk(ids.begin(), ids.begin() + (is_cycle ? n : n + 1));
        const std::vector<int> h = random_cycle_type(n, rng);
        try {
          const HaggkvistSplit split = haggkvist_double(walk, is_cycle, order, h);
          const std::multiset<int> want(h.begin(), h.end());
          if (testing::cycle_type(split.first) != want || testing::cycle_type(split.second) != want)
            out.fail(tag + ": cycle type differs");
          std::vector<Edge> all = split.first;
          all.insert(all.end(), split.second.begin(), split.second.end());
          std::sort(all.begin(), all.end());
          if (all != blowup_edges(walk, is_cycle, order)) out.fail(tag + ": halves do not partition G[2]");
        } catch (const std::exception& e) {
          out.fail(tag + ": " + e.what());
        }
        break;
      }
      default: {  // reverse involution
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        std::vector<Arc> arcs;
        for (Vertex u = 0; u < n; ++u)
          for (Vertex w = 0; w < n; ++w)
            if (u != w && std::uniform_int_distribution<int>(0, 1)(rng)) arcs.push_back({u, w});
        const Digraph d = Digraph::from_arcs(n, arcs);
        const Digraph r = reverse(d);
        if (!(reverse(r) == d) || r.size() != d.size()) out.fail(tag + ": reverse is not an involution");
        for (const Arc& a : d.arcs())
          if (!r.has_arc(a.reversed())) out.fail(tag + ": arc not reversed");
        break;
      }
    }
  }
  out.detail = std::to_string(cases) + " cases";
  return out;
}

// Criterion 7: every mutant is rejected.
Outcome mutation_soundness() {
  Outcome out;
  std::vector<Certificate> sources;
  for (const ParamRequest& q : {request(Family::K2VsCm, 12, 4, 2), request(Family::K2VsCm, 16, 8, 3),
                                request(Family::CmVsC2m, 16, 4, 9), request(Family::CmVsC2m, 24, 6, 11),
                                request(Family::K2VsCm, 18, 6, 5)})
    sources.push_back(solve(q));
  for (const auto& f : testing::load_all_fixtures()) sources.push_back(f.certificate);

  std::mt19937 rng(7);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const char* names[] = {"arc deletion", "direction flip", "cross-factor swap"};
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    Certificate c = sources[pick(sources.size())];
    const std::size_t fi = pick(c.factors.size());
    std::vector<Arc>& arcs = c.factors[fi].arcs;
    const std::size_t ai = pick(arcs.size());
    switch (i % 3) {
      case 0: arcs.erase(arcs.begin() + ai); break;
      case 1: arcs[ai] = arcs[ai].reversed(); break;
      default: {
        // Swap arcs with different tails so the swap cannot be a relabelling.
        std::size_t fj = pick(c.factors.size());
        while (fj == fi) fj = pick(c.factors.size());
        std::vector<Arc>& other = c.factors[fj].arcs;
        std::size_t aj = pick(other.size());
        while (other[aj].tail == arcs[ai].tail) aj = pick(other.size());
        std::swap(arcs[ai], other[aj]);
        std::sort(other.begin(), other.end());
      }
    }
    std::sort(arcs.begin(), arcs.end());
    if (check_certificate(c).accepted()) out.fail(std::string("mutant ") + std::to_string(i) + " (" + names[i % 3] + ") accepted");
    else ++rejected;
  }
  out.detail = std::to_string(rejected) + "/100 mutants rejected";
  return out;
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Criterion 8: repeated solves give identical documents, in process and
// through the command-line tool when it is built.
Outcome determinism() {
  Outcome out;
  std::mt19937 rng(99);
  std::vector<ParamRequest> sample;
  while (sample.size() < 20) {
    const Family f = rng() % 2 ? Family::K2VsCm : Family::CmVsC2m;
    const int m = 4 + 2 * static_cast<int>(rng() % 5);
    const int step = f == Family::K2VsCm ? m : 2 * m;
    const int v = step * (1 + static_cast<int>(rng() % (48 / step)));
    const ParamRequest q = request(f, v, m, static_cast<int>(rng() % v));
    if (feasibility(q).kind == VerdictKind::Solvable &&
        std::find(sample.begin(), sample.end(), q) == sample.end())
      sample.push_back(q);
  }
  const std::string cli = HWP_CLI_PATH;
  const auto tmp = std::filesystem::temp_directory_path() / ("hwp_acceptance_" + std::to_string(::getpid()) + ".json");
  int cli_runs = 0;
  for (const ParamRequest& q : sample) {
    const std::string a = serialize(solve(q));
    const std::string b = serialize(solve(q));
    if (a != b) out.fail(to_string(q) + ": in-process documents differ");
    if (cli.empty()) continue;
    const std::string cmd = cli + " solve --family " + family_tag(q.family) + " --v " + std::to_string(q.v) +
                            " --m " + std::to_string(q.m) + " --r " + std::to_string(q.r) + " -o " + tmp.string() +
                            " 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) {
      out.fail(to_string(q) + ": command-line solve failed");
      continue;
    }
    ++cli_runs;
    if (read_text(tmp) != a) out.fail(to_string(q) + ": command-line document differs");
  }
  std::filesystem::remove(tmp);
  out.detail = "20 requests, " + std::to_string(cli_runs) + " cross-process";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "printed fixtures verify", 1, printed_fixtures},
      {2, "K2 vs m-cycle sweep, m in {6,8,10,12}, v <= 48", 60, even_m_sweep},
      {3, "K2 vs 4-cycle sweep", 60, four_cycle_sweep},
      {4, "m-cycle vs 2m-cycle sweep, m in {4,6,8,10}", 90, cycle_pair_sweep},
      {5, "oracle nonexistence", 300, oracle_nonexistence},
      {6, "building-block properties", 10, building_block_properties},
      {7, "mutation soundness", 5, mutation_soundness},
      {8, "determinism", 600, determinism},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds) out.fail("time limit exceeded");
    all = all && out.pass;
    std::printf("criterion %d: %s  %s: %s (%.2f s, limit %.0f s)\n", c.id, out.pass ? "PASS" : "FAIL",
                c.title.c_str(), out.detail.c_str(), secs, c.limit_seconds);
    for (const std::string& p : out.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
