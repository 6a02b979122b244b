#include "hwp/verifier.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

namespace hwp {
namespace {

// Symmetric C_ℓ*-factor: symmetric arc set, out-degree 2, undirected ℓ-cycles.
void check_symmetric_factor(const Factor& f, const Digraph& host, int factor_index,
                            VerificationReport& report) {
  auto fail = [&](std::string what, std::vector<Arc> arcs = {}, std::vector<Vertex> verts = {}) {
    report.failures.push_back({factor_index, std::move(what), std::move(arcs), std::move(verts)});
  };
  const int n = host.order();
  if (f.cycle_length < 3) {
    fail(fmt::format("invalid_kind s{}", f.cycle_length));
    return;
  }
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n) * n, 0);
  std::vector<Arc> foreign;
  for (const Arc& a : f.arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || !host.has_arc(a)) {
      foreign.push_back(a);
      continue;
    }
    in[static_cast<std::size_t>(a.tail) * n + a.head] = 1;
  }
  if (!foreign.empty()) {
    fail("arc_not_in_host", foreign);
    return;
  }
  std::vector<Arc> lonely;
  std::vector<std::vector<Vertex>> nbr(n);
  for (const Arc& a : f.arcs) {
    if (!in[static_cast<std::size_t>(a.head) * n + a.tail]) lonely.push_back(a);
    nbr[a.tail].push_back(a.head);
  }
  if (!lonely.empty()) fail("not_symmetric", lonely);
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < n; ++v)
    if (nbr[v].size() != 2) bad.push_back(v);
  if (!bad.empty()) fail("out_degree", {}, bad);
  if (!report.accepted()) return;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> cycle{s};
    seen[s] = 1;
    Vertex prev = s, cur = nbr[s][0];
    while (cur != s) {
      seen[cur] = 1;
      cycle.push_back(cur);
      const Vertex nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = nxt;
    }
    if (static_cast<int>(cycle.size()) != f.cycle_length)
      fail(fmt::format("cycle_length {} (expected {})", cycle.size(), f.cycle_length), {}, cycle);
  }
}

}  // namespace

VerificationReport check_factor(const Factor& f, const Digraph& host, int factor_index) {
  VerificationReport report;
  auto fail = [&](std::string what, std::vector<Arc> arcs = {}, std::vector<Vertex> verts = {}) {
    report.failures.push_back({factor_index, std::move(what), std::move(arcs), std::move(verts)});
  };
  const int n = host.order();
  if (f.symmetric) {
    check_symmetric_factor(f, host, factor_index, report);
    return report;
  }
  if (f.cycle_length < 2) {
    fail(fmt::format("invalid_kind {}", f.cycle_length));
    return report;
  }
  if (n % f.cycle_length != 0) fail(fmt::format("order {} not divisible by {}", n, f.cycle_length));

  std::vector<Vertex> succ(n, -1);
  std::vector<int> out_deg(n, 0), in_deg(n, 0);
  std::vector<Arc> foreign;
  for (const Arc& a : f.arcs) {
    if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n || !host.has_arc(a)) {
      foreign.push_back(a);
      continue;
    }
    ++out_deg[a.tail];
    ++in_deg[a.head];
    succ[a.tail] = a.head;
  }
  if (!foreign.empty()) fail("arc_not_in_host", foreign);

  std::vector<Vertex> uncovered, bad_out, bad_in;
  for (Vertex v = 0; v < n; ++v) {
    if (out_deg[v] == 0 && in_deg[v] == 0) uncovered.push_back(v);
    else if (out_deg[v] != 1) bad_out.push_back(v);
    else if (in_deg[v] != 1) bad_in.push_back(v);
  }
  if (!uncovered.empty()) fail("not_spanning", {}, uncovered);
  if (!bad_out.empty()) fail("out_degree", {}, bad_out);
  if (!bad_in.empty()) fail("in_degree", {}, bad_in);
  if (!report.accepted()) return report;

  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex v = start; !seen[v]; v = succ[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    if (static_cast<int>(cycle.size()) != f.cycle_length)
      fail(fmt::format("cycle_length {} (expected {})", cycle.size(), f.cycle_length), {},
           cycle);
  }
  return report;
}

VerificationReport check_certificate(const Certificate& c) {
  VerificationReport report;
  const Digraph& host = c.host;
  const int n = host.order();
  if (c.host_desc.order != n)
    report.failures.push_back(
        {-1, fmt::format("host descriptor order {} differs from host order {}", c.host_desc.order,
                         n),
         {}, {}});

  std::vector<int> owner(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    const Factor& f = c.factors[i];
    auto sub = check_factor(f, host, static_cast<int>(i));
    report.failures.insert(report.failures.end(), sub.failures.begin(), sub.failures.end());
    std::vector<Arc> overlap;
    for (const Arc& a : f.arcs) {
      if (!host.has_arc(a)) continue;
      int& slot = owner[static_cast<std::size_t>(a.tail) * n + a.head];
      if (slot != -1) overlap.push_back(a);
      else slot = static_cast<int>(i);
    }
    if (!overlap.empty())
      report.failures.push_back({static_cast<int>(i), "overlap", overlap, {}});
  }
  std::vector<Arc> missing;
  for (const Arc& a : host.arcs())
    if (owner[static_cast<std::size_t>(a.tail) * n + a.head] == -1) missing.push_back(a);
  if (!missing.empty()) report.failures.push_back({-1, "uncovered", missing, {}});

  if (c.request) {
    const KindPair k = c.request->kinds();
    const int r = c.count_kind(k.first);
    const int s = c.count_kind(k.second);
    const int other = static_cast<int>(c.factors.size()) - r - s;
    if (r != c.request->r || s != c.request->s || other != 0)
      report.failures.push_back(
          {-1,
           fmt::format("kind_count {}={} {}={} other={} (declared r={} s={})", kind_name(k.first),
                       r, kind_name(k.second), s, other, c.request->r, c.request->s),
           {},
           {}});
  }
  return report;
}

std::string describe(const VerificationReport& report) {
  if (report.accepted()) return "accepted\n";
  std::ostringstream out;
  for (const Failure& f : report.failures) {
    out << (f.factor_index < 0 ? std::string("certificate")
                               : fmt::format("factor {}", f.factor_index))
        << ": " << f.violation;
    constexpr std::size_t kShow = 8;
    for (std::size_t i = 0; i < f.arcs.size() && i < kShow; ++i) out << ' ' << to_string(f.arcs[i]);
    if (f.arcs.size() > kShow) out << " ...";
    if (!f.vertices.empty()) {
      out << " vertices";
      for (std::size_t i = 0; i < f.vertices.size() && i < kShow; ++i) out << ' ' << f.vertices[i];
      if (f.vertices.size() > kShow) out << " ...";
    }
    out << '\n';
  }
  return out.str();
}

std::optional<KindSpec> parse_kind_spec(const std::string& text) {
  KindSpec spec;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '+')) {
    const auto x = item.rfind('x');
    if (x == std::string::npos || x == 0) return std::nullopt;
    auto kind = parse_kind(std::string_view(item).substr(0, x));
    if (!kind) return std::nullopt;
    int count = 0;
    try {
      std::size_t used = 0;
      count = std::stoi(item.substr(x + 1), &used);
      if (used != item.size() - x - 1 || count < 1) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    spec[*kind] += count;
  }
  if (spec.empty()) return std::nullopt;
  return spec;
}

std::string format_kind_spec(const KindSpec& spec) {
  std::string out;
  for (auto [len, count] : spec) {
    if (!out.empty()) out += '+';
    out += fmt::format("{}x{}", kind_name(len), count);
  }
  return out;
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Found: return "Found";
    case OracleStatus::Exhausted: return "Exhausted";
    case OracleStatus::BudgetExceeded: return "Inconclusive";
  }
  return "?";
}

}  // namespace hwp
