#include "hwp/factor.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

namespace hwp {

std::string kind_name(int cycle_length) {
  return cycle_length == kK2 ? std::string("k2") : fmt::format("c{}", cycle_length);
}

std::optional<int> parse_kind(std::string_view name) {
  if (name == "k2") return kK2;
  if (name.size() < 2 || name[0] != 'c') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
  if (ec != std::errc{} || ptr != name.data() + name.size() || value < 2) return std::nullopt;
  return value;
}

std::string factor_kind_name(const Factor& f) {
  return f.symmetric ? fmt::format("s{}", f.cycle_length) : kind_name(f.cycle_length);
}

Factor make_factor(int cycle_length, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return Factor{cycle_length, std::move(arcs), false};
}

Factor cycles_factor(int cycle_length, const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Arc> arcs;
  for (const auto& c : cycles) {
    auto part = cycle_arcs(c);
    arcs.insert(arcs.end(), part.begin(), part.end());
  }
  return make_factor(cycle_length, std::move(arcs));
}

Factor matching_factor(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return make_factor(kK2, double_arcs(pairs));
}

std::string family_tag(Family f) { return f == Family::K2VsCm ? "k2cm" : "cm2m"; }

std::optional<Family> parse_family(std::string_view tag) {
  if (tag == "k2cm") return Family::K2VsCm;
  if (tag == "cm2m") return Family::CmVsC2m;
  return std::nullopt;
}

std::string to_string(const ParamRequest& req) {
  return fmt::format("{} v={} m={} r={} s={}", family_tag(req.family), req.v, req.m, req.r,
                     req.s);
}

HostDescriptor complete_host(int order) {
  return {HostDescriptor::Type::Complete, order, 0, 0, {}};
}

HostDescriptor equipartite_host(int part_size, int part_count) {
  return {HostDescriptor::Type::Equipartite, part_size * part_count, part_size, part_count, {}};
}

HostDescriptor explicit_host(int order, std::string name) {
  return {HostDescriptor::Type::Explicit, order, 0, 0, std::move(name)};
}

int Certificate::count_kind(int cycle_length) const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [&](const Factor& f) {
    return f.cycle_length == cycle_length && !f.symmetric;
  }));
}

void canonicalize(Certificate& c) {
  for (auto& f : c.factors) std::sort(f.arcs.begin(), f.arcs.end());
  std::stable_sort(c.factors.begin(), c.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.cycle_length != b.cycle_length) return a.cycle_length < b.cycle_length;
    if (a.symmetric != b.symmetric) return b.symmetric;
    if (a.arcs.empty() || b.arcs.empty()) return a.arcs.size() < b.arcs.size();
    return a.arcs.front() < b.arcs.front();
  });
}

}  // namespace hwp
