#include "hwp/certificate_io.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "hwp/named_graphs.hpp"

namespace hwp {
namespace {

using nlohmann::json;

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

json trace_json(const Trace& t) {
  json children = json::array();
  for (const Trace& c : t.children) children.push_back(trace_json(c));
  return {{"step", t.step}, {"params", t.params}, {"children", children}};
}

json host_json(const HostDescriptor& d, const Digraph& host) {
  switch (d.type) {
    case HostDescriptor::Type::Complete:
      return {{"type", "complete"}, {"order", d.order}};
    case HostDescriptor::Type::Equipartite:
      return {{"type", "equipartite"}, {"order", d.order}, {"part_size", d.part_size},
              {"part_count", d.part_count}};
    case HostDescriptor::Type::Explicit:
      break;
  }
  return {{"type", "explicit"}, {"order", d.order}, {"name", d.name}, {"arcs", arcs_json(host.arcs())}};
}

std::string type_name(json::value_t t) {
  switch (t) {
    case json::value_t::object: return "object";
    case json::value_t::array: return "array";
    case json::value_t::string: return "string";
    case json::value_t::boolean: return "boolean";
    case json::value_t::null: return "null";
    default: return "number";
  }
}

// Typed accessors that report the JSON path on failure.
class Reader {
 public:
  static const json& field(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path, fmt::format("missing key \"{}\"", key));
    return *it;
  }

  static void only_keys(const json& obj, const std::string& path, std::set<std::string> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key()))
        throw ParseError(path, fmt::format("unexpected key \"{}\"", it.key()));
  }

  static int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer, got " + type_name(j.type()));
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw ParseError(path, "integer out of range");
    return static_cast<int>(v);
  }

  static std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path, "expected a string, got " + type_name(j.type()));
    return j.get<std::string>();
  }

  static const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected an array, got " + type_name(j.type()));
    return j;
  }
};

std::vector<Arc> read_arcs(const json& j, const std::string& path) {
  std::vector<Arc> arcs;
  Reader::array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = fmt::format("{}[{}]", path, i);
    const json& a = j[i];
    if (!a.is_array() || a.size() != 2) throw ParseError(at, "expected a [tail, head] pair");
    const Arc arc{Reader::integer(a[0], at + "[0]"), Reader::integer(a[1], at + "[1]")};
    if (!arcs.empty()) {
      if (arcs.back() == arc) throw ParseError(at, fmt::format("duplicate arc {}", to_string(arc)));
      if (arc < arcs.back()) throw ParseError(at, "arcs not sorted by (tail, head)");
    }
    arcs.push_back(arc);
  }
  return arcs;
}

Trace read_trace(const json& j, const std::string& path) {
  Reader::only_keys(j, path, {"step", "params", "children"});
  Trace t;
  t.step = Reader::string(Reader::field(j, path, "step"), path + ".step");
  const json& params = Reader::field(j, path, "params");
  if (!params.is_object()) throw ParseError(path + ".params", "expected an object");
  for (auto it = params.begin(); it != params.end(); ++it)
    t.params[it.key()] = Reader::string(it.value(), path + ".params." + it.key());
  const json& children = Reader::array(Reader::field(j, path, "children"), path + ".children");
  for (std::size_t i = 0; i < children.size(); ++i)
    t.children.push_back(read_trace(children[i], fmt::format("{}.children[{}]", path, i)));
  return t;
}

Factor read_factor(const json& j, const std::string& path) {
  Reader::only_keys(j, path, {"kind", "arcs"});
  const std::string kind = Reader::string(Reader::field(j, path, "kind"), path + ".kind");
  Factor f;
  if (!kind.empty() && kind[0] == 's') {
    auto len = parse_kind("c" + kind.substr(1));
    if (!len || *len < 3) throw ParseError(path + ".kind", "unknown factor kind \"" + kind + "\"");
    f.cycle_length = *len;
    f.symmetric = true;
  } else {
    auto len = parse_kind(kind);
    if (!len) throw ParseError(path + ".kind", "unknown factor kind \"" + kind + "\"");
    f.cycle_length = *len;
  }
  f.arcs = read_arcs(Reader::field(j, path, "arcs"), path + ".arcs");
  return f;
}

}  // namespace

std::string serialize(const Certificate& c) {
  Certificate copy = c;
  canonicalize(copy);
  json request = nullptr;
  if (copy.request) {
    const ParamRequest& q = *copy.request;
    request = {{"family", family_tag(q.family)}, {"v", q.v}, {"m", q.m}, {"r", q.r}, {"s", q.s}};
  }
  json repairs = json::array();
  for (const Repair& r : copy.repairs)
    repairs.push_back(
        {{"location", r.location}, {"original", r.original}, {"replacement", r.replacement}});

  // Top-level keys in sorted order, one factor per line.
  std::string out = "{\n\"factors\": [";
  for (std::size_t i = 0; i < copy.factors.size(); ++i) {
    const Factor& f = copy.factors[i];
    json fj = {{"kind", factor_kind_name(f)}, {"arcs", arcs_json(f.arcs)}};
    out += (i == 0 ? "\n" : ",\n") + fj.dump();
  }
  out += "\n],\n";
  out += "\"host\": " + host_json(copy.host_desc, copy.host).dump() + ",\n";
  out += "\"repairs\": " + repairs.dump() + ",\n";
  out += "\"request\": " + request.dump() + ",\n";
  out += fmt::format("\"schema\": \"{}\",\n", kSchemaVersion);
  out += "\"trace\": " + trace_json(copy.trace).dump() + "\n}\n";
  return out;
}

Certificate deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("byte {}", e.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("$", "expected an object");
  Reader::only_keys(doc, "$", {"schema", "request", "host", "factors", "trace", "repairs"});
  const std::string schema = Reader::string(Reader::field(doc, "$", "schema"), "schema");
  if (schema != kSchemaVersion) throw ParseError("schema", "unknown schema version \"" + schema + "\"");

  Certificate c;
  const json& host = Reader::field(doc, "$", "host");
  const std::string type = Reader::string(Reader::field(host, "host", "type"), "host.type");
  const int order = Reader::integer(Reader::field(host, "host", "order"), "host.order");
  if (order < 1) throw ParseError("host.order", "order must be positive");
  try {
    if (type == "complete") {
      Reader::only_keys(host, "host", {"type", "order"});
      c.host_desc = complete_host(order);
      c.host = complete_symmetric(order);
    } else if (type == "equipartite") {
      Reader::only_keys(host, "host", {"type", "order", "part_size", "part_count"});
      const int x = Reader::integer(Reader::field(host, "host", "part_size"), "host.part_size");
      const int y = Reader::integer(Reader::field(host, "host", "part_count"), "host.part_count");
      if (x < 1 || y < 2 || x * y != order)
        throw ParseError("host", "part_size × part_count must equal order");
      c.host_desc = equipartite_host(x, y);
      c.host = complete_symmetric_equipartite(x, y).graph;
    } else if (type == "explicit") {
      Reader::only_keys(host, "host", {"type", "order", "name", "arcs"});
      c.host_desc = explicit_host(order, Reader::string(Reader::field(host, "host", "name"), "host.name"));
      c.host = Digraph::from_arcs(order, read_arcs(Reader::field(host, "host", "arcs"), "host.arcs"));
    } else {
      throw ParseError("host.type", "unknown host type \"" + type + "\"");
    }
  } catch (const GraphError& e) {
    throw ParseError("host", e.what());
  }

  const json& request = Reader::field(doc, "$", "request");
  if (!request.is_null()) {
    Reader::only_keys(request, "request", {"family", "v", "m", "r", "s"});
    ParamRequest q;
    const std::string tag = Reader::string(Reader::field(request, "request", "family"), "request.family");
    auto family = parse_family(tag);
    if (!family) throw ParseError("request.family", "unknown family \"" + tag + "\"");
    q.family = *family;
    q.v = Reader::integer(Reader::field(request, "request", "v"), "request.v");
    q.m = Reader::integer(Reader::field(request, "request", "m"), "request.m");
    q.r = Reader::integer(Reader::field(request, "request", "r"), "request.r");
    q.s = Reader::integer(Reader::field(request, "request", "s"), "request.s");
    c.request = q;
  }

  const json& factors = Reader::array(Reader::field(doc, "$", "factors"), "factors");
  for (std::size_t i = 0; i < factors.size(); ++i)
    c.factors.push_back(read_factor(factors[i], fmt::format("factors[{}]", i)));
  Certificate sorted = c;
  canonicalize(sorted);
  for (std::size_t i = 0; i < c.factors.size(); ++i)
    if (!(sorted.factors[i] == c.factors[i]))
      throw ParseError(fmt::format("factors[{}]", i), "factors not in canonical order");

  c.trace = read_trace(Reader::field(doc, "$", "trace"), "trace");
  const json& repairs = Reader::array(Reader::field(doc, "$", "repairs"), "repairs");
  for (std::size_t i = 0; i < repairs.size(); ++i) {
    const std::string at = fmt::format("repairs[{}]", i);
    Reader::only_keys(repairs[i], at, {"location", "original", "replacement"});
    c.repairs.push_back({Reader::string(Reader::field(repairs[i], at, "location"), at + ".location"),
                         Reader::string(Reader::field(repairs[i], at, "original"), at + ".original"),
                         Reader::string(Reader::field(repairs[i], at, "replacement"), at + ".replacement")});
  }
  return c;
}

}  // namespace hwp
