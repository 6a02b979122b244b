#pragma once
// Loads the printed-table fixtures under tests/fixtures. A fixture lists
// factors as cycles or double-arc pairs; the host is named, not spelled out.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwp/factor.hpp"
#include "hwp/named_graphs.hpp"

namespace hwp::testing {

struct Fixture {
  std::string file;
  std::string name;
  std::size_t arcs = 0;
  int r = 0;
  int s = 0;
  Certificate certificate;
};

inline std::filesystem::path fixture_dir() { return HWP_FIXTURE_DIR; }

inline Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const nlohmann::json j = nlohmann::json::parse(in);

  Fixture f;
  f.file = path.filename().string();
  f.name = j.at("name").get<std::string>();
  f.arcs = j.at("arcs").get<std::size_t>();
  f.r = j.at("r").get<int>();
  f.s = j.at("s").get<int>();

  const auto& h = j.at("host");
  const std::string type = h.at("type").get<std::string>();
  Certificate& c = f.certificate;
  if (type == "complete") {
    const int v = h.at("order").get<int>();
    c.host_desc = complete_host(v);
    c.host = complete_symmetric(v);
  } else if (type == "equipartite") {
    const int q = h.at("part_size").get<int>();
    const int k = h.at("part_count").get<int>();
    c.host_desc = equipartite_host(q, k);
    c.host = complete_symmetric_equipartite(q, k).graph;
  } else if (type == "c_blowup_plus_I") {
    const int m = h.at("m").get<int>();
    c.host = cm_star_blowup_plus_I(m);
    c.host_desc = explicit_host(c.host.order(), "C" + std::to_string(m) + "*[2]+I");
  } else {
    throw std::runtime_error(path.string() + ": unknown host type " + type);
  }

  for (const auto& fj : j.at("factors")) {
    if (fj.contains("pairs")) {
      c.factors.push_back(matching_factor(fj.at("pairs").get<std::vector<std::pair<Vertex, Vertex>>>()));
    } else {
      const auto cycles = fj.at("cycles").get<std::vector<std::vector<Vertex>>>();
      c.factors.push_back(cycles_factor(static_cast<int>(cycles.front().size()), cycles));
    }
  }
  canonicalize(c);
  return f;
}

inline std::vector<Fixture> load_all_fixtures() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(fixture_dir()))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) out.push_back(load_fixture(p));
  return out;
}

}  // namespace hwp::testing
