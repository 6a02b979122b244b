#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwp/digraph.hpp"

namespace hwp {

/// Cycle length used for K₂*-factors. A double arc is a directed 2-cycle, so a
/// single out-neighbour permutation check covers both factor kinds.
inline constexpr int kK2 = 2;

/// "k2" for length 2, otherwise "c<length>".
std::string kind_name(int cycle_length);

/// Inverse of kind_name; nullopt on malformed input.
std::optional<int> parse_kind(std::string_view name);

/// A spanning arc subset tagged with its declared kind.
///
/// Directed kinds: every vertex has in- and out-degree 1 and every cycle has
/// length cycle_length (2 means K₂*). Symmetric kinds (C_ℓ*-factors, only
/// produced by lifting undirected factorizations): the arc set is symmetric
/// and its underlying graph is a union of ℓ-cycles.
struct Factor {
  int cycle_length = kK2;
  std::vector<Arc> arcs;  // sorted by (tail, head)
  bool symmetric = false;

  bool is_k2() const { return cycle_length == kK2 && !symmetric; }
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// kind_name for directed factors, "s<length>" for symmetric ones.
std::string factor_kind_name(const Factor& f);

/// Sorts arcs; returns the factor for chaining.
Factor make_factor(int cycle_length, std::vector<Arc> arcs);

/// Factor whose arcs are the given directed cycles.
Factor cycles_factor(int cycle_length, const std::vector<std::vector<Vertex>>& cycles);

/// K₂*-factor from a perfect matching.
Factor matching_factor(const std::vector<std::pair<Vertex, Vertex>>& pairs);

enum class Family {
  K2VsCm,   // K₂*-factors versus directed m-cycle factors
  CmVsC2m,  // directed m-cycle factors versus directed 2m-cycle factors
};

std::string family_tag(Family f);  // "k2cm" / "cm2m"
std::optional<Family> parse_family(std::string_view tag);

/// The two factor kinds of a request, as cycle lengths.
struct KindPair {
  int first = kK2;
  int second = 4;
  friend bool operator==(const KindPair&, const KindPair&) = default;
  friend auto operator<=>(const KindPair&, const KindPair&) = default;
};

struct ParamRequest {
  Family family = Family::K2VsCm;
  int v = 0;
  int m = 0;
  int r = 0;
  int s = 0;

  KindPair kinds() const {
    return family == Family::K2VsCm ? KindPair{kK2, m} : KindPair{m, 2 * m};
  }
  friend bool operator==(const ParamRequest&, const ParamRequest&) = default;
};

std::string to_string(const ParamRequest& req);

/// Tree of named construction steps.
struct Trace {
  std::string step;
  std::map<std::string, std::string> params;
  std::vector<Trace> children;

  Trace& param(const std::string& key, const std::string& value) {
    params[key] = value;
    return *this;
  }
  Trace& param(const std::string& key, long long value) {
    params[key] = std::to_string(value);
    return *this;
  }
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// A recorded departure from a literal formula.
struct Repair {
  std::string location;
  std::string original;
  std::string replacement;
  friend bool operator==(const Repair&, const Repair&) = default;
};

struct HostDescriptor {
  enum class Type { Complete, Equipartite, Explicit };
  Type type = Type::Complete;
  int order = 0;
  int part_size = 0;   // Equipartite only
  int part_count = 0;  // Equipartite only
  std::string name;    // Explicit only, informational

  friend bool operator==(const HostDescriptor&, const HostDescriptor&) = default;
};

HostDescriptor complete_host(int order);
HostDescriptor equipartite_host(int part_size, int part_count);
HostDescriptor explicit_host(int order, std::string name);

/// Factors claimed to partition the arcs of `host`.
struct Certificate {
  HostDescriptor host_desc;
  Digraph host;
  std::optional<ParamRequest> request;
  std::vector<Factor> factors;
  Trace trace;
  std::vector<Repair> repairs;

  int count_kind(int cycle_length) const;
};

/// Orders factors by kind (ascending cycle length), then by smallest arc.
void canonicalize(Certificate& c);

}  // namespace hwp
