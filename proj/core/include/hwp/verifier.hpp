#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hwp/digraph.hpp"
#include "hwp/factor.hpp"

namespace hwp {

/// One violation found by the checker. factor_index is -1 for
/// certificate-level problems (cover, counts).
struct Failure {
  int factor_index = -1;
  std::string violation;
  std::vector<Arc> arcs;
  std::vector<Vertex> vertices;
};

struct VerificationReport {
  std::vector<Failure> failures;
  bool accepted() const { return failures.empty(); }
};

/// Subset-of-host, spanning, in/out-degree 1, and every cycle of the
/// out-neighbour permutation of length f.cycle_length. Never throws.
VerificationReport check_factor(const Factor& f, const Digraph& host, int factor_index = 0);

/// Every factor valid, factors pairwise arc-disjoint, union equal to the host,
/// and kind counts matching the declared request when one is present.
VerificationReport check_certificate(const Certificate& c);

/// Human-readable one-line-per-failure rendering.
std::string describe(const VerificationReport& report);

/// Multiset of factor kinds keyed by cycle length.
using KindSpec = std::map<int, int>;

/// Parses "c4x3", "k2x2+c4x1".
std::optional<KindSpec> parse_kind_spec(const std::string& text);
std::string format_kind_spec(const KindSpec& spec);

enum class OracleMode { First, Count, All };
enum class OracleStatus { Found, Exhausted, BudgetExceeded };

struct OracleBudget {
  std::uint64_t node_limit = 2'000'000'000ULL;
  std::chrono::milliseconds time_limit{std::chrono::hours(1)};
};

struct OracleResult {
  OracleStatus status = OracleStatus::Exhausted;
  // Ordered factorizations; exact only when status is not BudgetExceeded.
  std::uint64_t ordered_count = 0;
  std::uint64_t unordered_count = 0;
  std::vector<std::vector<Factor>> solutions;  // first: at most one; all: every one
  std::uint64_t nodes = 0;
};

/// Default ceiling for exhaustive runs: the arc count of K_7*.
inline constexpr std::size_t kOracleArcCeiling = 42;

/// Complete search for factorizations of `host` into the kinds of `spec`.
///
/// Factors are generated canonically: the factor holding the smallest
/// uncovered arc is always chosen next, so each unordered factorization is
/// visited exactly once. In First mode the search stops after one hit and
/// status is Found; Exhausted with no solutions is a nonexistence proof.
/// Throws std::invalid_argument when the spec's arc total differs from the
/// host's size, or when the host exceeds kOracleArcCeiling without `force`.
OracleResult exhaustive_factorize(const Digraph& host, const KindSpec& spec, OracleMode mode,
                                  const OracleBudget& budget = {}, bool force = false);

std::string to_string(OracleStatus s);

}  // namespace hwp
