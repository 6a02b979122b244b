#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hwp/factor.hpp"

namespace hwp {

enum class VerdictKind { Solvable, ProvenImpossible, OpenException, OutOfPaperScope };

std::string to_string(VerdictKind k);

/// `detail` is the construction route for Solvable points, the reason for
/// ProvenImpossible, and the governing exception clause for OpenException.
struct FeasibilityVerdict {
  VerdictKind kind = VerdictKind::OutOfPaperScope;
  std::string detail;
};

/// Thrown by plan and solve for requests whose verdict is not Solvable.
class NotSolvable : public std::invalid_argument {
 public:
  explicit NotSolvable(FeasibilityVerdict v);
  const FeasibilityVerdict& verdict() const { return verdict_; }

 private:
  FeasibilityVerdict verdict_;
};

/// A block or sub-construction that cannot realise coefficients its own
/// supported set promised. `state` holds the enumeration context.
class ComposerFault : public std::logic_error {
 public:
  ComposerFault(const std::string& what, std::string state)
      : std::logic_error(what), state_(std::move(state)) {}
  const std::string& state() const { return state_; }

 private:
  std::string state_;
};

/// One addend of a composition: `copies` vertex-disjoint copies of `block`,
/// all factorized alike with `r` factors of the first kind. Composite blocks
/// record the chosen variant and their own groups as children.
struct PlanNode {
  std::string block;
  std::string variant;  // empty for leaf blocks
  int copies = 1;
  int factors = 0;
  int r = 0;
  std::vector<PlanNode> children;
};

struct CompositionPlan {
  ParamRequest request;
  PlanNode root;
};

/// Total. See README for the exception tables.
FeasibilityVerdict feasibility(const ParamRequest& req);

/// Lexicographically minimal coefficients, in group order, of the first
/// variant that reaches r. Throws NotSolvable unless feasibility is Solvable.
CompositionPlan plan(const ParamRequest& req);

/// Factorization of complete_symmetric(v) with r first-kind and s
/// second-kind factors. The certificate is verified before it is returned;
/// a rejected assembly throws ComposerFault.
Certificate solve(const ParamRequest& req);

/// Supported first-kind counts of K_v* for the kinds of (family, m) that the
/// construction routes reach. Used by feasibility; exposed for inspection.
std::vector<int> reachable_counts(Family family, int m, int v);

struct SurveyRow {
  int v = 0;
  int r = 0;
  int s = 0;
  FeasibilityVerdict verdict;
  bool solved = false;
  bool verified = false;
  double millis = 0;
  std::string error;
};

/// Every v ≤ v_max with m | v and every r in [0, v−1], ordered by (v, r).
/// Points are evaluated on `threads` workers (0 = hardware concurrency).
std::vector<SurveyRow> survey(Family family, int m, int v_max, int threads = 0);

/// Indented rendering of a plan tree.
std::string describe(const CompositionPlan& p);

}  // namespace hwp
