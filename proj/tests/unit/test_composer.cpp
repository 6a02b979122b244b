#include <doctest.h>

#include <algorithm>
#include <chrono>

#include <fmt/format.h>

#include "hwp/composer.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

ParamRequest req(Family f, int v, int m, int r) { return {f, v, m, r, v - 1 - r}; }

std::string oracle_spec(const ParamRequest& q) {
  const KindPair k = q.kinds();
  std::string out;
  auto add = [&](int len, int count) {
    if (count == 0) return;
    if (!out.empty()) out += "+";
    out += fmt::format("{}x{}", kind_name(len), count);
  };
  add(k.first, q.r);
  add(k.second, q.s);
  return out;
}

bool kinds_tile(const ParamRequest& q) {
  const KindPair k = q.kinds();
  return (q.r == 0 || q.v % k.first == 0) && (q.s == 0 || q.v % k.second == 0);
}

}  // namespace

TEST_SUITE("composer") {
  TEST_CASE("verdicts for reference points") {
    CHECK(feasibility(req(Family::K2VsCm, 8, 4, 6)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::CmVsC2m, 24, 6, 20)).kind == VerdictKind::OpenException);
    CHECK(feasibility(req(Family::K2VsCm, 6, 6, 0)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::K2VsCm, 4, 4, 0)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::CmVsC2m, 6, 3, 5)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::CmVsC2m, 6, 6, 5)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::K2VsCm, 20, 4, 0)).kind == VerdictKind::OutOfPaperScope);
    CHECK(feasibility(req(Family::K2VsCm, 12, 4, 6)).kind == VerdictKind::OpenException);
    CHECK(feasibility(req(Family::K2VsCm, 20, 4, 2)).kind == VerdictKind::OpenException);
    const auto ok = feasibility(req(Family::K2VsCm, 12, 4, 2));
    CHECK(ok.kind == VerdictKind::Solvable);
    CHECK(ok.detail.find("K12*") != std::string::npos);
  }

  TEST_CASE("arithmetic gates") {
    CHECK(feasibility({Family::K2VsCm, 12, 4, 2, 2}).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::K2VsCm, 10, 4, 3)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility(req(Family::CmVsC2m, 12, 8, 3)).kind == VerdictKind::ProvenImpossible);
    CHECK(feasibility({Family::K2VsCm, 1, 4, 0, 0}).kind == VerdictKind::ProvenImpossible);
    // All K2*-factors: the round robin needs no m-cycle kind to tile v.
    CHECK(feasibility(req(Family::K2VsCm, 10, 4, 9)).kind == VerdictKind::Solvable);
  }

  TEST_CASE("plan and solve refuse unsolvable requests") {
    const ParamRequest q = req(Family::K2VsCm, 8, 4, 6);
    CHECK_THROWS_AS(plan(q), NotSolvable);
    try {
      solve(q);
      FAIL("solve accepted an impossible request");
    } catch (const NotSolvable& e) {
      CHECK(e.verdict().kind == VerdictKind::ProvenImpossible);
    }
  }

  TEST_CASE("plans are deterministic and account for every factor") {
    for (const ParamRequest& q : {req(Family::K2VsCm, 24, 6, 7), req(Family::K2VsCm, 16, 8, 2),
                                  req(Family::CmVsC2m, 16, 8, 15), req(Family::K2VsCm, 36, 4, 8)}) {
      const CompositionPlan p = plan(q);
      CHECK(p.root.factors == q.v - 1);
      CHECK(p.root.r == q.r);
      CHECK(describe(p) == describe(plan(q)));
    }
  }

  TEST_CASE("solve returns verified certificates with the request") {
    const ParamRequest q = req(Family::CmVsC2m, 16, 4, 9);
    const Certificate c = solve(q);
    REQUIRE(c.request);
    CHECK(*c.request == q);
    CHECK(c.trace.step == "solve");
    CHECK(check_certificate(c).accepted());
    CHECK(c.count_kind(4) == 9);
    CHECK(c.count_kind(8) == 6);
  }

  TEST_CASE("reachable counts of K12* for the 4-cycle family") {
    const auto r = reachable_counts(Family::K2VsCm, 4, 12);
    for (int x : {0, 1, 2, 3, 4, 5, 7, 9, 11}) CHECK(std::count(r.begin(), r.end(), x) == 1);
    CHECK(std::count(r.begin(), r.end(), 10) == 0);
  }

  TEST_CASE("feasibility agrees with the exhaustive oracle for v <= 8") {
    OracleBudget budget;
    budget.time_limit = std::chrono::seconds(120);
    int impossible = 0, solvable = 0;
    for (Family f : {Family::K2VsCm, Family::CmVsC2m})
      for (int v = 3; v <= 8; ++v)
        for (int m = 3; m <= v; ++m)
          for (int r = 0; r < v; ++r) {
            const ParamRequest q = req(f, v, m, r);
            const FeasibilityVerdict verdict = feasibility(q);
            CAPTURE(to_string(q));
            if (verdict.kind == VerdictKind::Solvable) {
              ++solvable;
              CHECK(check_certificate(solve(q)).accepted());
            } else if (verdict.kind == VerdictKind::ProvenImpossible && kinds_tile(q)) {
              ++impossible;
              const auto res = exhaustive_factorize(complete_symmetric(v), *parse_kind_spec(oracle_spec(q)),
                                                    OracleMode::First, budget, true);
              CHECK(res.status == OracleStatus::Exhausted);
            }
          }
    CHECK(impossible > 0);
    CHECK(solvable > 0);
  }

  TEST_CASE("the possible exception at K6* is a nonexistence") {
    const ParamRequest q = req(Family::K2VsCm, 6, 6, 2);
    CHECK(feasibility(q).kind == VerdictKind::OpenException);
    const auto res = exhaustive_factorize(complete_symmetric(6), *parse_kind_spec(oracle_spec(q)), OracleMode::First);
    CHECK(res.status == OracleStatus::Exhausted);
  }

  TEST_CASE("survey rows") {
    const auto rows = survey(Family::CmVsC2m, 4, 16, 2);
    CHECK(rows.size() == 4 + 8 + 12 + 16);
    for (const SurveyRow& row : rows)
      if (row.verdict.kind == VerdictKind::Solvable) CHECK(row.verified);
  }
}
