#include <doctest.h>

#include "hwp/named_graphs.hpp"
#include "hwp/search.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

OracleResult run(int v, const std::string& spec, OracleMode mode = OracleMode::Count) {
  return exhaustive_factorize(complete_symmetric(v), *parse_kind_spec(spec), mode);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("counts on tiny hosts") {
    const auto k4_matchings = run(4, "k2x3");
    CHECK(k4_matchings.status == OracleStatus::Found);
    CHECK(k4_matchings.unordered_count == 1);
    CHECK(k4_matchings.ordered_count == 6);

    const auto k3_cycles = run(3, "c3x2");
    CHECK(k3_cycles.unordered_count == 1);
    CHECK(k3_cycles.ordered_count == 2);

    // Three choices of the K2*-factor; the leftover C4* splits one way.
    CHECK(run(4, "k2x1+c4x2").unordered_count == 3);
  }

  TEST_CASE("nonexistence on K4*") {
    CHECK(run(4, "c4x3", OracleMode::First).status == OracleStatus::Exhausted);
    CHECK(run(4, "k2x2+c4x1", OracleMode::First).status == OracleStatus::Exhausted);
  }

  TEST_CASE("all mode returns verified factorizations") {
    const auto res = run(4, "k2x1+c4x2", OracleMode::All);
    REQUIRE(res.solutions.size() == res.unordered_count);
    for (const auto& sol : res.solutions) {
      Certificate c;
      c.host_desc = complete_host(4);
      c.host = complete_symmetric(4);
      c.factors = sol;
      CHECK(check_certificate(c).accepted());
    }
  }

  TEST_CASE("spec must account for every arc") {
    CHECK_THROWS_AS(run(4, "k2x2"), std::invalid_argument);
  }

  TEST_CASE("size ceiling and force") {
    CHECK(complete_symmetric(7).size() == kOracleArcCeiling);
    CHECK_THROWS_AS(run(8, "c8x7", OracleMode::First), std::invalid_argument);
    OracleBudget tiny;
    tiny.node_limit = 10;
    const auto res =
        exhaustive_factorize(complete_symmetric(8), *parse_kind_spec("k2x6+c8x1"), OracleMode::First, tiny, true);
    CHECK(res.status == OracleStatus::BudgetExceeded);
  }

  TEST_CASE("randomized search agrees with the oracle on K6*") {
    const auto oracle = run(6, "k2x1+c6x4", OracleMode::First);
    const auto search = backtrack_search(complete_symmetric(6), {{kK2, 1, false}, {6, 4, false}});
    CHECK((oracle.status == OracleStatus::Found) == (search.status == SearchStatus::Found));
  }
}
