#include <doctest.h>

#include <algorithm>
#include <map>

#include "hwp/building_blocks.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"
#include "support/cycles.hpp"

using namespace hwp;

TEST_SUITE("building_blocks") {
  TEST_CASE("round-robin 1-factorization") {
    for (int n = 2; n <= 16; n += 2) {
      const auto f = one_factorization_complete(n);
      CHECK(f.factors.size() == static_cast<std::size_t>(n - 1));
      CHECK(check_undirected(f).empty());
    }
  }

  TEST_CASE("Walecki decompositions cover K_m") {
    for (int m = 3; m <= 15; m += 2) {
      const auto f = walecki_odd(m);
      CHECK(f.factors.size() == static_cast<std::size_t>((m - 1) / 2));
      CHECK(check_undirected(f).empty());
    }
    for (int m = 4; m <= 14; m += 2) {
      const auto w = walecki_even(m);
      CHECK(w.cycles.size() == static_cast<std::size_t>((m - 2) / 2));
      CHECK(w.f == f_matching(m));
      CHECK(check_undirected(w.as_factorization()).empty());
    }
  }

  TEST_CASE("symmetric lift of a 1-factorization gives K2* factors") {
    const Certificate c = symmetric_lift(one_factorization_complete(6));
    CHECK(c.factors.size() == 5);
    for (const Factor& f : c.factors) CHECK(f.is_k2());
    CHECK(check_certificate(c).accepted());
  }

  TEST_CASE("orient_split yields the two orientations") {
    const Certificate c = symmetric_lift(walecki_odd(7));
    for (const Factor& f : c.factors) {
      REQUIRE(f.symmetric);
      const auto [a, b] = orient_split(f, 7);
      CHECK(a.cycle_length == 7);
      CHECK(factor_digraph(b, 7) == reverse(factor_digraph(a, 7)));
      CHECK(arc_sum(factor_digraph(a, 7), factor_digraph(b, 7)) == factor_digraph(f, 7));
    }
    CHECK_THROWS_AS(orient_split(cycles_factor(3, {{0, 1, 2}}), 3), std::invalid_argument);
  }

  TEST_CASE("Haggkvist doubling keeps the requested cycle type") {
    const std::vector<Vertex> walk{0, 1, 2, 3, 4, 5};
    const std::vector<int> h{4, 8};
    const auto split = haggkvist_double(walk, true, 6, h);
    CHECK(testing::cycle_type(split.first) == std::multiset<int>{4, 8});
    CHECK(testing::cycle_type(split.second) == std::multiset<int>{4, 8});
    CHECK_THROWS_AS(haggkvist_double(walk, true, 6, {3, 9}), std::invalid_argument);
  }

  TEST_CASE("bipartite and equipartite factorizations") {
    const auto bip = bipartite_cycle_factorization(4, 4);
    CHECK(bip.factorization.factors.size() == 2);
    CHECK(check_undirected(bip.factorization).empty());

    const auto eq = equipartite_one_factorization(2, 3);
    CHECK(eq.factors.size() == 4);
    CHECK(check_undirected(eq).empty());

    Certificate c;
    c.host_desc = equipartite_host(3, 2);
    c.host = complete_symmetric_equipartite(3, 2).graph;
    c.factors = directed_bipartite_factorization(3, 6);
    CHECK(c.factors.size() == 3);
    CHECK(check_certificate(c).accepted());
  }

  TEST_CASE("Kirkman triple systems") {
    for (int n : {3, 9, 15}) {
      const auto kts = kirkman_triple_system(n);
      CHECK(kts.factors.size() == static_cast<std::size_t>((n - 1) / 2));
      CHECK(check_undirected(kts).empty());
      for (const auto& f : kts.factors) CHECK(f.cycle_length == 3);
    }
  }
}
