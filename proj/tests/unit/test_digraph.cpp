#include <doctest.h>

#include <set>

#include "hwp/digraph.hpp"
#include "hwp/named_graphs.hpp"

using namespace hwp;

TEST_SUITE("digraph") {
  TEST_CASE("from_arcs sorts and rejects malformed input") {
    const Digraph d = Digraph::from_arcs(3, std::vector<Arc>{{2, 0}, {0, 1}, {1, 2}});
    CHECK(d.size() == 3);
    CHECK(d.arcs().front() == Arc{0, 1});
    CHECK(d.has_arc(2, 0));
    CHECK_FALSE(d.has_arc(0, 2));
    CHECK_FALSE(d.has_arc(-1, 0));
    CHECK_THROWS_AS(Digraph::from_arcs(3, std::vector<Arc>{{1, 1}}), GraphError);
    CHECK_THROWS_AS(Digraph::from_arcs(3, std::vector<Arc>{{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Digraph::from_arcs(3, std::vector<Arc>{{0, 3}}), GraphError);
  }

  TEST_CASE("complete symmetric digraph") {
    for (int v = 2; v <= 9; ++v) {
      const Digraph k = complete_symmetric(v);
      CHECK(k.size() == static_cast<std::size_t>(v * (v - 1)));
      CHECK(k.is_symmetric());
      for (int u = 0; u < v; ++u) {
        CHECK(k.out_degree(u) == v - 1);
        CHECK(k.in_degree(u) == v - 1);
      }
    }
    CHECK_THROWS_AS(complete_symmetric(1), GraphError);
  }

  TEST_CASE("equipartite host has no arcs inside a part") {
    const Equipartite e = complete_symmetric_equipartite(4, 3);
    CHECK(e.graph.order() == 12);
    CHECK(e.graph.size() == 96);
    for (const Arc& a : e.graph.arcs()) CHECK(e.scheme.part_of(a.tail) != e.scheme.part_of(a.head));
  }

  TEST_CASE("arc_sum, arc_difference and reverse") {
    const Digraph c = directed_cycle(5);
    const Digraph r = reverse(c);
    const Digraph both = arc_sum(c, r);
    CHECK(both == symmetric_cycle(5));
    CHECK(arc_difference(both, c) == r);
    CHECK(reverse(reverse(both)) == both);
    CHECK_THROWS_AS(arc_sum(c, c), GraphError);
  }

  TEST_CASE("relabel and blowup") {
    const Digraph c = directed_cycle(3);
    const std::vector<Vertex> map{2, 0, 1};
    const Digraph d = relabel(c, map, 3);
    CHECK(d.has_arc(2, 0));
    CHECK(d.has_arc(0, 1));
    const Digraph b = blowup(c, 2);
    CHECK(b.order() == 6);
    CHECK(b.size() == 12);
    CHECK(b.has_arc(0, 4));  // copy 0 of vertex 0 to copy 1 of vertex 1
  }

  TEST_CASE("named graphs on Z2 x Zm") {
    CHECK(layered(1, -1, 5) == 9);
    CHECK(cm_star_blowup(4).size() == 32);
    CHECK(cm_star_blowup_plus_I(4).size() == 40);
    CHECK(named_factor_I(4).arcs.size() == 8);
    const Factor f = named_factor_F(6);
    CHECK(f.arcs.size() == 6);
    CHECK(f.is_k2());
    CHECK(f_matching(6) == std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 5}, {2, 4}});
    CHECK_THROWS_AS(named_factor_F(5), GraphError);
  }

  TEST_CASE("Gamma blow-up differs from the printed Cayley connection set") {
    // The printed set: (a, ±(m - 2i)) for 1 <= i < m/2, the C*[2] steps, and (a, ±m/2).
    const int m = 6;
    std::set<std::pair<int, int>> conn;
    auto add = [&](int a, int d) { conn.insert({a, ((d % m) + m) % m}); };
    for (int i = 1; i < m / 2; ++i)
      for (int a : {0, 1}) {
        add(a, m - 2 * i);
        add(a, 2 * i - m);
      }
    for (int a : {0, 1}) {
      add(a, 1);
      add(a, -1);
      add(a, m / 2);
      add(a, -m / 2);
    }
    CayleySpec spec{2, m, {conn.begin(), conn.end()}};
    const Digraph printed = cayley(spec);
    const Digraph gamma = named_graph_Gamma(m);
    CHECK(printed.size() == 120);
    CHECK(gamma.size() == 72);
    CHECK(arc_sum(cm_star_blowup(m), blowup(factor_digraph(named_factor_F(m), m), 2)) == gamma);
  }
}
