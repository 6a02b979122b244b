#include <doctest.h>

#include <algorithm>

#include "hwp/factor.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

bool has_violation(const VerificationReport& r, const std::string& prefix) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const Failure& f) { return f.violation.rfind(prefix, 0) == 0; });
}

// K4* as one K2*-factor and two directed 4-cycle factors.
Certificate k4_certificate() {
  Certificate c;
  c.host_desc = complete_host(4);
  c.host = complete_symmetric(4);
  c.factors.push_back(matching_factor({{0, 2}, {1, 3}}));
  c.factors.push_back(cycles_factor(4, {{0, 1, 2, 3}}));
  c.factors.push_back(cycles_factor(4, {{0, 3, 2, 1}}));
  c.request = ParamRequest{Family::K2VsCm, 4, 4, 1, 2};
  canonicalize(c);
  return c;
}

}  // namespace

TEST_SUITE("verifier") {
  TEST_CASE("accepts a valid factorization") {
    const Certificate c = k4_certificate();
    const auto report = check_certificate(c);
    CHECK(report.accepted());
    CHECK(describe(report) == "accepted\n");
    CHECK(c.count_kind(kK2) == 1);
    CHECK(c.count_kind(4) == 2);
  }

  TEST_CASE("check_factor flags wrong cycle lengths and non-spanning factors") {
    const Digraph k6 = complete_symmetric(6);
    CHECK(check_factor(cycles_factor(3, {{0, 1, 2}, {3, 4, 5}}), k6).accepted());
    Factor f = cycles_factor(3, {{0, 1, 2}, {3, 4, 5}});
    f.cycle_length = 6;
    CHECK(has_violation(check_factor(f, k6), "cycle_length"));
    const Factor partial = cycles_factor(3, {{0, 1, 2}});
    CHECK(has_violation(check_factor(partial, k6), "not_spanning"));
  }

  TEST_CASE("arcs outside the host are reported") {
    const Digraph host = cm_star_blowup(4);
    // (0,0) -> (0,2) is not an arc of C4*[2].
    const Factor f = matching_factor({{0, 2}, {1, 3}, {4, 6}, {5, 7}});
    CHECK(has_violation(check_factor(f, host), "arc_not_in_host"));
  }

  TEST_CASE("K2* factor must be symmetric") {
    Factor f = matching_factor({{0, 1}, {2, 3}});
    f.arcs.erase(f.arcs.begin());
    CHECK_FALSE(check_factor(f, complete_symmetric(4)).accepted());
  }

  TEST_CASE("certificate level violations") {
    Certificate c = k4_certificate();
    c.factors.pop_back();
    CHECK(has_violation(check_certificate(c), "uncovered"));
    CHECK(has_violation(check_certificate(c), "kind_count"));

    Certificate dup = k4_certificate();
    dup.factors.push_back(dup.factors.back());
    CHECK(has_violation(check_certificate(dup), "overlap"));

    Certificate wrong_r = k4_certificate();
    wrong_r.request->r = 3;
    wrong_r.request->s = 0;
    CHECK(has_violation(check_certificate(wrong_r), "kind_count"));

    Certificate order = k4_certificate();
    order.host_desc.order = 5;
    CHECK(has_violation(check_certificate(order), "host descriptor order"));
  }

  TEST_CASE("kind spec parsing") {
    const auto spec = parse_kind_spec("k2x2+c4x1");
    REQUIRE(spec);
    CHECK(spec->at(kK2) == 2);
    CHECK(spec->at(4) == 1);
    CHECK(format_kind_spec(*spec) == "k2x2+c4x1");
    CHECK_FALSE(parse_kind_spec("c4"));
    CHECK_FALSE(parse_kind_spec("c4x0"));
    CHECK_FALSE(parse_kind_spec("q4x1"));
    CHECK_FALSE(parse_kind_spec("c4x1y"));
  }
}
