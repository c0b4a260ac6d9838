#include <set>

#include "doctest.h"
#include "support.hpp"
#include "treecast/constructions.hpp"
#include "treecast/enumeration.hpp"
#include "treecast/error.hpp"
#include "treecast/solvers.hpp"

using namespace treecast;

namespace {

using Values = std::vector<unsigned>;

SolverConfig naive() {
  SolverConfig c;
  c.mode = SolverMode::naive;
  return c;
}

}  // namespace

TEST_CASE("exhaustive solver on small trees") {
  CHECK(alpha_bn_naive(support::path(4)).value == 3);
  CHECK(alpha_bn_naive(support::star(3)).value == 3);
  CHECK(alpha_bn_naive(support::double_star()).value == 4);
}

TEST_CASE("pruned solver values") {
  CHECK(alpha_bn(make_spider(std::vector<std::uint32_t>{3, 3, 3})).value == 9);
  CHECK(alpha_bn(fixture("fig_6_10").tree).value == 7);
  CHECK(alpha_bn(support::path(2)).value == 1);
  CHECK(alpha_bn(support::path(5), naive()).value == 4);
}

TEST_CASE("solvers refuse trivial trees and oversized oracle runs") {
  CHECK_THROWS_AS(alpha_bn(support::tree("1\n")), Error);
  auto p9 = support::path(9);
  try {
    alpha_bn_naive(p9);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::limit);
  }
  CHECK(alpha_bn_naive(p9, true).value == 8);
  CHECK_THROWS_AS(enumerate_optimal_broadcasts(p9), Error);
  CHECK_THROWS_AS(alpha_h(support::path(10)), Error);
}

TEST_CASE("node limit carries the incumbent") {
  auto t = fixture("fig_6_10").tree;
  SolverConfig cfg;
  cfg.node_limit = 5;
  try {
    alpha_bn(t, cfg);
    FAIL("expected the node limit to trip");
  } catch (const NodeLimitExceeded& e) {
    CHECK(e.code() == Errc::limit);
    CHECK(is_bn_independent(t, e.incumbent().witness));
    CHECK(weight(e.incumbent().witness) == e.incumbent().value);
  }
}

TEST_CASE("optimal broadcast enumeration") {
  SUBCASE("P2 has two optima") {
    auto t = support::path(2);
    auto all = enumerate_optimal_broadcasts(t);
    REQUIRE(all.size() == 2);
    CHECK(support::values(all[0]) == Values{1, 0});
    CHECK(support::values(all[1]) == Values{0, 1});
  }
  SUBCASE("P3") {
    auto t = support::path(3);
    std::set<Values> got;
    for (const auto& f : enumerate_optimal_broadcasts(t)) got.insert(support::values(f));
    CHECK(got.count({2, 0, 0}));
    CHECK(got.count({0, 0, 2}));
    CHECK(got.count({1, 0, 1}));
  }
  SUBCASE("star leaves") {
    auto t = support::star(3);
    std::set<Values> got;
    for (const auto& f : enumerate_optimal_broadcasts(t)) got.insert(support::values(f));
    CHECK(got.count({0, 1, 1, 1}));
  }
}

TEST_CASE("alpha_h and independence number") {
  CHECK(alpha_h(support::path(2)).value == 1);
  CHECK(alpha_h(support::star(3)).value == 3);
  auto p4 = alpha_h(support::path(4));
  CHECK(p4.value == 4);
  CHECK(support::values(p4.witness) == Values{2, 0, 0, 2});
  CHECK(independence_number(support::path(4)) == 2);
  CHECK(independence_number(support::star(3)) == 3);
  CHECK(independence_number(support::path(2)) == 1);
}

TEST_CASE("witness is the lexicographically greatest optimum") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& t : free_trees(n)) {
      const auto best = oracle::alpha_bn(support::order(t), support::edges(t));
      const auto greatest = *std::max_element(best.all.begin(), best.all.end());
      CHECK(support::values(alpha_bn_naive(t).witness) == greatest);
      // The pruned search only sees non-leaf strengths 0 and 1.
      Values restricted;
      for (const auto& f : best.all) {
        bool ok = true;
        for (Vertex v = 0; v < n; ++v)
          if (!t.is_leaf(v) && f[v] > 1) ok = false;
        if (ok && f > restricted) restricted = f;
      }
      CHECK(support::values(alpha_bn(t).witness) == restricted);
      CHECK(support::values(enumerate_optimal_broadcasts(t).front()) == greatest);
    }
  }
}

TEST_CASE("solvers agree with the brute-force oracle up to 8 vertices") {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& t : free_trees(n)) {
      CAPTURE(to_edge_list(t));
      const auto best = oracle::alpha_bn(support::order(t), support::edges(t));
      const auto pruned = alpha_bn(t);
      REQUIRE(pruned.value == best.value);
      REQUIRE(alpha_bn(t, naive()).value == best.value);
      SolverConfig loose;
      loose.use_value_bound = ValueBound::none;
      REQUIRE(alpha_bn(t, loose).value == best.value);

      CHECK(is_bn_independent(t, pruned.witness));
      CHECK(weight(pruned.witness) == pruned.value);

      const auto all = enumerate_optimal_broadcasts(t);
      std::set<Values> mine, theirs(best.all.begin(), best.all.end());
      for (const auto& f : all) {
        CHECK(mine.insert(support::values(f)).second);
        CHECK(is_maximal_bn_independent(t, f));
      }
      REQUIRE(mine == theirs);

      const auto h = alpha_h(t);
      CHECK(h.value == oracle::alpha_h(support::order(t), support::edges(t)));
      CHECK(is_h_independent(t, h.witness));
      CHECK(weight(h.witness) == h.value);
      CHECK(independence_number(t) == oracle::alpha(support::order(t), support::edges(t)));
    }
  }
}

TEST_CASE("alpha_h agrees with the oracle at 9 vertices") {
  for (const auto& t : free_trees(9))
    REQUIRE(alpha_h(t).value == oracle::alpha_h(support::order(t), support::edges(t)));
}

TEST_CASE("sandwich and ratio") {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& t : free_trees(n)) {
      const auto a = independence_number(t);
      const auto bn = alpha_bn(t).value;
      const auto h = alpha_h(t).value;
      CHECK(a <= bn);
      CHECK(bn <= h);
      CHECK(h < 2 * bn);
    }
  }
}

TEST_CASE("value is n - 1 exactly for paths and generalized spiders") {
  for (std::size_t n = 2; n <= 11; ++n) {
    for (const auto& t : free_trees(n)) {
      const auto cls = classify(t);
      const bool extreme =
          cls == TreeClass::path || cls == TreeClass::star || cls == TreeClass::generalized_spider;
      CHECK((alpha_bn(t).value == n - 1) == extreme);
    }
  }
}
