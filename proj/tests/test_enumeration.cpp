#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "treecast/constructions.hpp"
#include "treecast/enumeration.hpp"
#include "treecast/error.hpp"

using namespace treecast;

namespace {

std::string ahu(const Tree& t) { return oracle::ahu(support::order(t), support::edges(t)); }

Tree relabel(const Tree& t, std::mt19937& rng) {
  std::vector<Vertex> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& e : t.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree::from_edges(t.order(), edges);
}

const CensusRow& row_for(const CampaignResult& r, const Tree& t) {
  const auto id = canonical_code(t);
  for (const auto& row : r.rows)
    if (row.id == id) return row;
  FAIL("tree missing from campaign: " << id);
  return r.rows.front();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("free tree counts match labelled-tree deduplication") {
  for (unsigned n = 1; n <= 8; ++n) CHECK(free_trees(n).size() == oracle::count_by_pruefer(n));
}

TEST_CASE("free trees are exactly the isomorphism classes up to 14 vertices") {
  const auto reference = oracle::trees_by_extension(14);
  for (unsigned n = 1; n <= 14; ++n) {
    std::set<std::string> expected;
    for (const auto& e : reference[n]) expected.insert(oracle::ahu(n, e));
    std::set<std::string> got;
    for (const auto& t : free_trees(n)) CHECK(got.insert(ahu(t)).second);
    CHECK(got == expected);
  }
}

TEST_CASE("known census values") {
  const std::size_t counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (std::size_t n = 1; n <= 12; ++n) CHECK(free_trees(n).size() == counts[n - 1]);
  auto four = free_trees(4);
  std::set<TreeClass> classes;
  for (const auto& t : four) classes.insert(classify(t));
  CHECK(classes == std::set<TreeClass>{TreeClass::path, TreeClass::star});
}

TEST_CASE("generator bounds") {
  CHECK_THROWS_AS(FreeTreeGenerator(0), Error);
  CHECK_THROWS_AS(FreeTreeGenerator(FreeTreeGenerator::max_order + 1), Error);
  FreeTreeGenerator g(1);
  CHECK(g.next().has_value());
  CHECK_FALSE(g.next().has_value());
}

TEST_CASE("canonical codes identify isomorphism classes") {
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 11; ++n) {
    std::set<std::string> codes;
    for (const auto& t : free_trees(n)) {
      const auto code = canonical_code(t);
      CHECK(codes.insert(code).second);
      for (int k = 0; k < 3; ++k) CHECK(canonical_code(relabel(t, rng)) == code);
    }
  }
  CHECK(canonical_code(support::path(4)) == "0121");
  CHECK(canonical_code(support::star(3)) == "0111");
}

TEST_CASE("level sequences build trees") {
  const std::uint32_t levels[] = {0, 1, 2, 1, 1};
  auto t = tree_from_level_sequence(levels);
  CHECK(to_edge_list(t) == "5\n0 1\n0 3\n0 4\n1 2\n");
}

TEST_CASE("bound campaign") {
  auto r = verify_bound(2, 9);
  CHECK(r.flagged.empty());
  CHECK(r.rows.size() == 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
  for (const auto& row : r.rows) {
    CHECK(row.slack >= 0);
    CHECK(row.alpha <= row.alpha_bn);
    CHECK(row.slack == row.bound - static_cast<std::int64_t>(row.alpha_bn));
    if (row.cls == TreeClass::path) CHECK(row.slack == 1);
    if (row.cls == TreeClass::generalized_spider || row.cls == TreeClass::star) CHECK(row.slack == 0);
    CHECK(is_bn_independent(row.tree, row.witness));
    CHECK(weight(row.witness) == row.alpha_bn);
  }
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    CHECK(std::make_pair(r.rows[i - 1].n, r.rows[i - 1].id) < std::make_pair(r.rows[i].n, r.rows[i].id));
}

TEST_CASE("campaign output does not depend on the worker count") {
  CampaignOptions o;
  o.n_min = 2;
  o.n_max = 9;
  o.workers = 1;
  const auto serial = census_csv(run_campaign(o));
  o.workers = 4;
  CHECK(census_csv(run_campaign(o)) == serial);
  CHECK(census_csv(run_campaign(o)) == serial);
}

TEST_CASE("campaign guards") {
  CampaignOptions o;
  o.solver.use_value_bound = ValueBound::theorem;
  CHECK_THROWS_AS(run_campaign(o), Error);
  CampaignOptions bad_range;
  bad_range.n_min = 5;
  bad_range.n_max = 4;
  CHECK_THROWS_AS(run_campaign(bad_range), Error);
  try {
    compare_alpha_h(10);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::limit);
  }
}

TEST_CASE("question 1 candidate bound") {
  auto r = search_question1(9);
  for (const auto& row : r.rows) {
    CHECK(row.q1_bound <= row.bound);
    const auto p = profile(row.tree);
    bool r_independent = true;
    for (Vertex a : p.R)
      for (Vertex b : p.R)
        if (row.tree.distance(a, b) == 1) r_independent = false;
    if (r_independent) CHECK(row.q1_bound == row.bound);
  }
  for (auto i : r.flagged) CHECK(static_cast<std::int64_t>(r.rows[i].alpha_bn) > r.rows[i].q1_bound);
}

TEST_CASE("equality trees") {
  auto r = collect_equality_trees(9);
  std::set<std::string> ids;
  for (auto i : r.flagged) ids.insert(r.rows[i].id);
  CHECK_FALSE(ids.count(canonical_code(support::path(6))));
  CHECK(ids.count(canonical_code(fixture("sp222").tree)));
  CHECK(ids.count(canonical_code(support::double_star())));
  CHECK(ids.count(canonical_code(make_caterpillar(parse_caterpillar_spec("1,1/1/1,1")))));
}

TEST_CASE("alpha_h comparison") {
  auto r = compare_alpha_h(5);
  CHECK(row_for(r, support::path(2)).alpha_h == 1u);
  CHECK(row_for(r, support::path(4)).alpha_h == 4u);
  CHECK(row_for(r, support::path(4)).alpha_bn == 3u);
  CHECK(row_for(r, support::star(3)).alpha_h == 3u);
  const auto csv = flagged_csv(r);
  CHECK(csv.find(canonical_code(support::star(3)) + ",4,3,3,1\n") != std::string::npos);
  CHECK(csv.find(canonical_code(support::path(4)) + ",4,3,4,0\n") != std::string::npos);
}

TEST_CASE("campaign files") {
  const auto dir = std::filesystem::temp_directory_path() / "treecast_campaign_test";
  std::filesystem::remove_all(dir);
  CampaignOptions o;
  o.kind = Campaign::equality;
  o.n_max = 10;
  o.out_dir = dir;
  auto r = run_campaign(o);
  const auto census = slurp(dir / "census.csv");
  CHECK(census.rfind(std::string(census_header) + "\n", 0) == 0);
  CHECK(census == census_csv(r));
  // alpha_h is only filled within its oracle range.
  for (const auto& row : r.rows) CHECK(row.alpha_h.has_value() == (row.n <= 9));
  CHECK(census.find(",NA,") != std::string::npos);
  CHECK(slurp(dir / "equality.csv") == flagged_csv(r));
  std::filesystem::remove_all(dir);
}

TEST_CASE("campaign names") {
  CHECK(parse_campaign("q1") == Campaign::q1);
  CHECK(parse_campaign("alphah") == Campaign::alphah);
  CHECK_FALSE(parse_campaign("theorem"));
  CHECK(to_string(Campaign::bound) == "bound");
}
