// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: treecast_acceptance [--cli PATH]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treecast/broadcast.hpp"
#include "treecast/constructions.hpp"
#include "treecast/enumeration.hpp"
#include "treecast/laws.hpp"
#include "treecast/solvers.hpp"
#include "treecast/structure.hpp"

using namespace treecast;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::int64_t theorem_bound(const Tree& t) {
  const auto p = profile(t);
  return static_cast<std::int64_t>(t.order()) - static_cast<std::int64_t>(p.b) +
         static_cast<std::int64_t>(p.rho);
}

Outcome bound_holds() {
  SolverConfig cfg;
  cfg.use_value_bound = ValueBound::none;
  const auto r = verify_bound(2, 12, cfg);
  const auto reference = oracle::trees_by_extension(12);
  std::vector<std::size_t> counts(13, 0);
  for (const auto& row : r.rows) ++counts[row.n];
  for (std::size_t n = 2; n <= 12; ++n)
    if (counts[n] != reference[n].size())
      return {false, "n=" + std::to_string(n) + " has " + std::to_string(counts[n]) +
                         " trees, oracle " + std::to_string(reference[n].size())};
  for (const auto& row : r.rows)
    if (static_cast<std::int64_t>(row.alpha_bn) > row.bound) return {false, "counterexample " + row.id};
  if (!r.flagged.empty()) return {false, "flagged rows present"};
  return {true, std::to_string(r.rows.size()) + " trees, 0 counterexamples"};
}

Outcome solvers_agree() {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& t : free_trees(n)) {
      ++seen;
      if (alpha_bn(t).value != alpha_bn_naive(t).value)
        return {false, "disagreement on " + canonical_code(t)};
    }
  return {true, std::to_string(seen) + " trees"};
}

Outcome n_minus_one_exactly_for_paths_and_spiders() {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& t : free_trees(n)) {
      ++seen;
      const auto cls = classify(t);
      const bool spiderlike = cls == TreeClass::path || cls == TreeClass::star ||
                              cls == TreeClass::generalized_spider;
      const auto v = alpha_bn(t).value;
      if (spiderlike ? v != n - 1 : v > n - 2) return {false, "fails on " + canonical_code(t)};
    }
  return {true, std::to_string(seen) + " trees"};
}

Outcome caterpillar_witness_is_optimal() {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& t : free_trees(n)) {
      if (classify(t) != TreeClass::caterpillar) continue;
      const auto p = profile(t);
      if (!p.W_int.empty()) continue;
      const auto single = p.B_exactly(1);
      bool independent = true;
      for (Vertex a : single)
        for (Vertex b : single) independent &= t.distance(a, b) != 1;
      if (!independent) continue;
      ++seen;
      const auto f = caterpillar_witness(t);
      const auto w = static_cast<std::int64_t>(weight(f));
      if (!is_bn_independent(t, f) || w != theorem_bound(t) ||
          static_cast<std::int64_t>(alpha_bn(t).value) != w)
        return {false, "fails on " + canonical_code(t)};
    }
  if (seen == 0) return {false, "no qualifying caterpillar"};
  return {true, std::to_string(seen) + " caterpillars"};
}

Outcome fixture_value() {
  const auto t = fixture("fig_6_10").tree;
  const auto pruned = alpha_bn(t).value;
  const auto naive = alpha_bn_naive(t, true).value;
  if (pruned != 7 || naive != 7)
    return {false, "pruned " + std::to_string(pruned) + ", naive " + std::to_string(naive)};
  if (theorem_bound(t) != 7) return {false, "n - b + rho = " + std::to_string(theorem_bound(t))};
  const auto r = verify_bound(10, 10);
  for (const auto& row : r.rows)
    if (row.slack == 0 && row.rho == 1 && row.b == 4) return {true, "7; census witness " + row.id};
  return {false, "no n=10 census tree with slack 0, b=4, rho=1"};
}

Outcome laws_never_violated() {
  std::size_t checks = 0;
  using Checker = LawReport (*)(const Tree&, std::span<const Broadcast>);
  const Checker checkers[] = {check_lemma_hear1,       check_lemma_nonleaf1, check_lemma_pb_empty,
                              check_lemma_leaf_branch, check_lemma_2lb,      check_cor_branch};
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& t : free_trees(n)) {
      const auto optima = enumerate_optimal_broadcasts(t);
      for (auto check : checkers) {
        ++checks;
        const auto r = check(t, optima);
        if (r.verdict == Verdict::violated) return {false, r.law + " on " + canonical_code(t)};
      }
    }
  return {true, std::to_string(checks) + " checks"};
}

Outcome inequality_chain() {
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& t : free_trees(n)) {
      const auto bn = alpha_bn(t).value;
      if (independence_number(t) > bn) return {false, "alpha > alpha_bn on " + canonical_code(t)};
      if (n <= 9) {
        const auto h = alpha_h(t).value;
        if (h < bn || (bn > 0 && h >= 2 * bn))
          return {false, "alpha_h out of range on " + canonical_code(t)};
      }
    }
  return {true, "n <= 12, alpha_h through n = 9"};
}

Outcome diameter_observation() {
  std::size_t seen = 0;
  for (std::size_t n = 2; n <= 14; ++n)
    for (const auto& t : free_trees(n)) {
      ++seen;
      const auto b = profile(t).b;
      if (t.diameter() + b + 1 > n) return {false, "fails on " + canonical_code(t)};
    }
  return {true, std::to_string(seen) + " trees"};
}

Outcome question1_campaign(const std::string& cli) {
  const auto dir = fs::temp_directory_path() / "treecast_acceptance_q1";
  fs::remove_all(dir);
  std::size_t reported = 0;
  if (!cli.empty()) {
    const auto cmd = "\"" + cli + "\" enumerate --campaign q1 --range 2..12 --out \"" +
                     dir.string() + "\" > \"" + (dir.string() + ".csv") + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status != 0) return {false, "cli exited with status " + std::to_string(status)};
    if (!fs::exists(dir / "census.csv") || !fs::exists(dir / "counterexamples.csv"))
      return {false, "campaign files missing"};
  } else {
    CampaignOptions o;
    o.kind = Campaign::q1;
    o.n_min = 2;
    o.n_max = 12;
    o.out_dir = dir;
    run_campaign(o);
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".tree") continue;
    ++reported;
    auto bpath = entry.path();
    bpath.replace_extension(".bcast");
    const auto t = parse_tree(slurp(entry.path()));
    const auto f = parse_broadcast(t, slurp(bpath));
    const auto row = census_row(t, SolverConfig{}, false);
    if (!is_bn_independent(t, f) || static_cast<std::int64_t>(weight(f)) <= row.q1_bound)
      return {false, "counterexample " + entry.path().stem().string() + " does not replay"};
  }
  fs::remove_all(dir);
  fs::remove(dir.string() + ".csv");
  return {true, "completed, " + std::to_string(reported) + " counterexamples replayed"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[++i];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"bound on every tree 2..12", bound_holds},
      {"pruned equals naive 2..8", solvers_agree},
      {"n-1 exactly for paths and spiders 2..12", n_minus_one_exactly_for_paths_and_spiders},
      {"caterpillar witness optimal n<=12", caterpillar_witness_is_optimal},
      {"fixture fig_6_10 = 7", fixture_value},
      {"lemma checkers never violated 2..8", laws_never_violated},
      {"inequality chain", inequality_chain},
      {"diameter observation n<=14", diameter_observation},
      {"question 1 campaign 2..12", [&] { return question1_campaign(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail << "\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
