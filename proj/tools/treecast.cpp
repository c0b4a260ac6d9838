// Command-line front end over the C library interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treecast/treecast.h"

namespace {

enum Exit { ok = 0, predicate_failed = 1, usage = 2, refused = 3 };

struct Failure {
  int code;
};

struct TreeDel {
  void operator()(tc_tree* t) const { tc_tree_free(t); }
};
struct BcastDel {
  void operator()(tc_broadcast* f) const { tc_broadcast_free(f); }
};
struct SolDel {
  void operator()(tc_solution* s) const { tc_solution_free(s); }
};
struct ListDel {
  void operator()(tc_tree_list* l) const { tc_tree_list_free(l); }
};
using TreePtr = std::unique_ptr<tc_tree, TreeDel>;
using BcastPtr = std::unique_ptr<tc_broadcast, BcastDel>;
using SolPtr = std::unique_ptr<tc_solution, SolDel>;
using ListPtr = std::unique_ptr<tc_tree_list, ListDel>;

int exit_for(tc_status s) { return s == TC_ERR_LIMIT ? refused : usage; }

[[noreturn]] void fail(tc_status s, const std::string& context) {
  std::cerr << "treecast: " << context << ": " << tc_last_error() << "\n";
  throw Failure{exit_for(s)};
}

void check(tc_status s, const std::string& context) {
  if (s != TC_OK) fail(s, context);
}

std::string take(char* s) {
  std::string out(s ? s : "");
  tc_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "treecast: cannot read " << path << "\n";
    throw Failure{usage};
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "treecast: cannot write " << path << "\n";
    throw Failure{usage};
  }
}

TreePtr load_tree(const std::string& path) {
  tc_tree* t = nullptr;
  check(tc_tree_parse(read_input(path).c_str(), &t), path);
  return TreePtr(t);
}

BcastPtr load_broadcast(const tc_tree* t, const std::string& path) {
  tc_broadcast* f = nullptr;
  check(tc_broadcast_parse(t, read_input(path).c_str(), &f), path);
  return BcastPtr(f);
}

std::string broadcast_text(const tc_broadcast* f) {
  char* s = nullptr;
  check(tc_broadcast_to_text(f, &s), "broadcast");
  return take(s);
}

std::string dot(const tc_tree* t, const tc_broadcast* f) {
  char* s = nullptr;
  check(tc_tree_dot(t, f, &s), "dot");
  return take(s);
}

std::string csv_values(const tc_broadcast* f) {
  std::string out;
  const auto* v = tc_broadcast_values(f);
  for (size_t i = 0; i < tc_broadcast_order(f); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

struct SolveArgs {
  std::string tree;
  std::string mode = "pruned";
  std::string bound = "n-1";
  bool all_optima = false;
  bool alpha_h = false;
  bool csv = false;
  uint64_t node_limit = 0;
  bool override_limit = false;
};

tc_solver_options solver_options(const SolveArgs& a) {
  tc_solver_options o;
  tc_solver_options_init(&o);
  o.mode = a.mode == "naive" ? TC_MODE_NAIVE : TC_MODE_PRUNED;
  o.value_bound = a.bound == "none" ? TC_BOUND_NONE
                  : a.bound == "theorem" ? TC_BOUND_THEOREM
                                         : TC_BOUND_N_MINUS_1;
  o.node_limit = a.node_limit;
  o.override_limits = a.override_limit;
  o.all_optima = a.all_optima;
  return o;
}

int run_analyze(const std::string& path, bool as_dot) {
  auto t = load_tree(path);
  if (as_dot) {
    std::cout << dot(t.get(), nullptr);
    return ok;
  }
  char* s = nullptr;
  check(tc_tree_profile_json(t.get(), &s), "analyze");
  std::cout << take(s);
  return ok;
}

int run_check(const std::string& tree_path, const std::string& bcast_path, bool as_dot) {
  auto t = load_tree(tree_path);
  auto f = load_broadcast(t.get(), bcast_path);
  tc_check_report r;
  char* text = nullptr;
  check(tc_broadcast_check(t.get(), f.get(), &r, &text), "check");
  const auto report = take(text);
  if (as_dot)
    std::cout << dot(t.get(), f.get());
  else
    std::cout << report;
  return r.bn_independent ? ok : predicate_failed;
}

int run_solve(const SolveArgs& a) {
  auto t = load_tree(a.tree);
  const auto opts = solver_options(a);
  tc_solution* raw = nullptr;
  const auto status = tc_solve_alpha_bn(t.get(), &opts, &raw);
  SolPtr sol(raw);
  if (status != TC_OK) {
    if (sol && tc_solution_is_partial(sol.get())) {
      std::cerr << "treecast: " << tc_last_error() << "\n";
      std::cout << "alpha_bn >= " << tc_solution_value(sol.get()) << " (incomplete)\n"
                << broadcast_text(tc_solution_witness(sol.get()));
      return refused;
    }
    fail(status, "solve");
  }

  std::optional<uint64_t> h;
  if (a.alpha_h) {
    tc_solution* hs = nullptr;
    check(tc_solve_alpha_h(t.get(), a.override_limit, &hs), "alpha_h");
    h = tc_solution_value(hs);
    tc_solution_free(hs);
  }

  const auto* w = tc_solution_witness(sol.get());
  if (a.csv) {
    std::cout << "alpha_bn,alpha_h,nodes,witness\n"
              << tc_solution_value(sol.get()) << ',' << (h ? std::to_string(*h) : "NA") << ','
              << tc_solution_nodes(sol.get()) << ',' << csv_values(w) << '\n';
    if (a.all_optima)
      for (size_t i = 0; i < tc_solution_optima_count(sol.get()); ++i)
        std::cout << "optimum," << csv_values(tc_solution_optimum(sol.get(), i)) << '\n';
    return ok;
  }
  std::cout << "alpha_bn = " << tc_solution_value(sol.get()) << "\n";
  if (h) std::cout << "alpha_h = " << *h << "\n";
  std::cout << "nodes = " << tc_solution_nodes(sol.get()) << "\n# witness\n" << broadcast_text(w);
  if (a.all_optima) {
    const auto count = tc_solution_optima_count(sol.get());
    std::cout << "# optima: " << count << "\n";
    for (size_t i = 0; i < count; ++i)
      std::cout << "[" << i << "] " << csv_values(tc_solution_optimum(sol.get(), i)) << "\n";
  }
  return ok;
}

int run_laws(const std::string& path, std::optional<size_t> enumerate_n, bool csv) {
  std::vector<const tc_tree*> trees;
  TreePtr single;
  ListPtr list;
  if (enumerate_n) {
    tc_tree_list* l = nullptr;
    check(tc_free_trees(*enumerate_n, &l), "enumerate");
    list.reset(l);
    for (size_t i = 0; i < tc_tree_list_size(l); ++i) trees.push_back(tc_tree_list_get(l, i));
  } else {
    single = load_tree(path);
    trees.push_back(single.get());
  }
  char* s = nullptr;
  size_t violated = 0;
  check(tc_laws_report(trees.data(), trees.size(), csv, &s, &violated), "laws");
  std::cout << take(s);
  return violated ? predicate_failed : ok;
}

int run_construct(const std::string& kind, const std::string& arg, const std::string& prefix,
                  bool as_dot) {
  tc_tree* raw = nullptr;
  if (kind == "spider")
    check(tc_construct_spider(arg.c_str(), &raw), "spider " + arg);
  else if (kind == "caterpillar")
    check(tc_construct_caterpillar(arg.c_str(), &raw), "caterpillar " + arg);
  else
    check(tc_fixture(arg.c_str(), &raw, nullptr), "fixture " + arg);
  TreePtr t(raw);

  tc_broadcast* fraw = nullptr;
  SolPtr sol;
  if (kind == "spider") {
    check(tc_spider_witness(t.get(), &fraw), "spider witness");
  } else if (kind == "caterpillar") {
    check(tc_caterpillar_witness(t.get(), &fraw), "caterpillar witness");
  } else {
    tc_solution* s = nullptr;
    check(tc_solve_alpha_bn(t.get(), nullptr, &s), "fixture witness");
    sol.reset(s);
  }
  BcastPtr owned(fraw);
  const tc_broadcast* f = owned ? owned.get() : tc_solution_witness(sol.get());

  char* tree_text = nullptr;
  check(tc_tree_to_text(t.get(), &tree_text), "tree");
  const auto tree_str = take(tree_text);
  const auto bcast_str = broadcast_text(f);

  if (!prefix.empty()) {
    write_output(prefix + ".tree", tree_str);
    write_output(prefix + ".bcast", bcast_str);
    if (as_dot) write_output(prefix + ".dot", dot(t.get(), f));
    std::cerr << "wrote " << prefix << ".tree and " << prefix << ".bcast (weight "
              << tc_broadcast_weight(f) << ")\n";
    return ok;
  }
  if (as_dot) {
    std::cout << dot(t.get(), f);
    return ok;
  }
  std::cout << tree_str << "# broadcast, weight " << tc_broadcast_weight(f) << "\n" << bcast_str;
  return ok;
}

struct EnumArgs {
  std::string range = "2..10";
  std::string campaign = "bound";
  std::string out;
  unsigned workers = 0;
  SolveArgs solver;
};

int run_enumerate(const EnumArgs& a) {
  tc_campaign_options o;
  tc_campaign_options_init(&o);
  check(tc_campaign_parse(a.campaign.c_str(), &o.kind), "campaign");
  const auto dots = a.range.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("range");
    size_t used = 0;
    const auto lo_text = a.range.substr(0, dots);
    const auto hi_text = a.range.substr(dots + 2);
    o.n_min = std::stoul(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("range");
    o.n_max = std::stoul(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("range");
  } catch (const std::logic_error&) {
    std::cerr << "treecast: --range expects a..b, got '" << a.range << "'\n";
    return usage;
  }
  o.workers = a.workers;
  o.solver = solver_options(a.solver);
  if (!a.out.empty()) o.out_dir = a.out.c_str();

  tc_campaign_summary summary{};
  char* flagged = nullptr;
  check(tc_campaign_run(&o, &summary, nullptr, &flagged), "enumerate");
  std::cout << take(flagged);
  std::cerr << a.campaign << ": " << summary.trees << " trees, " << summary.flagged
            << " flagged\n";
  return o.kind == TC_CAMPAIGN_BOUND && summary.flagged ? predicate_failed : ok;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--mode", a.mode, "naive or pruned")
      ->check(CLI::IsMember({"naive", "pruned"}))
      ->capture_default_str();
  cmd->add_option("--value-bound", a.bound, "none, n-1 or theorem")
      ->check(CLI::IsMember({"none", "n-1", "theorem"}))
      ->capture_default_str();
  cmd->add_option("--node-limit", a.node_limit, "stop after this many search nodes (0: none)");
  cmd->add_flag("--override-limit", a.override_limit, "run exhaustive oracles past their limits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary independent broadcasts in trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tc_version()));

  std::string tree_path, bcast_path;
  bool as_dot = false;

  auto* analyze = app.add_subcommand("analyze", "structural profile of a tree (JSON)");
  analyze->add_option("tree", tree_path, "tree file, '-' for stdin")->required();
  analyze->add_flag("--dot", as_dot, "emit a DOT drawing instead");

  auto* chk = app.add_subcommand("check", "test a broadcast against the predicates");
  chk->add_option("tree", tree_path)->required();
  chk->add_option("broadcast", bcast_path)->required();
  chk->add_flag("--dot", as_dot, "emit a DOT drawing instead");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "compute alpha_bn and an optimal broadcast");
  solve->add_option("tree", solve_args.tree)->required();
  add_solver_flags(solve, solve_args);
  solve->add_flag("--all-optima", solve_args.all_optima, "list every optimal broadcast");
  solve->add_flag("--alpha-h", solve_args.alpha_h, "also compute alpha_h");
  solve->add_flag("--csv", solve_args.csv, "machine-readable output");

  std::optional<size_t> enumerate_n;
  bool laws_csv = false;
  auto* laws = app.add_subcommand("laws", "check the structural laws on optimal broadcasts");
  auto* laws_file = laws->add_option("tree", tree_path);
  auto* laws_enum = laws->add_option("--enumerate", enumerate_n, "every tree of this order");
  laws_file->excludes(laws_enum);
  laws->add_flag("--csv", laws_csv);

  std::string kind, construct_arg, prefix;
  auto* construct = app.add_subcommand("construct", "build a tree with its witness broadcast");
  construct->add_option("kind", kind, "spider, caterpillar or fixture")
      ->required()
      ->check(CLI::IsMember({"spider", "caterpillar", "fixture"}));
  construct->add_option("spec", construct_arg, "leg lengths, caterpillar spec or fixture name")
      ->required();
  construct->add_option("--out", prefix, "write PREFIX.tree and PREFIX.bcast");
  construct->add_flag("--dot", as_dot, "emit a DOT drawing");

  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "run a campaign over all trees in a range");
  enumerate->add_option("--range", enum_args.range, "a..b")->capture_default_str();
  enumerate->add_option("--campaign", enum_args.campaign, "bound, q1, equality or alphah")
      ->capture_default_str();
  enumerate->add_option("--out", enum_args.out, "directory for CSV files and counterexamples");
  enumerate->add_option("--workers", enum_args.workers, "worker threads (0: all cores)");
  add_solver_flags(enumerate, enum_args.solver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*analyze) return run_analyze(tree_path, as_dot);
    if (*chk) return run_check(tree_path, bcast_path, as_dot);
    if (*solve) return run_solve(solve_args);
    if (*laws) {
      if (!enumerate_n && tree_path.empty()) {
        std::cerr << "treecast: laws needs a tree file or --enumerate n\n";
        return usage;
      }
      return run_laws(tree_path, enumerate_n, laws_csv);
    }
    if (*construct) return run_construct(kind, construct_arg, prefix, as_dot);
    if (*enumerate) return run_enumerate(enum_args);
  } catch (const Failure& f) {
    return f.code;
  }
  return usage;
}
