#include "treecast/treecast.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "treecast/broadcast.hpp"
#include "treecast/constructions.hpp"
#include "treecast/enumeration.hpp"
#include "treecast/laws.hpp"
#include "treecast/report.hpp"
#include "treecast/solvers.hpp"
#include "treecast/tree.hpp"

struct tc_tree {
  treecast::Tree tree;
};

struct tc_broadcast {
  treecast::Broadcast f;
};

struct tc_solution {
  std::uint64_t value = 0;
  tc_broadcast witness;
  std::vector<tc_broadcast> optima;
  std::uint64_t nodes = 0;
  std::uint64_t nanoseconds = 0;
  bool partial = false;
};

struct tc_tree_list {
  std::vector<tc_tree> trees;
};

namespace {

thread_local std::string last_error;

tc_status status_of(treecast::Errc c) {
  using treecast::Errc;
  switch (c) {
    case Errc::parse: return TC_ERR_PARSE;
    case Errc::invalid_argument: return TC_ERR_INVALID_ARGUMENT;
    case Errc::precondition: return TC_ERR_PRECONDITION;
    case Errc::limit: return TC_ERR_LIMIT;
    case Errc::not_found: return TC_ERR_NOT_FOUND;
    case Errc::io: return TC_ERR_IO;
  }
  return TC_ERR_INTERNAL;
}

template <class F>
tc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return TC_OK;
  } catch (const treecast::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return TC_ERR_INTERNAL;
}

tc_status null_argument() {
  last_error = "null argument";
  return TC_ERR_INVALID_ARGUMENT;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

treecast::SolverConfig to_config(const tc_solver_options* o) {
  treecast::SolverConfig cfg;
  if (!o) return cfg;
  cfg.mode = o->mode == TC_MODE_NAIVE ? treecast::SolverMode::naive : treecast::SolverMode::pruned;
  switch (o->value_bound) {
    case TC_BOUND_NONE: cfg.use_value_bound = treecast::ValueBound::none; break;
    case TC_BOUND_THEOREM: cfg.use_value_bound = treecast::ValueBound::theorem; break;
    default: cfg.use_value_bound = treecast::ValueBound::n_minus_1; break;
  }
  if (o->node_limit) cfg.node_limit = o->node_limit;
  cfg.override_limits = o->override_limits != 0;
  cfg.enumerate_all = o->all_optima != 0;
  return cfg;
}

tc_solution* to_solution(const treecast::SolveResult& r, bool partial) {
  auto* s = new tc_solution{r.value, tc_broadcast{r.witness}, {}, r.nodes_explored,
                            static_cast<std::uint64_t>(r.wall_time.count()), partial};
  if (r.all_optima)
    for (const auto& f : *r.all_optima) s->optima.push_back(tc_broadcast{f});
  return s;
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_status_name(tc_status s) {
  switch (s) {
    case TC_OK: return "ok";
    case TC_ERR_PARSE: return "parse error";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_PRECONDITION: return "precondition failed";
    case TC_ERR_LIMIT: return "limit exceeded";
    case TC_ERR_NOT_FOUND: return "not found";
    case TC_ERR_IO: return "i/o error";
    case TC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tc_last_error(void) { return last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

tc_status tc_tree_parse(const char* text, tc_tree** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new tc_tree{treecast::parse_tree(text)}; });
}

tc_status tc_tree_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                             tc_tree** out) {
  if (!out || (edge_count && !endpoints)) return null_argument();
  return guarded([&] {
    std::vector<treecast::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    *out = new tc_tree{treecast::Tree::from_edges(n, edges)};
  });
}

void tc_tree_free(tc_tree* t) { delete t; }

size_t tc_tree_order(const tc_tree* t) { return t ? t->tree.order() : 0; }

tc_status tc_tree_to_text(const tc_tree* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = dup(treecast::to_edge_list(t->tree)); });
}

tc_status tc_tree_to_graph6(const tc_tree* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = dup(treecast::to_graph6(t->tree)); });
}

tc_status tc_tree_canonical_code(const tc_tree* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = dup(treecast::canonical_code(t->tree)); });
}

tc_status tc_tree_profile_json(const tc_tree* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = dup(treecast::profile_json(t->tree)); });
}

tc_status tc_tree_dot(const tc_tree* t, const tc_broadcast* f, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    std::optional<treecast::Broadcast> b;
    if (f) {
      treecast::require_bound(t->tree, f->f);
      b = f->f;
    }
    *out = dup(treecast::to_dot(t->tree, b));
  });
}

tc_status tc_free_trees(size_t n, tc_tree_list** out) {
  if (!out) return null_argument();
  return guarded([&] {
    auto* list = new tc_tree_list;
    for (auto& t : treecast::free_trees(n)) list->trees.push_back(tc_tree{std::move(t)});
    *out = list;
  });
}

size_t tc_tree_list_size(const tc_tree_list* list) { return list ? list->trees.size() : 0; }

const tc_tree* tc_tree_list_get(const tc_tree_list* list, size_t i) {
  if (!list || i >= list->trees.size()) return nullptr;
  return &list->trees[i];
}

void tc_tree_list_free(tc_tree_list* list) { delete list; }

tc_status tc_broadcast_parse(const tc_tree* t, const char* text, tc_broadcast** out) {
  if (!t || !text || !out) return null_argument();
  return guarded([&] { *out = new tc_broadcast{treecast::parse_broadcast(t->tree, text)}; });
}

tc_status tc_broadcast_from_values(const tc_tree* t, const uint32_t* values, size_t n,
                                   tc_broadcast** out) {
  if (!t || !out || (n && !values)) return null_argument();
  return guarded([&] {
    *out = new tc_broadcast{treecast::Broadcast(t->tree, std::vector<uint32_t>(values, values + n))};
  });
}

void tc_broadcast_free(tc_broadcast* f) { delete f; }

size_t tc_broadcast_order(const tc_broadcast* f) { return f ? f->f.order() : 0; }

const uint32_t* tc_broadcast_values(const tc_broadcast* f) {
  return f ? f->f.values().data() : nullptr;
}

uint64_t tc_broadcast_weight(const tc_broadcast* f) { return f ? treecast::weight(f->f) : 0; }

tc_status tc_broadcast_to_text(const tc_broadcast* f, char** out) {
  if (!f || !out) return null_argument();
  return guarded([&] { *out = dup(treecast::to_text(f->f)); });
}

tc_status tc_broadcast_check(const tc_tree* t, const tc_broadcast* f, tc_check_report* out,
                             char** text) {
  if (!t || !f || !out) return null_argument();
  return guarded([&] {
    treecast::require_bound(t->tree, f->f);
    const auto c = treecast::check_broadcast(t->tree, f->f);
    *out = {c.weight, c.dominating, c.bn_independent, c.h_independent, c.maximal,
            c.uncovered_edges, c.max_edge_coverers};
    if (text) *text = dup(treecast::check_text(t->tree, f->f, c));
  });
}

void tc_solver_options_init(tc_solver_options* opts) {
  if (opts) *opts = {TC_MODE_PRUNED, TC_BOUND_N_MINUS_1, 0, 0, 0};
}

tc_status tc_solve_alpha_bn(const tc_tree* t, const tc_solver_options* opts, tc_solution** out) {
  if (!t || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    try {
      *out = to_solution(treecast::alpha_bn(t->tree, to_config(opts)), false);
    } catch (const treecast::NodeLimitExceeded& e) {
      *out = to_solution(e.incumbent(), true);
      throw;
    }
  });
}

tc_status tc_solve_alpha_h(const tc_tree* t, int override_limit, tc_solution** out) {
  if (!t || !out) return null_argument();
  return guarded(
      [&] { *out = to_solution(treecast::alpha_h(t->tree, override_limit != 0), false); });
}

size_t tc_independence_number(const tc_tree* t) {
  return t ? treecast::independence_number(t->tree) : 0;
}

void tc_solution_free(tc_solution* s) { delete s; }
uint64_t tc_solution_value(const tc_solution* s) { return s ? s->value : 0; }
int tc_solution_is_partial(const tc_solution* s) { return s && s->partial; }
uint64_t tc_solution_nodes(const tc_solution* s) { return s ? s->nodes : 0; }
uint64_t tc_solution_nanoseconds(const tc_solution* s) { return s ? s->nanoseconds : 0; }
const tc_broadcast* tc_solution_witness(const tc_solution* s) { return s ? &s->witness : nullptr; }
size_t tc_solution_optima_count(const tc_solution* s) { return s ? s->optima.size() : 0; }

const tc_broadcast* tc_solution_optimum(const tc_solution* s, size_t i) {
  if (!s || i >= s->optima.size()) return nullptr;
  return &s->optima[i];
}

tc_status tc_laws_report(const tc_tree* const* trees, size_t count, int csv, char** out,
                         size_t* violated) {
  if (!out || (count && !trees)) return null_argument();
  return guarded([&] {
    std::vector<treecast::LawReport> reports;
    for (size_t i = 0; i < count; ++i) {
      if (!trees[i]) throw treecast::Error(treecast::Errc::invalid_argument, "null tree");
      auto r = treecast::check_all_laws(trees[i]->tree);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    size_t bad = 0;
    for (const auto& r : reports) bad += r.verdict == treecast::Verdict::violated;
    if (violated) *violated = bad;
    *out = dup(treecast::law_table(reports, csv != 0));
  });
}

tc_status tc_construct_spider(const char* legs, tc_tree** out) {
  if (!legs || !out) return null_argument();
  return guarded([&] {
    const auto lengths = treecast::parse_leg_lengths(legs);
    *out = new tc_tree{treecast::make_spider(lengths)};
  });
}

tc_status tc_construct_caterpillar(const char* spec, tc_tree** out) {
  if (!spec || !out) return null_argument();
  return guarded([&] {
    *out = new tc_tree{treecast::make_caterpillar(treecast::parse_caterpillar_spec(spec))};
  });
}

tc_status tc_spider_witness(const tc_tree* t, tc_broadcast** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = new tc_broadcast{treecast::spider_witness(t->tree)}; });
}

tc_status tc_caterpillar_witness(const tc_tree* t, tc_broadcast** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = new tc_broadcast{treecast::caterpillar_witness(t->tree)}; });
}

tc_status tc_fixture_names(char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    std::string s;
    for (const auto& n : treecast::fixture_names()) s += n + "\n";
    *out = dup(s);
  });
}

tc_status tc_fixture(const char* name, tc_tree** out, int64_t* expected) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    auto fx = treecast::fixture(name);
    if (expected)
      *expected = fx.expected_alpha_bn ? static_cast<int64_t>(*fx.expected_alpha_bn) : -1;
    *out = new tc_tree{std::move(fx.tree)};
  });
}

tc_status tc_campaign_parse(const char* name, tc_campaign* out) {
  if (!name || !out) return null_argument();
  return guarded([&] {
    auto c = treecast::parse_campaign(name);
    if (!c)
      throw treecast::Error(treecast::Errc::invalid_argument,
                            std::string("unknown campaign '") + name + "'");
    *out = static_cast<tc_campaign>(*c);
  });
}

void tc_campaign_options_init(tc_campaign_options* opts) {
  if (!opts) return;
  *opts = {};
  opts->kind = TC_CAMPAIGN_BOUND;
  opts->n_min = 2;
  opts->n_max = 10;
  tc_solver_options_init(&opts->solver);
}

tc_status tc_campaign_run(const tc_campaign_options* opts, tc_campaign_summary* summary,
                          char** census, char** flagged) {
  if (!opts) return null_argument();
  return guarded([&] {
    treecast::CampaignOptions o;
    o.kind = static_cast<treecast::Campaign>(opts->kind);
    o.n_min = opts->n_min;
    o.n_max = opts->n_max;
    o.solver = to_config(&opts->solver);
    o.workers = opts->workers;
    if (opts->out_dir) o.out_dir = opts->out_dir;
    const auto r = treecast::run_campaign(o);
    if (summary) *summary = {r.rows.size(), r.flagged.size()};
    if (census) *census = dup(treecast::census_csv(r));
    if (flagged) *flagged = dup(treecast::flagged_csv(r));
  });
}

}  // extern "C"
