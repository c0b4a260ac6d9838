#include "treecast/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "treecast/error.hpp"

namespace treecast {

namespace {

using Levels = std::vector<std::uint32_t>;

/// Canonical level sequence of t rooted at `root`: children ordered so that
/// their subsequences appear in non-increasing lexicographic order.
Levels rooted_levels(const Tree& t, Vertex root, Vertex parent, std::uint32_t depth) {
  std::vector<Levels> children;
  for (Vertex c : t.neighbours(root))
    if (c != parent) children.push_back(rooted_levels(t, c, root, depth + 1));
  std::sort(children.begin(), children.end(), std::greater<>());
  Levels out{depth};
  for (auto& c : children) out.insert(out.end(), c.begin(), c.end());
  return out;
}

Levels rooted_levels(const Tree& t, Vertex root) { return rooted_levels(t, root, root, 0); }

std::vector<Vertex> centroids(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<std::size_t> size(n, 1);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex c : t.neighbours(order[i])) {
      if (seen[c]) continue;
      seen[c] = true;
      parent[c] = order[i];
      order.push_back(c);
    }
  }
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t largest = n - size[v];
    for (Vertex c : t.neighbours(v))
      if (v == 0 || c != parent[v]) largest = std::max(largest, size[c]);
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

std::string render(const Levels& levels) {
  const bool compact = std::all_of(levels.begin(), levels.end(), [](auto d) { return d < 36; });
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto d = levels[i];
    if (compact) {
      out.push_back(static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)));
    } else {
      if (i > 0) out.push_back('.');
      out += std::to_string(d);
    }
  }
  return out;
}

}  // namespace

std::string canonical_code(const Tree& t) {
  Levels best;
  for (Vertex c : centroids(t)) best = std::max(best, rooted_levels(t, c));
  return render(best);
}

Tree tree_from_level_sequence(std::span<const std::uint32_t> levels) {
  if (levels.empty() || levels[0] != 0)
    throw Error(Errc::invalid_argument, "level sequence must start with the root at depth 0");
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_depth{0};
  for (Vertex i = 1; i < levels.size(); ++i) {
    const auto d = levels[i];
    if (d == 0 || d > last_at_depth.size())
      throw Error(Errc::invalid_argument, "level sequence jumps more than one level");
    last_at_depth.resize(d);
    edges.push_back({last_at_depth[d - 1], i});
    last_at_depth.push_back(i);
  }
  return Tree::from_edges(levels.size(), edges);
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n), levels_(n) {
  if (n < 1 || n > max_order)
    throw Error(Errc::invalid_argument, "free tree generation needs 1 <= n <= " +
                                            std::to_string(max_order));
  for (std::size_t i = 0; i < n; ++i) levels_[i] = static_cast<std::uint32_t>(i);
}

// Successor rule for canonical rooted level sequences: find the last entry
// deeper than 1, and its most recent possible parent level q; then repeat the
// block levels_[q..p) periodically to the end.
bool FreeTreeGenerator::advance() {
  std::size_t p = n_;
  for (std::size_t i = n_; i-- > 0;) {
    if (levels_[i] > 1) {
      p = i;
      break;
    }
  }
  if (p == n_) return false;
  std::size_t q = p;
  while (levels_[--q] != levels_[p] - 1) {
  }
  for (std::size_t i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
  return true;
}

bool FreeTreeGenerator::accept() const {
  // Subtrees hanging off the root start at each depth-1 entry.
  std::optional<Vertex> half;
  for (std::size_t i = 1; i < n_;) {
    std::size_t j = i + 1;
    while (j < n_ && levels_[j] > 1) ++j;
    const std::size_t size = j - i;
    if (2 * size > n_) return false;
    if (2 * size == n_) half = static_cast<Vertex>(i);
    i = j;
  }
  if (!half) return true;
  // Two centroids: keep the rooting whose canonical sequence is larger.
  const auto t = tree_from_level_sequence(levels_);
  return levels_ >= rooted_levels(t, *half);
}

std::optional<Tree> FreeTreeGenerator::next() {
  while (!exhausted_) {
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      exhausted_ = true;
      break;
    }
    if (accept()) return tree_from_level_sequence(levels_);
  }
  return std::nullopt;
}

std::vector<Tree> free_trees(std::size_t n) {
  std::vector<Tree> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::string_view to_string(Campaign c) noexcept {
  switch (c) {
    case Campaign::bound: return "bound";
    case Campaign::q1: return "q1";
    case Campaign::equality: return "equality";
    case Campaign::alphah: return "alphah";
  }
  return "bound";
}

std::optional<Campaign> parse_campaign(std::string_view s) {
  for (auto c : {Campaign::bound, Campaign::q1, Campaign::equality, Campaign::alphah})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

CensusRow census_row(const Tree& t, const SolverConfig& cfg, bool with_alpha_h) {
  const auto p = profile(t);
  const auto solved = alpha_bn(t, cfg);
  const auto n = static_cast<std::int64_t>(t.order());
  const auto b = static_cast<std::int64_t>(p.b);
  CensusRow row{canonical_code(t),
                t.order(),
                p.b,
                p.rho,
                independence_number(t),
                solved.value,
                std::nullopt,
                n - b + static_cast<std::int64_t>(p.rho),
                0,
                n - b + static_cast<std::int64_t>(forest_independence_number(r_subgraph(t, p))),
                classify(t),
                t,
                solved.witness};
  row.slack = row.bound - static_cast<std::int64_t>(row.alpha_bn);
  if (with_alpha_h) row.alpha_h = alpha_h(t, true).value;
  return row;
}

namespace {

bool is_flagged(Campaign kind, const CensusRow& row) {
  const auto value = static_cast<std::int64_t>(row.alpha_bn);
  switch (kind) {
    case Campaign::bound: return row.slack < 0;
    case Campaign::q1: return value > row.q1_bound;
    case Campaign::equality: return row.slack == 0;
    case Campaign::alphah: return row.alpha_h && *row.alpha_h == row.alpha_bn;
  }
  return false;
}

bool writes_artifacts(Campaign kind) { return kind == Campaign::bound || kind == Campaign::q1; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
}

}  // namespace

CampaignResult run_campaign(const CampaignOptions& opts) {
  if (opts.solver.use_value_bound == ValueBound::theorem)
    throw Error(Errc::precondition,
                "campaigns must not prune with the n - b + rho bound they tabulate");
  if (opts.n_min < 2 || opts.n_min > opts.n_max || opts.n_max > FreeTreeGenerator::max_order)
    throw Error(Errc::invalid_argument, "campaign range must satisfy 2 <= n_min <= n_max <= " +
                                            std::to_string(FreeTreeGenerator::max_order));
  if (opts.kind == Campaign::alphah && opts.n_max > OracleLimits::alpha_h &&
      !opts.solver.override_limits)
    throw Error(Errc::limit, "the alphah campaign is limited to n <= " +
                                 std::to_string(OracleLimits::alpha_h));
  if (opts.out_dir) std::filesystem::create_directories(*opts.out_dir);

  const unsigned workers =
      opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  CampaignResult result;
  result.kind = opts.kind;

  for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
    const auto trees = free_trees(n);
    const bool with_h =
        n <= OracleLimits::alpha_h || (opts.kind == Campaign::alphah && opts.solver.override_limits);
    std::vector<std::optional<CensusRow>> rows(trees.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::string failed_id;

    auto work = [&] {
      for (std::size_t i = next++; i < trees.size(); i = next++) {
        try {
          rows[i] = census_row(trees[i], opts.solver, with_h);
          if (opts.out_dir && writes_artifacts(opts.kind) && is_flagged(opts.kind, *rows[i])) {
            write_file(*opts.out_dir / (rows[i]->id + ".tree"), to_edge_list(rows[i]->tree));
            write_file(*opts.out_dir / (rows[i]->id + ".bcast"), to_text(rows[i]->witness));
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
            failed_id = canonical_code(trees[i]);
          }
          next = trees.size();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::min<std::size_t>(workers, trees.size()); ++w)
      pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) {
      try {
        std::rethrow_exception(error);
      } catch (const Error& e) {
        throw Error(e.code(), "tree " + failed_id + ": " + e.what());
      }
    }
    std::vector<CensusRow> batch;
    batch.reserve(rows.size());
    for (auto& r : rows) batch.push_back(std::move(*r));
    std::sort(batch.begin(), batch.end(),
              [](const CensusRow& a, const CensusRow& b) { return a.id < b.id; });
    for (auto& r : batch) result.rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < result.rows.size(); ++i)
    if (is_flagged(opts.kind, result.rows[i])) result.flagged.push_back(i);

  if (opts.out_dir) {
    write_file(*opts.out_dir / "census.csv", census_csv(result));
    const auto list_name = writes_artifacts(opts.kind) ? std::string("counterexamples.csv")
                                                       : std::string(to_string(opts.kind)) + ".csv";
    write_file(*opts.out_dir / list_name, flagged_csv(result));
  }
  return result;
}

namespace {

CampaignResult campaign(Campaign kind, std::size_t n_min, std::size_t n_max,
                        const SolverConfig& cfg, unsigned workers) {
  CampaignOptions opts;
  opts.kind = kind;
  opts.n_min = n_min;
  opts.n_max = n_max;
  opts.solver = cfg;
  opts.workers = workers;
  return run_campaign(opts);
}

}  // namespace

CampaignResult verify_bound(std::size_t n_min, std::size_t n_max, const SolverConfig& cfg,
                            unsigned workers) {
  return campaign(Campaign::bound, n_min, n_max, cfg, workers);
}

CampaignResult search_question1(std::size_t n_max, unsigned workers) {
  return campaign(Campaign::q1, 2, n_max, {}, workers);
}

CampaignResult collect_equality_trees(std::size_t n_max, unsigned workers) {
  return campaign(Campaign::equality, 2, n_max, {}, workers);
}

CampaignResult compare_alpha_h(std::size_t n_max, unsigned workers) {
  return campaign(Campaign::alphah, 2, n_max, {}, workers);
}

std::string census_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << census_header << '\n';
  for (const auto& r : result.rows) {
    out << r.id << ',' << r.n << ',' << r.b << ',' << r.rho << ',' << r.alpha << ','
        << r.alpha_bn << ',';
    if (r.alpha_h)
      out << *r.alpha_h;
    else
      out << "NA";
    out << ',' << r.bound << ',' << r.slack << ',' << r.q1_bound << ',' << to_string(r.cls)
        << '\n';
  }
  return out.str();
}

std::string flagged_csv(const CampaignResult& result) {
  std::ostringstream out;
  switch (result.kind) {
    case Campaign::bound:
      out << "id,n,alpha_bn,bound\n";
      for (auto i : result.flagged) {
        const auto& r = result.rows[i];
        out << r.id << ',' << r.n << ',' << r.alpha_bn << ',' << r.bound << '\n';
      }
      break;
    case Campaign::q1:
      out << "id,n,alpha_bn,q1_bound\n";
      for (auto i : result.flagged) {
        const auto& r = result.rows[i];
        out << r.id << ',' << r.n << ',' << r.alpha_bn << ',' << r.q1_bound << '\n';
      }
      break;
    case Campaign::equality:
      out << "id,n,class\n";
      for (auto i : result.flagged) {
        const auto& r = result.rows[i];
        out << r.id << ',' << r.n << ',' << to_string(r.cls) << '\n';
      }
      break;
    case Campaign::alphah:
      out << "id,n,alpha_bn,alpha_h,equal\n";
      for (const auto& r : result.rows) {
        if (!r.alpha_h) continue;
        out << r.id << ',' << r.n << ',' << r.alpha_bn << ',' << *r.alpha_h << ','
            << (*r.alpha_h == r.alpha_bn ? 1 : 0) << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace treecast
