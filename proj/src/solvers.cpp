#include "treecast/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "treecast/structure.hpp"

namespace treecast {

namespace {

using Clock = std::chrono::steady_clock;

void require_nontrivial(const Tree& t) {
  if (t.order() < 2)
    throw Error(Errc::precondition, "broadcasts are defined on nontrivial trees (n >= 2)");
}

void require_order(const Tree& t, std::size_t limit, bool override_limit, const char* what) {
  if (!override_limit && t.order() > limit)
    throw Error(Errc::limit, std::string(what) + " is limited to n <= " + std::to_string(limit) +
                                 " (got n = " + std::to_string(t.order()) +
                                 "); pass an override to force it");
}

enum class Goal {
  maximize,      // keep the first strictly better leaf
  first_target,  // stop at the first leaf of the target weight
  all_target,    // collect every leaf of the target weight
};

/// Depth-first assignment of broadcast strengths with incremental rejection of
/// any overlap that is not on both boundaries.
///
/// For each vertex x the search keeps how many broadcasters hear x and how
/// many of those reach x strictly inside their range. Adding a broadcaster v
/// at strength k conflicts iff some x in its ball is already heard and either
/// side reaches x strictly inside.
class BnSearch {
 public:
  BnSearch(const Tree& t, std::vector<Vertex> order, std::vector<std::uint32_t> max_value)
      : t_(t),
        n_(t.order()),
        order_(std::move(order)),
        max_value_(std::move(max_value)),
        heard_(n_, 0),
        strict_(n_, 0),
        f_(n_, 0),
        suffix_(order_.size() + 1, 0) {
    for (std::size_t i = order_.size(); i-- > 0;)
      suffix_[i] = suffix_[i + 1] + max_value_[order_[i]];
  }

  void set_cap(std::optional<std::uint64_t> cap) { cap_ = cap; }
  void use_edge_bound(bool on) { edge_bound_ = on; }
  void use_pruning(bool on) { prune_ = on; }
  void set_node_limit(std::optional<std::uint64_t> limit) { node_limit_ = limit; }

  void run(Goal goal, std::int64_t target = -1) {
    goal_ = goal;
    target_ = target;
    best_ = goal == Goal::maximize ? -1 : target;
    done_ = false;
    dfs(0);
  }

  std::int64_t best() const { return best_; }
  const std::vector<std::uint32_t>& best_values() const { return best_values_; }
  std::vector<std::vector<std::uint32_t>>& found() { return found_; }
  std::uint64_t nodes() const { return nodes_; }
  bool limit_hit() const { return limit_hit_; }
  void add_nodes(std::uint64_t k) { nodes_ += k; }

 private:
  bool place(Vertex v, std::uint32_t k) {
    const auto ball = t_.by_distance(v).first(t_.ball_size(v, k));
    for (Vertex x : ball) {
      const bool inside = t_.distance(x, v) < k;
      if (heard_[x] > 0 && (strict_[x] > 0 || inside)) return false;
    }
    for (Vertex x : ball) {
      ++heard_[x];
      if (t_.distance(x, v) < k) ++strict_[x];
    }
    covered_ += ball.size() - 1;
    weight_ += k;
    f_[v] = k;
    return true;
  }

  void remove(Vertex v, std::uint32_t k) {
    const auto ball = t_.by_distance(v).first(t_.ball_size(v, k));
    for (Vertex x : ball) {
      --heard_[x];
      if (t_.distance(x, v) < k) --strict_[x];
    }
    covered_ -= ball.size() - 1;
    weight_ -= k;
    f_[v] = 0;
  }

  std::uint64_t upper(std::size_t next_pos) const {
    std::uint64_t up = weight_ + suffix_[next_pos];
    // Broadcast balls share no edges, and a ball of radius k spans at least k
    // edges, so the rest of the weight fits into the edges not yet spanned.
    if (edge_bound_) up = std::min(up, weight_ + (n_ - 1 - covered_));
    if (cap_) up = std::min(up, *cap_);
    return up;
  }

  bool worth_descending(std::size_t next_pos) const {
    if (!prune_) return true;
    const auto up = static_cast<std::int64_t>(upper(next_pos));
    return goal_ == Goal::maximize ? up > best_ : up >= target_;
  }

  void leaf() {
    const auto w = static_cast<std::int64_t>(weight_);
    switch (goal_) {
      case Goal::maximize:
        if (w > best_) {
          best_ = w;
          best_values_ = f_;
          if (cap_ && static_cast<std::uint64_t>(best_) >= *cap_) done_ = true;
        }
        break;
      case Goal::first_target:
        if (w == target_) {
          best_values_ = f_;
          done_ = true;
        }
        break;
      case Goal::all_target:
        if (w == target_) found_.push_back(f_);
        break;
    }
  }

  void dfs(std::size_t pos) {
    if (done_) return;
    ++nodes_;
    if (node_limit_ && nodes_ > *node_limit_) {
      limit_hit_ = true;
      done_ = true;
      return;
    }
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const Vertex v = order_[pos];
    for (std::uint32_t k = max_value_[v] + 1; k-- > 0 && !done_;) {
      if (k == 0) {
        if (worth_descending(pos + 1)) dfs(pos + 1);
      } else if (place(v, k)) {
        if (worth_descending(pos + 1)) dfs(pos + 1);
        remove(v, k);
      }
    }
  }

  const Tree& t_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> max_value_;
  std::vector<std::uint16_t> heard_, strict_;
  std::vector<std::uint32_t> f_;
  std::vector<std::uint64_t> suffix_;
  std::uint64_t weight_ = 0, covered_ = 0;

  std::optional<std::uint64_t> cap_;
  bool edge_bound_ = false;
  bool prune_ = true;
  std::optional<std::uint64_t> node_limit_;

  Goal goal_ = Goal::maximize;
  std::int64_t target_ = -1;
  std::int64_t best_ = -1;
  std::vector<std::uint32_t> best_values_;
  std::vector<std::vector<std::uint32_t>> found_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool limit_hit_ = false;
};

std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

std::vector<std::uint32_t> eccentricities(const Tree& t) {
  std::vector<std::uint32_t> out(t.order());
  for (Vertex v = 0; v < t.order(); ++v) out[v] = t.eccentricity(v);
  return out;
}

/// Non-leaves capped at 1, leaves at their eccentricity.
std::vector<std::uint32_t> restricted_values(const Tree& t) {
  auto out = eccentricities(t);
  for (Vertex v = 0; v < t.order(); ++v)
    if (!t.is_leaf(v)) out[v] = std::min<std::uint32_t>(out[v], 1);
  return out;
}

/// Non-leaves first by index, then leaves by decreasing eccentricity.
std::vector<Vertex> skeleton_first_order(const Tree& t) {
  std::vector<Vertex> inner, leaves;
  for (Vertex v = 0; v < t.order(); ++v) (t.is_leaf(v) ? leaves : inner).push_back(v);
  std::stable_sort(leaves.begin(), leaves.end(), [&](Vertex a, Vertex b) {
    return t.eccentricity(a) > t.eccentricity(b);
  });
  inner.insert(inner.end(), leaves.begin(), leaves.end());
  return inner;
}

std::optional<std::uint64_t> value_cap(const Tree& t, ValueBound bound) {
  switch (bound) {
    case ValueBound::none: return std::nullopt;
    case ValueBound::n_minus_1: return t.order() - 1;
    case ValueBound::theorem: {
      auto p = profile(t);
      return t.order() - p.b + p.rho;
    }
  }
  return std::nullopt;
}

}  // namespace

SolveResult alpha_bn_naive(const Tree& t, bool override_limit) {
  require_nontrivial(t);
  require_order(t, OracleLimits::naive, override_limit, "the naive oracle");
  const auto start = Clock::now();
  BnSearch search(t, identity_order(t.order()), eccentricities(t));
  search.use_pruning(false);
  search.run(Goal::maximize);
  SolveResult r{static_cast<std::uint64_t>(search.best()), Broadcast(t, search.best_values()),
                std::nullopt, search.nodes(), Clock::now() - start};
  return r;
}

SolveResult alpha_bn(const Tree& t, const SolverConfig& cfg) {
  if (cfg.mode == SolverMode::naive) {
    auto r = alpha_bn_naive(t, cfg.override_limits);
    if (cfg.enumerate_all) r.all_optima = enumerate_optimal_broadcasts(t, cfg.override_limits);
    return r;
  }
  require_nontrivial(t);
  const auto start = Clock::now();
  const auto cap = value_cap(t, cfg.use_value_bound);
  const auto values = restricted_values(t);

  BnSearch valuer(t, skeleton_first_order(t), values);
  valuer.set_cap(cap);
  valuer.use_edge_bound(cfg.use_value_bound != ValueBound::none);
  valuer.set_node_limit(cfg.node_limit);
  valuer.run(Goal::maximize);
  auto incumbent = [&](const BnSearch& s) {
    SolveResult partial{0, Broadcast(t), std::nullopt, s.nodes(), Clock::now() - start};
    if (s.best() >= 0) {
      partial.value = static_cast<std::uint64_t>(s.best());
      partial.witness = Broadcast(t, s.best_values());
    }
    return partial;
  };
  if (valuer.limit_hit())
    throw NodeLimitExceeded("node limit exceeded while bounding alpha_bn", incumbent(valuer));

  // Second pass in vertex order pins the lexicographically greatest optimum
  // of the restricted space.
  BnSearch witness(t, identity_order(t.order()), values);
  witness.use_edge_bound(cfg.use_value_bound != ValueBound::none);
  if (cfg.node_limit)
    witness.set_node_limit(*cfg.node_limit > valuer.nodes() ? *cfg.node_limit - valuer.nodes()
                                                            : 0);
  witness.run(Goal::first_target, valuer.best());
  if (witness.limit_hit()) {
    auto partial = incumbent(valuer);
    partial.nodes_explored += witness.nodes();
    throw NodeLimitExceeded("node limit exceeded while extracting the witness", partial);
  }

  SolveResult r{static_cast<std::uint64_t>(valuer.best()), Broadcast(t, witness.best_values()),
                std::nullopt, valuer.nodes() + witness.nodes(), {}};
  if (cfg.enumerate_all) r.all_optima = enumerate_optimal_broadcasts(t, cfg.override_limits);
  r.wall_time = Clock::now() - start;
  return r;
}

std::vector<Broadcast> enumerate_optimal_broadcasts(const Tree& t, bool override_limit) {
  require_nontrivial(t);
  require_order(t, OracleLimits::optima, override_limit, "optima enumeration");
  const auto values = eccentricities(t);
  BnSearch valuer(t, identity_order(t.order()), values);
  valuer.use_edge_bound(true);
  valuer.set_cap(t.order() - 1);
  valuer.run(Goal::maximize);

  BnSearch all(t, identity_order(t.order()), values);
  all.use_edge_bound(true);
  all.run(Goal::all_target, valuer.best());
  std::vector<Broadcast> out;
  out.reserve(all.found().size());
  for (auto& f : all.found()) out.emplace_back(t, std::move(f));
  return out;
}

namespace {

/// Depth-first search for the heaviest broadcast whose broadcasters hear only
/// themselves.
class HSearch {
 public:
  explicit HSearch(const Tree& t) : t_(t), f_(t.order(), 0), suffix_(t.order() + 1, 0) {
    for (std::size_t i = t.order(); i-- > 0;)
      suffix_[i] = suffix_[i + 1] + t.eccentricity(static_cast<Vertex>(i));
  }

  void run() { dfs(0); }
  std::int64_t best() const { return best_; }
  const std::vector<std::uint32_t>& best_values() const { return best_values_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool compatible(Vertex v, std::uint32_t k) const {
    for (Vertex u : placed_) {
      const auto d = t_.distance(u, v);
      if (d <= k || d <= f_[u]) return false;
    }
    return true;
  }

  void dfs(Vertex v) {
    ++nodes_;
    if (v == t_.order()) {
      if (static_cast<std::int64_t>(weight_) > best_) {
        best_ = static_cast<std::int64_t>(weight_);
        best_values_ = f_;
      }
      return;
    }
    for (std::uint32_t k = t_.eccentricity(v) + 1; k-- > 0;) {
      if (static_cast<std::int64_t>(weight_ + k + suffix_[v + 1]) <= best_) continue;
      if (k == 0) {
        dfs(v + 1);
      } else if (compatible(v, k)) {
        f_[v] = k;
        weight_ += k;
        placed_.push_back(v);
        dfs(v + 1);
        placed_.pop_back();
        weight_ -= k;
        f_[v] = 0;
      }
    }
  }

  const Tree& t_;
  std::vector<std::uint32_t> f_;
  std::vector<std::uint64_t> suffix_;
  std::vector<Vertex> placed_;
  std::uint64_t weight_ = 0;
  std::int64_t best_ = -1;
  std::vector<std::uint32_t> best_values_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult alpha_h(const Tree& t, bool override_limit) {
  require_nontrivial(t);
  require_order(t, OracleLimits::alpha_h, override_limit, "the alpha_h search");
  const auto start = Clock::now();
  HSearch search(t);
  search.run();
  return {static_cast<std::uint64_t>(search.best()), Broadcast(t, search.best_values()),
          std::nullopt, search.nodes(), Clock::now() - start};
}

std::size_t independence_number(const Tree& t) {
  std::vector<Vertex> all(t.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return forest_independence_number(Forest::induced(t, std::move(all)));
}

}  // namespace treecast
