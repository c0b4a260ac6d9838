#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "treecast/broadcast.hpp"
#include "treecast/error.hpp"
#include "treecast/tree.hpp"

namespace treecast {

enum class SolverMode { naive, pruned };

/// Upper bound used to cut the search once the incumbent reaches it.
/// `theorem` uses n - b + rho and must never be used to verify that bound.
enum class ValueBound { none, n_minus_1, theorem };

struct SolverConfig {
  SolverMode mode = SolverMode::pruned;
  bool enumerate_all = false;
  ValueBound use_value_bound = ValueBound::n_minus_1;
  std::optional<std::uint64_t> node_limit;
  /// Lifts the order limits of the exhaustive oracles.
  bool override_limits = false;
};

/// Largest orders the exhaustive routines accept without an override.
struct OracleLimits {
  static constexpr std::size_t naive = 8;
  static constexpr std::size_t optima = 8;
  static constexpr std::size_t alpha_h = 9;
};

struct SolveResult {
  std::uint64_t value = 0;
  Broadcast witness;
  std::optional<std::vector<Broadcast>> all_optima;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{};
};

/// Thrown when SolverConfig::node_limit is hit; carries the best broadcast
/// found so far.
class NodeLimitExceeded : public Error {
 public:
  NodeLimitExceeded(const std::string& what, SolveResult incumbent)
      : Error(Errc::limit, what), incumbent_(std::move(incumbent)) {}
  const SolveResult& incumbent() const noexcept { return incumbent_; }

 private:
  SolveResult incumbent_;
};

/// Exhaustive maximum over every f with 0 <= f(v) <= e(v); no bounding.
/// Witness is the lexicographically greatest optimal value vector.
SolveResult alpha_bn_naive(const Tree& t, bool override_limit = false);

/// Branch and bound over non-leaf strengths in {0, 1} and leaf strengths in
/// 0..e(l). With mode = naive this forwards to alpha_bn_naive.
SolveResult alpha_bn(const Tree& t, const SolverConfig& cfg = {});

/// Every bn-independent broadcast of maximum weight over the unrestricted
/// value space, in decreasing lexicographic order.
std::vector<Broadcast> enumerate_optimal_broadcasts(const Tree& t, bool override_limit = false);

/// Maximum weight of a broadcast in which no broadcaster hears another.
SolveResult alpha_h(const Tree& t, bool override_limit = false);

/// alpha(T), via the forest dynamic program.
std::size_t independence_number(const Tree& t);

}  // namespace treecast
