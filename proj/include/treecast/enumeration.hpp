#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecast/broadcast.hpp"
#include "treecast/solvers.hpp"
#include "treecast/structure.hpp"
#include "treecast/tree.hpp"

namespace treecast {

/// Centroid-rooted canonical level sequence, one base-36 digit per vertex.
/// Isomorphic trees get equal codes.
std::string canonical_code(const Tree& t);

/// Builds the tree described by a level sequence (preorder depths, root 0);
/// vertex i is the i-th entry.
Tree tree_from_level_sequence(std::span<const std::uint32_t> levels);

/// One representative per isomorphism class of free trees on n vertices,
/// in a fixed order. Each tree is rooted at vertex 0 on a centroid.
class FreeTreeGenerator {
 public:
  static constexpr std::size_t max_order = 20;

  /// Throws Error(invalid_argument) unless 1 <= n <= max_order.
  explicit FreeTreeGenerator(std::size_t n);

  std::optional<Tree> next();

 private:
  bool advance();
  bool accept() const;

  std::size_t n_;
  std::vector<std::uint32_t> levels_;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<Tree> free_trees(std::size_t n);

enum class Campaign { bound, q1, equality, alphah };

std::string_view to_string(Campaign c) noexcept;
std::optional<Campaign> parse_campaign(std::string_view s);

struct CensusRow {
  std::string id;
  std::size_t n = 0;
  std::size_t b = 0;
  std::size_t rho = 0;
  std::size_t alpha = 0;
  std::uint64_t alpha_bn = 0;
  std::optional<std::uint64_t> alpha_h;
  std::int64_t bound = 0;
  std::int64_t slack = 0;
  std::int64_t q1_bound = 0;
  TreeClass cls = TreeClass::other;
  Tree tree;
  /// Optimum reported by the solver; replayable through the predicates.
  Broadcast witness;
};

CensusRow census_row(const Tree& t, const SolverConfig& cfg, bool with_alpha_h);

struct CampaignOptions {
  Campaign kind = Campaign::bound;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  SolverConfig solver{};
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
  /// When set, flagged trees are written there as <id>.tree / <id>.bcast as
  /// soon as they are found, plus census.csv and <campaign>.csv at the end.
  std::optional<std::filesystem::path> out_dir;
};

struct CampaignResult {
  Campaign kind = Campaign::bound;
  /// Ordered by (n, id).
  std::vector<CensusRow> rows;
  /// Indices into rows: counterexamples for bound/q1, matches for
  /// equality/alphah.
  std::vector<std::size_t> flagged;
};

/// Throws Error(precondition) if the solver config would prune with the bound
/// under test, Error(limit) if alpha_h is required beyond its oracle limit.
CampaignResult run_campaign(const CampaignOptions& opts);

CampaignResult verify_bound(std::size_t n_min, std::size_t n_max, const SolverConfig& cfg = {},
                            unsigned workers = 0);
CampaignResult search_question1(std::size_t n_max, unsigned workers = 0);
CampaignResult collect_equality_trees(std::size_t n_max, unsigned workers = 0);
CampaignResult compare_alpha_h(std::size_t n_max, unsigned workers = 0);

inline constexpr std::string_view census_header =
    "id,n,b,rho,alpha,alpha_bn,alpha_h,bound,slack,q1_bound,class";

std::string census_csv(const CampaignResult& result);
/// The flagged rows in the campaign's own list format.
std::string flagged_csv(const CampaignResult& result);

}  // namespace treecast
