#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecast/tree.hpp"

namespace treecast {

/// Assignment of a nonnegative strength to every vertex of one specific tree,
/// with f(v) <= e(v) enforced on every write.
class Broadcast {
 public:
  /// The all-zero broadcast on t.
  explicit Broadcast(const Tree& t);
  /// Throws Error(invalid_argument) on size mismatch or f(v) > e(v).
  Broadcast(const Tree& t, std::vector<std::uint32_t> values);

  std::size_t order() const noexcept { return values_.size(); }
  std::uint32_t operator[](Vertex v) const { return values_.at(v); }
  std::span<const std::uint32_t> values() const noexcept { return values_; }
  std::uint64_t tree_id() const noexcept { return tree_id_; }

  void set(const Tree& t, Vertex v, std::uint32_t value);

  friend bool operator==(const Broadcast& a, const Broadcast& b) {
    return a.tree_id_ == b.tree_id_ && a.values_ == b.values_;
  }

 private:
  std::uint64_t tree_id_;
  std::vector<std::uint32_t> values_;
};

/// Throws Error(precondition) unless f was built for t.
void require_bound(const Tree& t, const Broadcast& f);

std::uint64_t weight(const Broadcast& f);
/// V_f^+, ascending.
std::vector<Vertex> broadcasters(const Broadcast& f);
/// |V_f^1|
std::size_t strength_one_count(const Broadcast& f);

struct FSets {
  std::vector<Vertex> neighbourhood;
  std::vector<Vertex> boundary;
  std::vector<Vertex> private_neighbourhood;
  std::vector<Vertex> private_boundary;
};

/// N_f(v), B_f(v), PN_f(v), PB_f(v). Throws Error(precondition) if f(v) = 0.
FSets f_sets(const Tree& t, const Broadcast& f, Vertex v);

struct Hearing {
  Vertex broadcaster;
  std::uint32_t distance;
  bool operator==(const Hearing&) const = default;
};

struct CoverageReport {
  std::vector<std::vector<Hearing>> hearers;
  std::vector<Vertex> undominated;
  /// Parallel to t.edges(); every broadcaster that covers the edge.
  std::vector<std::vector<Vertex>> edge_coverers;
  std::vector<Edge> uncovered_edges;
  std::vector<std::vector<Vertex>> overdominated_by;

  std::size_t max_coverers() const;
};

CoverageReport coverage_report(const Tree& t, const Broadcast& f);

bool is_dominating(const Tree& t, const Broadcast& f);
bool is_bn_independent(const Tree& t, const Broadcast& f);
bool is_h_independent(const Tree& t, const Broadcast& f);

/// Dominating, and either a single broadcaster or every broadcaster has a
/// boundary vertex outside its private boundary.
bool maximal_by_private_boundaries(const Tree& t, const Broadcast& f);
/// Every component of T minus the uncovered edges holds at least two
/// broadcasters. Meaningful only with two or more broadcasters.
bool maximal_by_uncovered_components(const Tree& t, const Broadcast& f);
/// Returns the private-boundary verdict; when there are at least two
/// broadcasters it also evaluates the component criterion and throws
/// std::logic_error if the two disagree. Throws Error(precondition) when f is
/// not bn-independent.
bool is_maximal_bn_independent(const Tree& t, const Broadcast& f);

/// Lines "v value"; omitted vertices are 0. Blank lines and '#' comments are
/// skipped.
Broadcast parse_broadcast(const Tree& t, std::string_view text);
/// Nonzero entries only, ascending by vertex.
std::string to_text(const Broadcast& f);

}  // namespace treecast
