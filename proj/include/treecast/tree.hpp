#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treecast {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/**
 * Immutable free tree on vertices 0..n-1.
 *
 * Construction validates the edge set and eagerly computes the full distance
 * matrix and all eccentricities, so metric queries are O(1). Copies share the
 * same underlying data and the same identity; two trees built separately from
 * identical edge lists have different identities.
 */
class Tree {
 public:
  /// Validates and builds. Throws ParseError on any structural defect.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept;
  /// Normalized (u < v) and sorted lexicographically.
  std::span<const Edge> edges() const noexcept;
  /// Sorted ascending.
  std::span<const Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  std::uint32_t distance(Vertex u, Vertex v) const;
  std::uint32_t eccentricity(Vertex v) const;
  std::uint32_t diameter() const noexcept;

  /// Vertices of the unique u-v path, u first.
  std::vector<Vertex> path(Vertex u, Vertex v) const;
  /// Vertices ordered by distance from v (v first), ties by index.
  std::span<const Vertex> by_distance(Vertex v) const;
  /// Number of vertices within distance r of v.
  std::size_t ball_size(Vertex v, std::uint32_t r) const;

  std::uint64_t id() const noexcept;

 private:
  struct Data;
  explicit Tree(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Edge-list document: "n" then n-1 lines "u v". Falls back to graph6 when
/// the first non-empty line is not a bare integer.
Tree parse_tree(std::string_view text);
Tree parse_edge_list(std::string_view text);
Tree parse_graph6(std::string_view text);

std::string to_edge_list(const Tree& t);
std::string to_graph6(const Tree& t);

}  // namespace treecast
