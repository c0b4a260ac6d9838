#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "treecast/tree.hpp"

namespace treecast {

/// Branch sets, leaf sets, endpaths and the degree-2 partition of a tree.
struct StructuralProfile {
  std::vector<Vertex> leaves;
  std::vector<Vertex> stems;
  std::vector<Vertex> branch_vertices;
  std::size_t b = 0;
  /// L(v) for every branch vertex v (empty when the tree is a path).
  std::map<Vertex, std::vector<Vertex>> leaf_sets;
  /// Branch vertices with at most one leaf.
  std::vector<Vertex> R;
  std::size_t rho = 0;
  /// Branch vertices of degree 1 in the branch representation.
  std::vector<Vertex> B_end;
  /// Occupied leaf-set sizes only.
  std::map<std::size_t, std::vector<Vertex>> B_by_count;
  std::vector<Vertex> W_ext;
  std::vector<Vertex> W_int;
  /// Each runs from a branch vertex to a leaf, both inclusive.
  std::vector<std::vector<Vertex>> endpaths;
  bool is_path = false;

  std::vector<Vertex> B_exactly(std::size_t i) const;
  std::vector<Vertex> B_at_least(std::size_t i) const;
  /// Leaves and internal vertices of endpaths.
  std::vector<bool> endpath_interior_mask(std::size_t n) const;
  /// The branch vertex whose leaf set holds leaf l, if any.
  std::optional<Vertex> owner_of_leaf(Vertex l) const;
};

StructuralProfile profile(const Tree& t);

/// A tree whose vertices are a subset of another tree's; `origin[i]` is the
/// vertex of the source tree that local vertex i stands for.
struct DerivedTree {
  Tree tree;
  std::vector<Vertex> origin;
};

/// Suppresses every degree-2 vertex. Throws on n = 1.
DerivedTree branch_leaf_representation(const Tree& t);
/// Deletes the leaves of the branch-leaf representation. Throws when b = 0.
DerivedTree branch_representation(const Tree& t);

/// Acyclic graph, possibly disconnected.
class Forest {
 public:
  Forest() = default;
  /// Throws Error(invalid_argument) if the edge set contains a cycle.
  Forest(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> origin = {});

  std::size_t order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_.at(v); }
  /// Component index per vertex, numbered in order of lowest member.
  std::span<const std::size_t> components() const noexcept { return comp_; }
  std::size_t component_count() const noexcept { return ncomp_; }
  std::span<const Vertex> origin() const noexcept { return origin_; }

  /// Induced on `keep` (need not be sorted); origin maps back to tree vertices.
  static Forest induced(const Tree& t, std::vector<Vertex> keep);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> comp_;
  std::size_t ncomp_ = 0;
  std::vector<Vertex> origin_;
};

Forest interior_subgraph(const Tree& t);
Forest interior_subgraph(const Tree& t, const StructuralProfile& p);
/// T[R(T)].
Forest r_subgraph(const Tree& t, const StructuralProfile& p);

std::size_t forest_independence_number(const Forest& f);
/// The lexicographically least maximum independent set (local vertex ids).
std::vector<Vertex> forest_maximum_independent_set(const Forest& f);

enum class TreeClass { path, star, generalized_spider, caterpillar, other };

std::string_view to_string(TreeClass c) noexcept;
TreeClass classify(const Tree& t);
bool is_caterpillar(const Tree& t);

}  // namespace treecast
