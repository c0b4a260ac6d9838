#pragma once

#include <optional>
#include <string>

#include "treecast/broadcast.hpp"
#include "treecast/structure.hpp"
#include "treecast/tree.hpp"

namespace treecast {

/// Structural profile as a JSON document, plus n, class and the canonical id.
std::string profile_json(const Tree& t);

/// Predicate results for one broadcast.
struct BroadcastCheck {
  std::uint64_t weight = 0;
  bool dominating = false;
  bool bn_independent = false;
  bool h_independent = false;
  /// Only meaningful when bn_independent holds.
  bool maximal = false;
  std::size_t uncovered_edges = 0;
  std::size_t max_edge_coverers = 0;
};

BroadcastCheck check_broadcast(const Tree& t, const Broadcast& f);
std::string check_text(const Tree& t, const Broadcast& f, const BroadcastCheck& c);

/// Graphviz document. Broadcasters are filled and labelled "v:f(v)"; covered
/// edges are solid and labelled with their coverer; uncovered edges dashed.
std::string to_dot(const Tree& t, const std::optional<Broadcast>& f = std::nullopt);

}  // namespace treecast
