#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "treecast/broadcast.hpp"
#include "treecast/tree.hpp"

namespace support {

inline treecast::Tree tree(const std::string& edge_list) { return treecast::parse_tree(edge_list); }

inline treecast::Tree path(unsigned n) {
  std::string s = std::to_string(n) + "\n";
  for (unsigned i = 0; i + 1 < n; ++i) s += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  return tree(s);
}

inline treecast::Tree star(unsigned leaves) {
  std::string s = std::to_string(leaves + 1) + "\n";
  for (unsigned i = 1; i <= leaves; ++i) s += "0 " + std::to_string(i) + "\n";
  return tree(s);
}

// Stems 0 and 1, leaves 2, 3 on 0 and 4, 5 on 1.
inline treecast::Tree double_star() { return tree("6\n0 1\n0 2\n0 3\n1 4\n1 5\n"); }

inline oracle::EdgeList edges(const treecast::Tree& t) {
  oracle::EdgeList out;
  for (const auto& e : t.edges()) out.push_back({e.u, e.v});
  return out;
}

inline unsigned order(const treecast::Tree& t) { return static_cast<unsigned>(t.order()); }

inline std::vector<unsigned> values(const treecast::Broadcast& f) {
  return {f.values().begin(), f.values().end()};
}

inline treecast::Broadcast bcast(const treecast::Tree& t, std::vector<std::uint32_t> v) {
  return treecast::Broadcast(t, std::move(v));
}

}  // namespace support
