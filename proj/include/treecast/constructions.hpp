#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecast/broadcast.hpp"
#include "treecast/tree.hpp"

namespace treecast {

/// Head is vertex 0; leg i occupies the next n_i vertices, head side first.
/// Throws Error(invalid_argument) for fewer than three legs or a zero length.
Tree make_spider(std::span<const std::uint32_t> legs);

/// "2,2,2" or the power shorthand "2^3".
std::vector<std::uint32_t> parse_leg_lengths(std::string_view text);

/// Weight n - 1 broadcast on a path or generalized spider: one end of a path
/// at n - 1, or every spider leaf at its leg length.
Broadcast spider_witness(const Tree& t);

/// Spine b_1..b_k with the lengths of the leaf endpaths hanging off each b_i.
struct CaterpillarSpec {
  std::vector<std::vector<std::uint32_t>> endpaths;
};

/// Branch vertices separated by '/', endpath lengths by ','; "1,1/1/1,1".
CaterpillarSpec parse_caterpillar_spec(std::string_view text);

/// Spine vertices are 0..k-1 in order, followed by each b_i's endpaths in
/// order, each endpath listed from b_i outward. The result is a caterpillar
/// only when endpaths longer than 1 hang from b_1 or b_k, at most one each.
Tree make_caterpillar(const CaterpillarSpec& spec);

/// Leaves of B_1 vertices at 2, the farthest leaf of each end branch vertex at
/// its distance from it, all other leaves at 1. Requires a caterpillar with at
/// least two branch vertices, W_int empty and B_1 independent.
Broadcast caterpillar_witness(const Tree& t);

struct Fixture {
  std::string name;
  Tree tree;
  std::optional<std::uint64_t> expected_alpha_bn;
  std::string description;
};

std::vector<std::string> fixture_names();
/// Throws Error(not_found) for unknown names.
Fixture fixture(std::string_view name);

}  // namespace treecast
