#include "treecast/constructions.hpp"

#include <algorithm>
#include <charconv>

#include "treecast/error.hpp"
#include "treecast/structure.hpp"

namespace treecast {

Tree make_spider(std::span<const std::uint32_t> legs) {
  if (legs.size() < 3)
    throw Error(Errc::invalid_argument, "a spider needs at least three legs");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (auto len : legs) {
    if (len == 0) throw Error(Errc::invalid_argument, "spider legs need length >= 1");
    Vertex prev = 0;
    for (std::uint32_t i = 0; i < len; ++i, ++next) {
      edges.push_back({prev, next});
      prev = next;
    }
  }
  return Tree::from_edges(next, edges);
}

namespace {

std::uint32_t parse_positive(std::string_view s, const char* what) {
  std::uint32_t x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw Error(Errc::invalid_argument, std::string("bad ") + what + " '" + std::string(s) + "'");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> parse_leg_lengths(std::string_view text) {
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    auto len = parse_positive(text.substr(0, caret), "leg length");
    auto k = parse_positive(text.substr(caret + 1), "leg count");
    return std::vector<std::uint32_t>(k, len);
  }
  std::vector<std::uint32_t> out;
  for (auto tok : split(text, ',')) out.push_back(parse_positive(tok, "leg length"));
  return out;
}

Broadcast spider_witness(const Tree& t) {
  const auto cls = classify(t);
  Broadcast f(t);
  if (t.order() < 2) throw Error(Errc::precondition, "construction not applicable: trivial tree");
  if (cls == TreeClass::path) {
    for (Vertex v = 0; v < t.order(); ++v) {
      if (t.is_leaf(v)) {
        f.set(t, v, static_cast<std::uint32_t>(t.order() - 1));
        return f;
      }
    }
  }
  if (cls != TreeClass::star && cls != TreeClass::generalized_spider)
    throw Error(Errc::precondition,
                "construction not applicable: tree is neither a path nor a generalized spider");
  const auto head = profile(t).branch_vertices.front();
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.is_leaf(v)) f.set(t, v, t.distance(v, head));
  return f;
}

CaterpillarSpec parse_caterpillar_spec(std::string_view text) {
  CaterpillarSpec spec;
  for (auto group : split(text, '/')) {
    std::vector<std::uint32_t> lengths;
    if (!group.empty())
      for (auto tok : split(group, ',')) lengths.push_back(parse_positive(tok, "endpath length"));
    spec.endpaths.push_back(std::move(lengths));
  }
  return spec;
}

Tree make_caterpillar(const CaterpillarSpec& spec) {
  const std::size_t k = spec.endpaths.size();
  if (k < 2) throw Error(Errc::invalid_argument, "a caterpillar spec needs two or more branch vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  Vertex next = static_cast<Vertex>(k);
  for (Vertex i = 0; i < k; ++i) {
    const std::size_t spine_degree = (i == 0 || i + 1 == k) ? 1 : 2;
    if (spine_degree + spec.endpaths[i].size() < 3)
      throw Error(Errc::invalid_argument, "branch vertex " + std::to_string(i + 1) +
                                              " would have degree below 3");
    for (auto len : spec.endpaths[i]) {
      if (len == 0) throw Error(Errc::invalid_argument, "endpath lengths must be >= 1");
      Vertex prev = i;
      for (std::uint32_t j = 0; j < len; ++j, ++next) {
        edges.push_back({prev, next});
        prev = next;
      }
    }
  }
  return Tree::from_edges(next, edges);
}

Broadcast caterpillar_witness(const Tree& t) {
  auto fail = [](const std::string& why) {
    throw Error(Errc::precondition, "construction not applicable: " + why);
  };
  if (classify(t) != TreeClass::caterpillar)
    fail("not a caterpillar with two or more branch vertices");
  const auto p = profile(t);
  if (!p.W_int.empty()) fail("W_int is not empty");
  const auto single = p.B_exactly(1);
  for (Vertex a : single)
    for (Vertex b : single)
      if (a < b && t.distance(a, b) == 1) fail("B_1 is not independent");
  if (p.B_end.size() != 2) fail("branch vertices do not form a path");

  Broadcast f(t);
  for (Vertex l : p.leaves) f.set(t, l, 1);
  for (Vertex b : single) {
    for (Vertex l : p.leaf_sets.at(b)) f.set(t, l, 2);
  }
  for (Vertex end : p.B_end) {
    const auto& own = p.leaf_sets.at(end);
    // Farthest leaf, lowest index on ties.
    Vertex far = own.front();
    for (Vertex l : own)
      if (t.distance(l, end) > t.distance(far, end)) far = l;
    f.set(t, far, t.distance(far, end));
  }
  return f;
}

namespace {

struct FixtureDef {
  const char* name;
  std::size_t n;
  std::vector<Edge> edges;
  std::optional<std::uint64_t> expected;
  const char* description;
};

const std::vector<FixtureDef>& fixture_defs() {
  static const std::vector<FixtureDef> defs = {
      {"p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 4, "path on 5 vertices"},
      {"k13", 4, {{0, 1}, {0, 2}, {0, 3}}, 3, "star K_{1,3}"},
      {"sp222",
       7,
       {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}},
       6,
       "spider with three legs of length 2"},
      {"double_star",
       6,
       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}},
       4,
       "two adjacent stems with two leaves each"},
      // Centre 0 joined to branch vertices 1, 2, 3, each carrying two leaves.
      {"fig_6_10",
       10,
       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}},
       7,
       "branch representation K_{1,3} with a leafless centre"},
  };
  return defs;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& d : fixture_defs()) out.emplace_back(d.name);
  return out;
}

Fixture fixture(std::string_view name) {
  for (const auto& d : fixture_defs())
    if (name == d.name)
      return {d.name, Tree::from_edges(d.n, d.edges), d.expected, d.description};
  throw Error(Errc::not_found, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace treecast
