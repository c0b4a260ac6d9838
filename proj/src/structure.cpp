#include "treecast/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "treecast/error.hpp"

namespace treecast {

std::vector<Vertex> StructuralProfile::B_exactly(std::size_t i) const {
  auto it = B_by_count.find(i);
  return it == B_by_count.end() ? std::vector<Vertex>{} : it->second;
}

std::vector<Vertex> StructuralProfile::B_at_least(std::size_t i) const {
  std::vector<Vertex> out;
  for (auto it = B_by_count.lower_bound(i); it != B_by_count.end(); ++it)
    out.insert(out.end(), it->second.begin(), it->second.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> StructuralProfile::endpath_interior_mask(std::size_t n) const {
  std::vector<bool> mask(n, false);
  for (Vertex l : leaves) mask[l] = true;
  for (Vertex w : W_ext) mask[w] = true;
  return mask;
}

std::optional<Vertex> StructuralProfile::owner_of_leaf(Vertex l) const {
  for (const auto& [v, ls] : leaf_sets)
    if (std::find(ls.begin(), ls.end(), l) != ls.end()) return v;
  return std::nullopt;
}

namespace {

/// Walks from `from` through `first` across degree-2 vertices; returns the
/// visited vertices, ending at the first vertex of degree != 2.
std::vector<Vertex> walk_through_degree2(const Tree& t, Vertex from, Vertex first) {
  std::vector<Vertex> out{first};
  Vertex prev = from, cur = first;
  while (t.degree(cur) == 2) {
    auto nb = t.neighbours(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

std::vector<Edge> suppressed_edges(const Tree& t, const std::vector<Vertex>& kept,
                                   const std::vector<bool>& keep_mask) {
  std::vector<Vertex> local(t.order(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) local[kept[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex x : kept) {
    for (Vertex y0 : t.neighbours(x)) {
      Vertex y = walk_through_degree2(t, x, y0).back();
      if (keep_mask[y] && x < y) edges.push_back({local[x], local[y]});
    }
  }
  return edges;
}

}  // namespace

StructuralProfile profile(const Tree& t) {
  const std::size_t n = t.order();
  StructuralProfile p;
  std::vector<bool> is_stem(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) == 1) {
      p.leaves.push_back(v);
      is_stem[t.neighbours(v)[0]] = true;
    }
    if (t.degree(v) >= 3) p.branch_vertices.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_stem[v]) p.stems.push_back(v);
  p.b = p.branch_vertices.size();

  if (p.b == 0) {
    p.is_path = true;
    for (Vertex v = 0; v < n; ++v)
      if (t.degree(v) == 2) p.W_ext.push_back(v);
    return p;
  }

  for (Vertex v : p.branch_vertices) p.leaf_sets[v];
  std::vector<bool> on_endpath(n, false);
  for (Vertex l : p.leaves) {
    auto walk = walk_through_degree2(t, l, t.neighbours(l)[0]);
    Vertex owner = walk.back();
    std::vector<Vertex> endpath(walk.rbegin(), walk.rend());
    endpath.push_back(l);
    for (std::size_t i = 1; i + 1 < endpath.size(); ++i) on_endpath[endpath[i]] = true;
    p.leaf_sets[owner].push_back(l);
    p.endpaths.push_back(std::move(endpath));
  }
  std::sort(p.endpaths.begin(), p.endpaths.end());
  for (auto& [v, ls] : p.leaf_sets) {
    std::sort(ls.begin(), ls.end());
    if (ls.size() <= 1) p.R.push_back(v);
    p.B_by_count[ls.size()].push_back(v);
  }
  p.rho = p.R.size();
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) != 2) continue;
    (on_endpath[v] ? p.W_ext : p.W_int).push_back(v);
  }
  if (p.b >= 2) {
    for (Vertex v : p.branch_vertices) {
      std::size_t branch_neighbours = 0;
      for (Vertex y0 : t.neighbours(v))
        if (t.degree(walk_through_degree2(t, v, y0).back()) >= 3) ++branch_neighbours;
      if (branch_neighbours == 1) p.B_end.push_back(v);
    }
  }
  return p;
}

DerivedTree branch_leaf_representation(const Tree& t) {
  if (t.order() < 2)
    throw Error(Errc::precondition, "branch-leaf representation is undefined for n = 1");
  std::vector<bool> keep(t.order(), false);
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 2) {
      keep[v] = true;
      kept.push_back(v);
    }
  }
  auto edges = suppressed_edges(t, kept, keep);
  return {Tree::from_edges(kept.size(), edges), kept};
}

DerivedTree branch_representation(const Tree& t) {
  std::vector<bool> keep(t.order(), false);
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) {
      keep[v] = true;
      kept.push_back(v);
    }
  }
  if (kept.empty())
    throw Error(Errc::precondition, "branch representation needs a branch vertex");
  auto edges = suppressed_edges(t, kept, keep);
  return {Tree::from_edges(kept.size(), edges), kept};
}

Forest::Forest(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> origin)
    : n_(n), edges_(std::move(edges)), adj_(n), comp_(n, 0), origin_(std::move(origin)) {
  if (origin_.empty()) {
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), Vertex{0});
  }
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n || e.u == e.v)
      throw Error(Errc::invalid_argument, "forest edge out of range or self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::fill(comp_.begin(), comp_.end(), unset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp_[s] != unset) continue;
    comp_[s] = ncomp_;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj_[x]) {
        if (comp_[y] == unset) {
          comp_[y] = ncomp_;
          stack.push_back(y);
        }
      }
    }
    ++ncomp_;
  }
  if (edges_.size() + ncomp_ != n_) throw Error(Errc::invalid_argument, "edge set has a cycle");
}

Forest Forest::induced(const Tree& t, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr auto absent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(t.order(), absent);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : t.edges())
    if (local[e.u] != absent && local[e.v] != absent) edges.push_back({local[e.u], local[e.v]});
  const auto n = keep.size();
  return Forest(n, std::move(edges), std::move(keep));
}

Forest interior_subgraph(const Tree& t) { return interior_subgraph(t, profile(t)); }

Forest interior_subgraph(const Tree& t, const StructuralProfile& p) {
  std::vector<Vertex> keep = p.R;  // B_0 ∪ B_1
  keep.insert(keep.end(), p.W_int.begin(), p.W_int.end());
  return Forest::induced(t, std::move(keep));
}

Forest r_subgraph(const Tree& t, const StructuralProfile& p) { return Forest::induced(t, p.R); }

namespace {

enum class Force : std::uint8_t { free, in, out };

constexpr long long neg_inf = std::numeric_limits<long long>::min() / 4;

/// Maximum independent set size subject to forced memberships.
long long constrained_mis(const Forest& f, const std::vector<Force>& force) {
  const std::size_t n = f.order();
  std::vector<long long> with(n), without(n);
  std::vector<bool> seen(n, false);
  long long total = 0;
  std::vector<std::pair<Vertex, Vertex>> order;  // (vertex, parent) in preorder
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    order.clear();
    order.push_back({root, root});
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex c : f.neighbours(order[i].first)) {
        if (seen[c]) continue;
        seen[c] = true;
        order.push_back({c, order[i].first});
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = it->first;
      long long in = 1, out = 0;
      for (Vertex c : f.neighbours(v)) {
        if (c == it->second && v != root) continue;
        in += without[c];
        out += std::max(with[c], without[c]);
      }
      with[v] = force[v] == Force::out ? neg_inf : in;
      without[v] = force[v] == Force::in ? neg_inf : out;
    }
    total += std::max(with[root], without[root]);
  }
  return total;
}

}  // namespace

std::size_t forest_independence_number(const Forest& f) {
  return static_cast<std::size_t>(
      constrained_mis(f, std::vector<Force>(f.order(), Force::free)));
}

std::vector<Vertex> forest_maximum_independent_set(const Forest& f) {
  const std::size_t n = f.order();
  std::vector<Force> force(n, Force::free);
  const long long best = constrained_mis(f, force);
  std::vector<Vertex> chosen;
  for (Vertex v = 0; v < n; ++v) {
    if (force[v] != Force::free) continue;
    force[v] = Force::in;
    if (constrained_mis(f, force) == best) {
      chosen.push_back(v);
      for (Vertex u : f.neighbours(v)) force[u] = Force::out;
    } else {
      force[v] = Force::out;
    }
  }
  return chosen;
}

std::string_view to_string(TreeClass c) noexcept {
  switch (c) {
    case TreeClass::path: return "path";
    case TreeClass::star: return "star";
    case TreeClass::generalized_spider: return "generalized_spider";
    case TreeClass::caterpillar: return "caterpillar";
    case TreeClass::other: return "other";
  }
  return "other";
}

bool is_caterpillar(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) <= 1) continue;
    std::size_t inner = 0;
    for (Vertex u : t.neighbours(v))
      if (t.degree(u) > 1) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

TreeClass classify(const Tree& t) {
  std::size_t b = 0;
  Vertex head = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) {
      ++b;
      head = v;
    }
  }
  if (b == 0) return TreeClass::path;
  if (b == 1) return t.degree(head) + 1 == t.order() ? TreeClass::star
                                                      : TreeClass::generalized_spider;
  return is_caterpillar(t) ? TreeClass::caterpillar : TreeClass::other;
}

}  // namespace treecast
