// Brute-force reference implementations. They work from raw edge lists and
// share no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<unsigned, unsigned>>;
using Matrix = std::vector<std::vector<unsigned>>;
using Values = std::vector<unsigned>;

inline std::vector<std::vector<unsigned>> adjacency(unsigned n, const EdgeList& edges) {
  std::vector<std::vector<unsigned>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

inline Matrix distances(unsigned n, const EdgeList& edges) {
  const auto adj = adjacency(n, edges);
  Matrix d(n, std::vector<unsigned>(n, ~0u));
  for (unsigned s = 0; s < n; ++s) {
    std::queue<unsigned> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x])
        if (d[s][y] == ~0u) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
    }
  }
  return d;
}

inline std::vector<unsigned> eccentricities(const Matrix& d) {
  std::vector<unsigned> e;
  for (const auto& row : d) e.push_back(*std::max_element(row.begin(), row.end()));
  return e;
}

/// N_f(u) ∩ N_f(v) ⊆ B_f(u) ∩ B_f(v), checked pairwise from the definition.
inline bool pair_bn_ok(const Matrix& d, unsigned u, unsigned fu, unsigned v, unsigned fv) {
  for (unsigned x = 0; x < d.size(); ++x) {
    const bool in_both = d[u][x] <= fu && d[v][x] <= fv;
    if (in_both && !(d[u][x] == fu && d[v][x] == fv)) return false;
  }
  return true;
}

inline bool bn_independent(const Matrix& d, const Values& f) {
  for (unsigned u = 0; u < f.size(); ++u)
    for (unsigned v = u + 1; v < f.size(); ++v)
      if (f[u] && f[v] && !pair_bn_ok(d, u, f[u], v, f[v])) return false;
  return true;
}

inline bool h_independent(const Matrix& d, const Values& f) {
  for (unsigned u = 0; u < f.size(); ++u)
    for (unsigned v = 0; v < f.size(); ++v)
      if (u != v && f[u] && f[v] && d[u][v] <= f[v]) return false;
  return true;
}

/// No bn-independent g > f exists. Checking single increments suffices
/// because bn-independence survives lowering any value.
inline bool maximal_bn(const Matrix& d, const Values& f) {
  const auto e = eccentricities(d);
  for (unsigned v = 0; v < f.size(); ++v) {
    if (f[v] == e[v]) continue;
    auto g = f;
    ++g[v];
    if (bn_independent(d, g)) return false;
  }
  return true;
}

/// Every assignment 0 <= f(v) <= e(v), abandoning prefixes that already
/// violate `pair_ok`. Calls `visit` on each complete feasible assignment.
inline void for_each_feasible(const Matrix& d,
                              const std::function<bool(unsigned, unsigned, unsigned, unsigned)>& pair_ok,
                              const std::function<void(const Values&)>& visit) {
  const auto e = eccentricities(d);
  const unsigned n = static_cast<unsigned>(d.size());
  Values f(n, 0);
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == n) {
      visit(f);
      return;
    }
    for (unsigned k = 0; k <= e[i]; ++k) {
      bool ok = true;
      if (k)
        for (unsigned j = 0; j < i && ok; ++j)
          if (f[j]) ok = pair_ok(j, f[j], i, k);
      if (!ok) continue;
      f[i] = k;
      rec(i + 1);
    }
    f[i] = 0;
  };
  rec(0);
}

struct Optimum {
  unsigned value = 0;
  std::vector<Values> all;
};

inline Optimum alpha_bn(unsigned n, const EdgeList& edges) {
  const auto d = distances(n, edges);
  Optimum best;
  for_each_feasible(
      d, [&](unsigned u, unsigned fu, unsigned v, unsigned fv) { return pair_bn_ok(d, u, fu, v, fv); },
      [&](const Values& f) {
        unsigned w = 0;
        for (auto x : f) w += x;
        if (w > best.value) {
          best.value = w;
          best.all.clear();
        }
        if (w == best.value) best.all.push_back(f);
      });
  return best;
}

inline unsigned alpha_h(unsigned n, const EdgeList& edges) {
  const auto d = distances(n, edges);
  unsigned best = 0;
  for_each_feasible(
      d,
      [&](unsigned u, unsigned fu, unsigned v, unsigned fv) { return d[u][v] > fu && d[u][v] > fv; },
      [&](const Values& f) {
        unsigned w = 0;
        for (auto x : f) w += x;
        best = std::max(best, w);
      });
  return best;
}

/// Independence number by scanning every vertex subset.
inline unsigned alpha(unsigned n, const EdgeList& edges) {
  unsigned best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges)
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    if (ok) best = std::max(best, static_cast<unsigned>(__builtin_popcount(mask)));
  }
  return best;
}

/// AHU encoding rooted at the tree's centre(s); equal iff isomorphic.
inline std::string ahu(unsigned n, const EdgeList& edges) {
  if (n == 1) return "()";
  const auto adj = adjacency(n, edges);
  std::vector<unsigned> deg(n);
  for (unsigned v = 0; v < n; ++v) deg[v] = static_cast<unsigned>(adj[v].size());
  std::vector<unsigned> layer, removed(n, 0);
  for (unsigned v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  unsigned left = n;
  while (left > 2) {
    std::vector<unsigned> next;
    for (auto v : layer) {
      removed[v] = 1;
      --left;
      for (auto w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = next;
  }
  std::vector<unsigned> centres;
  for (unsigned v = 0; v < n; ++v)
    if (!removed[v]) centres.push_back(v);
  std::function<std::string(unsigned, unsigned)> enc = [&](unsigned v, unsigned parent) {
    std::vector<std::string> kids;
    for (auto w : adj[v])
      if (w != parent) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (auto c : centres) {
    auto s = enc(c, ~0u);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// Labelled trees on n >= 2 vertices, one per Prüfer sequence.
inline void for_each_labelled_tree(unsigned n, const std::function<void(const EdgeList&)>& visit) {
  if (n == 2) {
    visit({{0, 1}});
    return;
  }
  std::vector<unsigned> seq(n - 2, 0);
  while (true) {
    std::vector<unsigned> deg(n, 1);
    for (auto x : seq) ++deg[x];
    EdgeList edges;
    for (auto x : seq) {
      unsigned leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.push_back({leaf, x});
      --deg[leaf];
      --deg[x];
    }
    unsigned a = n, b = n;
    for (unsigned v = 0; v < n; ++v)
      if (deg[v] == 1) (a == n ? a : b) = v;
    edges.push_back({a, b});
    visit(edges);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

/// Number of unlabelled trees on n vertices by deduplicating Prüfer trees.
inline std::size_t count_by_pruefer(unsigned n) {
  if (n == 1) return 1;
  std::set<std::string> seen;
  for_each_labelled_tree(n, [&](const EdgeList& e) { seen.insert(ahu(n, e)); });
  return seen.size();
}

/// One representative per isomorphism class for each order 1..n_max, grown by
/// attaching a leaf to every vertex of every smaller representative.
inline std::vector<std::vector<EdgeList>> trees_by_extension(unsigned n_max) {
  std::vector<std::vector<EdgeList>> out(n_max + 1);
  out[1] = {EdgeList{}};
  for (unsigned n = 2; n <= n_max; ++n) {
    std::set<std::string> seen;
    for (const auto& base : out[n - 1])
      for (unsigned v = 0; v + 1 < n; ++v) {
        auto e = base;
        e.push_back({v, n - 1});
        if (seen.insert(ahu(n, e)).second) out[n].push_back(e);
      }
  }
  return out;
}

}  // namespace oracle
