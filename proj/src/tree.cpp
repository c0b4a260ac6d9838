#include "treecast/tree.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <queue>
#include <sstream>

#include "treecast/error.hpp"

namespace treecast {

const char* to_string(ParseErrc kind) noexcept {
  switch (kind) {
    case ParseErrc::malformed: return "malformed input";
    case ParseErrc::empty_tree: return "empty tree";
    case ParseErrc::vertex_out_of_range: return "vertex out of range";
    case ParseErrc::self_loop: return "self-loop";
    case ParseErrc::duplicate_edge: return "duplicate edge";
    case ParseErrc::wrong_edge_count: return "wrong edge count";
    case ParseErrc::disconnected: return "disconnected";
    case ParseErrc::duplicate_vertex: return "duplicate vertex";
  }
  return "parse error";
}

struct Tree::Data {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj;
  std::vector<std::uint32_t> dist;  // row-major n*n
  std::vector<std::uint32_t> ecc;
  std::vector<Vertex> order;        // row-major n*n, per-source BFS order
  std::uint32_t diameter = 0;
  std::uint64_t id = 0;
};

namespace {

std::atomic<std::uint64_t> next_tree_id{1};

std::string vertex_pair(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw ParseError(ParseErrc::empty_tree, "a tree needs at least one vertex");
  auto d = std::make_shared<Data>();
  d->n = n;
  d->adj.resize(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw ParseError(ParseErrc::vertex_out_of_range,
                       "edge " + vertex_pair(e.u, e.v) + " with n = " + std::to_string(n));
    if (e.u == e.v) throw ParseError(ParseErrc::self_loop, "edge " + vertex_pair(e.u, e.v));
    d->edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(d->edges.begin(), d->edges.end());
  auto dup = std::adjacent_find(d->edges.begin(), d->edges.end());
  if (dup != d->edges.end())
    throw ParseError(ParseErrc::duplicate_edge, "edge " + vertex_pair(dup->u, dup->v));
  if (d->edges.size() != n - 1)
    throw ParseError(ParseErrc::wrong_edge_count, "expected " + std::to_string(n - 1) +
                                                      " edges, got " +
                                                      std::to_string(d->edges.size()));
  for (const auto& e : d->edges) {
    d->adj[e.u].push_back(e.v);
    d->adj[e.v].push_back(e.u);
  }
  for (auto& nb : d->adj) std::sort(nb.begin(), nb.end());

  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  d->dist.assign(n * n, unreached);
  d->order.resize(n * n);
  d->ecc.assign(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    auto* row = &d->dist[s * n];
    auto* ord = &d->order[s * n];
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    ord[tail++] = s;
    while (head < tail) {
      Vertex x = ord[head++];
      for (Vertex y : d->adj[x]) {
        if (row[y] != unreached) continue;
        row[y] = row[x] + 1;
        ord[tail++] = y;
      }
    }
    if (tail != n)
      throw ParseError(ParseErrc::disconnected,
                       "only " + std::to_string(tail) + " of " + std::to_string(n) +
                           " vertices reachable from vertex " + std::to_string(s));
    // BFS order is already nondecreasing in distance; make ties deterministic.
    std::stable_sort(ord, ord + n, [row](Vertex a, Vertex b) {
      return row[a] != row[b] ? row[a] < row[b] : a < b;
    });
    d->ecc[s] = row[ord[n - 1]];
    d->diameter = std::max(d->diameter, d->ecc[s]);
  }
  d->id = next_tree_id.fetch_add(1, std::memory_order_relaxed);
  return Tree(std::move(d));
}

std::size_t Tree::order() const noexcept { return d_->n; }
std::span<const Edge> Tree::edges() const noexcept { return d_->edges; }

std::span<const Vertex> Tree::neighbours(Vertex v) const { return d_->adj.at(v); }

std::uint32_t Tree::distance(Vertex u, Vertex v) const { return d_->dist[u * d_->n + v]; }

std::uint32_t Tree::eccentricity(Vertex v) const { return d_->ecc.at(v); }

std::uint32_t Tree::diameter() const noexcept { return d_->diameter; }

std::uint64_t Tree::id() const noexcept { return d_->id; }

std::vector<Vertex> Tree::path(Vertex u, Vertex v) const {
  std::vector<Vertex> out{u};
  while (u != v) {
    for (Vertex w : d_->adj[u]) {
      if (distance(w, v) + 1 == distance(u, v)) {
        u = w;
        break;
      }
    }
    out.push_back(u);
  }
  return out;
}

std::span<const Vertex> Tree::by_distance(Vertex v) const {
  return {&d_->order[v * d_->n], d_->n};
}

std::size_t Tree::ball_size(Vertex v, std::uint32_t r) const {
  auto ord = by_distance(v);
  const auto* row = &d_->dist[v * d_->n];
  return static_cast<std::size_t>(
      std::partition_point(ord.begin(), ord.end(), [&](Vertex x) { return row[x] <= r; }) -
      ord.begin());
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    auto line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

std::vector<std::uint64_t> parse_fields(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  line = trim(line);
  while (!line.empty()) {
    auto sp = line.find_first_of(" \t");
    auto tok = line.substr(0, sp);
    std::uint64_t x = 0;
    if (!parse_uint(tok, x))
      throw ParseError(ParseErrc::malformed, "line " + std::to_string(lineno) +
                                                 ": expected nonnegative integer, got '" +
                                                 std::string(tok) + "'");
    out.push_back(x);
    if (sp == std::string_view::npos) break;
    line = trim(line.substr(sp));
  }
  return out;
}

bool looks_like_edge_list(std::string_view text) {
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) continue;
    std::uint64_t n = 0;
    return parse_uint(line, n);
  }
  return true;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  auto next_nonempty = [&]() -> std::string_view* {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    return i < lines.size() ? &lines[i++] : nullptr;
  };
  auto* first = next_nonempty();
  if (!first) throw ParseError(ParseErrc::malformed, "missing vertex count");
  auto header = parse_fields(*first, i);
  if (header.size() != 1)
    throw ParseError(ParseErrc::malformed, "line " + std::to_string(i) +
                                               ": first line must hold only the vertex count");
  const std::uint64_t n = header[0];
  if (n == 0) throw ParseError(ParseErrc::empty_tree, "vertex count is 0");
  std::vector<Edge> edges;
  while (auto* line = next_nonempty()) {
    auto fields = parse_fields(*line, i);
    if (fields.size() != 2)
      throw ParseError(ParseErrc::malformed,
                       "line " + std::to_string(i) + ": expected 'u v'");
    if (fields[0] >= n || fields[1] >= n)
      throw ParseError(ParseErrc::vertex_out_of_range,
                       "line " + std::to_string(i) + ": vertex out of 0.." +
                           std::to_string(n - 1));
    edges.push_back({static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1])});
  }
  return Tree::from_edges(n, edges);
}

Tree parse_graph6(std::string_view text) {
  text = trim(text);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  std::vector<int> bytes;
  for (char c : text) {
    int x = static_cast<unsigned char>(c) - 63;
    if (x < 0 || x > 63)
      throw ParseError(ParseErrc::malformed, "graph6: byte outside printable range");
    bytes.push_back(x);
  }
  std::size_t pos = 0;
  auto take = [&]() {
    if (pos >= bytes.size()) throw ParseError(ParseErrc::malformed, "graph6: truncated");
    return bytes[pos++];
  };
  std::uint64_t n = 0;
  int b0 = take();
  if (b0 < 63) {
    n = static_cast<std::uint64_t>(b0);
  } else {
    int b1 = take();
    if (b1 < 63) {
      n = (static_cast<std::uint64_t>(b1) << 12) | (static_cast<std::uint64_t>(take()) << 6) |
          static_cast<std::uint64_t>(take());
    } else {
      for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(take());
    }
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (bytes.size() - pos != (bits + 5) / 6)
    throw ParseError(ParseErrc::malformed, "graph6: body length does not match n");
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      int byte = bytes[pos + k / 6];
      if (byte & (1 << (5 - k % 6))) edges.push_back({u, v});
    }
  }
  return Tree::from_edges(n, edges);
}

Tree parse_tree(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw ParseError(ParseErrc::empty_tree, "input is empty");
  return looks_like_edge_list(text) ? parse_edge_list(text) : parse_graph6(text);
}

std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const auto& e : t.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_graph6(const Tree& t) {
  const std::uint64_t n = t.order();
  std::string out;
  auto put = [&](std::uint64_t x) { out.push_back(static_cast<char>(x + 63)); };
  if (n < 63) {
    put(n);
  } else if (n <= 258047) {
    put(63);
    put((n >> 12) & 63);
    put((n >> 6) & 63);
    put(n & 63);
  } else {
    put(63);
    put(63);
    for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
  }
  std::vector<bool> adj(n * n, false);
  for (const auto& e : t.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = true;
  int acc = 0, filled = 0;
  for (std::uint64_t v = 1; v < n; ++v) {
    for (std::uint64_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (adj[u * n + v] ? 1 : 0);
      if (++filled == 6) {
        put(static_cast<std::uint64_t>(acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) put(static_cast<std::uint64_t>(acc << (6 - filled)));
  return out;
}

}  // namespace treecast
