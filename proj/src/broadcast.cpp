#include "treecast/broadcast.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "treecast/error.hpp"

namespace treecast {

namespace {

void check_value(const Tree& t, Vertex v, std::uint32_t value) {
  if (value > t.eccentricity(v))
    throw Error(Errc::invalid_argument, "f(" + std::to_string(v) + ") = " +
                                            std::to_string(value) +
                                            " exceeds eccentricity " +
                                            std::to_string(t.eccentricity(v)));
}

}  // namespace

Broadcast::Broadcast(const Tree& t) : tree_id_(t.id()), values_(t.order(), 0) {}

Broadcast::Broadcast(const Tree& t, std::vector<std::uint32_t> values)
    : tree_id_(t.id()), values_(std::move(values)) {
  if (values_.size() != t.order())
    throw Error(Errc::invalid_argument, "broadcast has " + std::to_string(values_.size()) +
                                            " values for a tree of order " +
                                            std::to_string(t.order()));
  for (Vertex v = 0; v < values_.size(); ++v) check_value(t, v, values_[v]);
}

void Broadcast::set(const Tree& t, Vertex v, std::uint32_t value) {
  require_bound(t, *this);
  check_value(t, v, value);
  values_.at(v) = value;
}

void require_bound(const Tree& t, const Broadcast& f) {
  if (t.id() != f.tree_id())
    throw Error(Errc::precondition, "broadcast is bound to a different tree");
}

std::uint64_t weight(const Broadcast& f) {
  return std::accumulate(f.values().begin(), f.values().end(), std::uint64_t{0});
}

std::vector<Vertex> broadcasters(const Broadcast& f) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < f.order(); ++v)
    if (f[v] > 0) out.push_back(v);
  return out;
}

std::size_t strength_one_count(const Broadcast& f) {
  return static_cast<std::size_t>(
      std::count(f.values().begin(), f.values().end(), std::uint32_t{1}));
}

namespace {

bool heard_by_other(const Tree& t, const Broadcast& f, Vertex u, Vertex except) {
  for (Vertex w = 0; w < f.order(); ++w)
    if (w != except && f[w] > 0 && t.distance(u, w) <= f[w]) return true;
  return false;
}

}  // namespace

FSets f_sets(const Tree& t, const Broadcast& f, Vertex v) {
  require_bound(t, f);
  if (f[v] == 0)
    throw Error(Errc::precondition, "vertex " + std::to_string(v) + " is not a broadcaster");
  FSets s;
  for (Vertex u : t.by_distance(v)) {
    auto d = t.distance(u, v);
    if (d > f[v]) break;
    s.neighbourhood.push_back(u);
    if (d == f[v]) s.boundary.push_back(u);
    const bool shared = heard_by_other(t, f, u, v);
    if (!shared) s.private_neighbourhood.push_back(u);
    // Lowering f(v) by one leaves u undominated iff nobody else hears it and
    // v no longer reaches it. At f(v) = 1 the lowered v broadcasts nothing.
    const bool still_reached = f[v] > 1 && d <= f[v] - 1;
    if (!shared && !still_reached) s.private_boundary.push_back(u);
  }
  for (auto* set : {&s.neighbourhood, &s.boundary, &s.private_neighbourhood,
                    &s.private_boundary})
    std::sort(set->begin(), set->end());
  return s;
}

std::size_t CoverageReport::max_coverers() const {
  std::size_t m = 0;
  for (const auto& c : edge_coverers) m = std::max(m, c.size());
  return m;
}

CoverageReport coverage_report(const Tree& t, const Broadcast& f) {
  require_bound(t, f);
  const std::size_t n = t.order();
  CoverageReport r;
  r.hearers.resize(n);
  r.overdominated_by.resize(n);
  const auto senders = broadcasters(f);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x : senders) {
      auto d = t.distance(u, x);
      if (d <= f[x]) r.hearers[u].push_back({x, d});
      if (d < f[x]) r.overdominated_by[u].push_back(x);
    }
    if (r.hearers[u].empty()) r.undominated.push_back(u);
  }
  r.edge_coverers.resize(t.edges().size());
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    const auto& e = t.edges()[i];
    for (Vertex x : senders) {
      auto du = t.distance(e.u, x), dv = t.distance(e.v, x);
      const bool both_heard = du <= f[x] && dv <= f[x];
      const bool both_boundary = du == f[x] && dv == f[x];
      if (both_heard && !both_boundary) r.edge_coverers[i].push_back(x);
    }
    if (r.edge_coverers[i].empty()) r.uncovered_edges.push_back(e);
  }
  return r;
}

bool is_dominating(const Tree& t, const Broadcast& f) {
  require_bound(t, f);
  for (Vertex u = 0; u < t.order(); ++u) {
    bool heard = false;
    for (Vertex x = 0; x < t.order() && !heard; ++x)
      heard = f[x] > 0 && t.distance(u, x) <= f[x];
    if (!heard) return false;
  }
  return true;
}

bool is_bn_independent(const Tree& t, const Broadcast& f) {
  require_bound(t, f);
  const auto senders = broadcasters(f);
  for (std::size_t i = 0; i < senders.size(); ++i) {
    for (std::size_t j = i + 1; j < senders.size(); ++j) {
      const Vertex a = senders[i], b = senders[j];
      for (Vertex x = 0; x < t.order(); ++x) {
        const auto da = t.distance(x, a), db = t.distance(x, b);
        if (da <= f[a] && db <= f[b] && (da != f[a] || db != f[b])) return false;
      }
    }
  }
  return true;
}

bool is_h_independent(const Tree& t, const Broadcast& f) {
  require_bound(t, f);
  const auto senders = broadcasters(f);
  for (Vertex u : senders)
    for (Vertex v : senders)
      if (u != v && t.distance(u, v) <= f[v]) return false;
  return true;
}

bool maximal_by_private_boundaries(const Tree& t, const Broadcast& f) {
  if (!is_dominating(t, f)) return false;
  const auto senders = broadcasters(f);
  if (senders.size() == 1) return true;
  for (Vertex v : senders) {
    auto s = f_sets(t, f, v);
    std::vector<Vertex> diff;
    std::set_difference(s.boundary.begin(), s.boundary.end(), s.private_boundary.begin(),
                        s.private_boundary.end(), std::back_inserter(diff));
    if (diff.empty()) return false;
  }
  return true;
}

bool maximal_by_uncovered_components(const Tree& t, const Broadcast& f) {
  require_bound(t, f);
  const std::size_t n = t.order();
  auto report = coverage_report(t, f);
  // Union-find over covered edges.
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < t.edges().size(); ++i) {
    if (report.edge_coverers[i].empty()) continue;
    auto a = find(t.edges()[i].u), b = find(t.edges()[i].v);
    if (a != b) parent[a] = b;
  }
  std::vector<std::size_t> count(n, 0);
  for (Vertex v : broadcasters(f)) ++count[find(v)];
  for (Vertex v = 0; v < n; ++v)
    if (find(v) == v && count[v] < 2) return false;
  return true;
}

bool is_maximal_bn_independent(const Tree& t, const Broadcast& f) {
  if (!is_bn_independent(t, f))
    throw Error(Errc::precondition, "maximality is only defined for bn-independent broadcasts");
  const bool by_boundaries = maximal_by_private_boundaries(t, f);
  if (broadcasters(f).size() >= 2 && by_boundaries != maximal_by_uncovered_components(t, f))
    throw std::logic_error("maximality criteria disagree on " + to_text(f));
  return by_boundaries;
}

namespace {

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

Broadcast parse_broadcast(const Tree& t, std::string_view text) {
  std::vector<std::uint32_t> values(t.order(), 0);
  std::vector<bool> seen(t.order(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    std::uint64_t v = 0, value = 0;
    if (!parse_uint(a, v) || !parse_uint(b, value) || (fields >> extra))
      throw ParseError(ParseErrc::malformed,
                       "broadcast line " + std::to_string(lineno) + ": expected 'v value'");
    if (v >= t.order())
      throw ParseError(ParseErrc::vertex_out_of_range,
                       "broadcast line " + std::to_string(lineno) + ": vertex " +
                           std::to_string(v));
    if (seen[v])
      throw ParseError(ParseErrc::duplicate_vertex,
                       "broadcast line " + std::to_string(lineno) + ": vertex " +
                           std::to_string(v));
    seen[v] = true;
    if (value > t.eccentricity(static_cast<Vertex>(v)))
      throw Error(Errc::invalid_argument, "broadcast line " + std::to_string(lineno) + ": f(" +
                                              std::to_string(v) + ") = " +
                                              std::to_string(value) + " exceeds eccentricity " +
                                              std::to_string(t.eccentricity(
                                                  static_cast<Vertex>(v))));
    values[v] = static_cast<std::uint32_t>(value);
  }
  return Broadcast(t, std::move(values));
}

std::string to_text(const Broadcast& f) {
  std::ostringstream out;
  for (Vertex v = 0; v < f.order(); ++v)
    if (f[v] > 0) out << v << ' ' << f[v] << '\n';
  return out.str();
}

}  // namespace treecast
