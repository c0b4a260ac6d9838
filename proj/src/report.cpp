#include "treecast/report.hpp"

#include <sstream>

#include "json.hpp"
#include "treecast/enumeration.hpp"

namespace treecast {

std::string profile_json(const Tree& t) {
  const auto p = profile(t);
  nlohmann::ordered_json j;
  j["id"] = canonical_code(t);
  j["n"] = t.order();
  j["class"] = std::string(to_string(classify(t)));
  j["is_path"] = p.is_path;
  j["leaves"] = p.leaves;
  j["stems"] = p.stems;
  j["branch_vertices"] = p.branch_vertices;
  j["b"] = p.b;
  auto& ls = j["leaf_sets"] = nlohmann::ordered_json::object();
  for (const auto& [v, leaves] : p.leaf_sets) ls[std::to_string(v)] = leaves;
  j["R"] = p.R;
  j["rho"] = p.rho;
  j["B_end"] = p.B_end;
  auto& bc = j["B_by_count"] = nlohmann::ordered_json::object();
  for (const auto& [i, vs] : p.B_by_count) bc[std::to_string(i)] = vs;
  j["W_ext"] = p.W_ext;
  j["W_int"] = p.W_int;
  j["endpaths"] = p.endpaths;
  return j.dump(2) + "\n";
}

BroadcastCheck check_broadcast(const Tree& t, const Broadcast& f) {
  BroadcastCheck c;
  c.weight = weight(f);
  c.dominating = is_dominating(t, f);
  c.bn_independent = is_bn_independent(t, f);
  c.h_independent = is_h_independent(t, f);
  if (c.bn_independent) c.maximal = is_maximal_bn_independent(t, f);
  const auto cov = coverage_report(t, f);
  c.uncovered_edges = cov.uncovered_edges.size();
  c.max_edge_coverers = cov.max_coverers();
  return c;
}

std::string check_text(const Tree& t, const Broadcast& f, const BroadcastCheck& c) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "weight = " << c.weight << "\n"
     << "broadcasters = " << broadcasters(f).size() << "\n"
     << "dominating = " << yn(c.dominating) << "\n"
     << "bn_independent = " << yn(c.bn_independent) << "\n"
     << "h_independent = " << yn(c.h_independent) << "\n";
  if (c.bn_independent) os << "maximal = " << yn(c.maximal) << "\n";
  os << "uncovered_edges = " << c.uncovered_edges << "\n"
     << "max_edge_coverers = " << c.max_edge_coverers << "\n";
  if (!c.bn_independent) {
    const auto cov = coverage_report(t, f);
    for (Vertex u = 0; u < t.order(); ++u)
      for (const auto& h : cov.hearers[u])
        if (cov.hearers[u].size() > 1 && h.distance < f[h.broadcaster])
          os << "conflict: vertex " << u << " is heard by several broadcasters and lies inside "
             << h.broadcaster << "'s ball\n";
  }
  return os.str();
}

std::string to_dot(const Tree& t, const std::optional<Broadcast>& f) {
  std::ostringstream os;
  os << "graph T {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < t.order(); ++v) {
    os << "  " << v;
    if (f && (*f)[v] > 0)
      os << " [style=filled, fillcolor=lightgrey, label=\"" << v << ":" << (*f)[v] << "\"]";
    os << ";\n";
  }
  std::optional<CoverageReport> cov;
  if (f) cov = coverage_report(t, *f);
  const auto edges = t.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << "  " << edges[i].u << " -- " << edges[i].v;
    if (cov) {
      const auto& by = cov->edge_coverers[i];
      if (by.empty()) {
        os << " [style=dashed]";
      } else {
        os << " [style=solid, label=\"";
        for (std::size_t k = 0; k < by.size(); ++k) os << (k ? "," : "") << by[k];
        os << "\"]";
      }
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace treecast
