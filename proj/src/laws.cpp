#include "treecast/laws.hpp"

#include <algorithm>
#include <sstream>

#include "treecast/enumeration.hpp"

namespace treecast {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

std::string witness_text(const Broadcast& f) {
  std::string out = "witness";
  for (Vertex v = 0; v < f.order(); ++v)
    if (f[v]) out += " f(" + vtx(v) + ")=" + std::to_string(f[v]);
  return out;
}

LawReport make_report(std::string law, const Tree& t, Verdict verdict, std::string detail = {},
                      std::optional<Broadcast> certificate = std::nullopt) {
  return {std::move(law), canonical_code(t), verdict, std::move(certificate), std::move(detail)};
}

}  // namespace

std::optional<std::string> leaf_hears_nonleaf(const Tree& t, const Broadcast& f) {
  for (Vertex l = 0; l < t.order(); ++l) {
    if (!t.is_leaf(l)) continue;
    for (Vertex v = 0; v < t.order(); ++v)
      if (f[v] > 0 && !t.is_leaf(v) && t.distance(l, v) <= f[v])
        return "leaf " + vtx(l) + " hears non-leaf " + vtx(v);
  }
  return std::nullopt;
}

std::optional<std::string> heavy_nonleaf(const Tree& t, const Broadcast& f) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (!t.is_leaf(v) && f[v] > 1)
      return "non-leaf " + vtx(v) + " broadcasts at " + std::to_string(f[v]);
  return std::nullopt;
}

std::optional<std::string> heavy_private_boundary(const Tree& t, const Broadcast& f) {
  for (Vertex v : broadcasters(f)) {
    if (f[v] < 2) continue;
    auto s = f_sets(t, f, v);
    if (!s.private_boundary.empty())
      return "broadcaster " + vtx(v) + " of strength " + std::to_string(f[v]) +
             " has private boundary vertex " + vtx(s.private_boundary.front());
  }
  return std::nullopt;
}

std::optional<std::string> leaf_branch_defect(const Tree& t, const StructuralProfile& p,
                                              const Broadcast& f, bool& triggered) {
  for (Vertex l : p.leaves) {
    if (f[l] == 0) continue;
    for (const auto& [w, leaf_set] : p.leaf_sets) {
      if (t.distance(l, w) > f[l]) continue;
      for (Vertex other : leaf_set) {
        if (t.distance(l, other) <= f[l]) continue;
        triggered = true;
        const std::string where = "leaf " + vtx(l) + " dominates branch vertex " + vtx(w) +
                                  "; leaf " + vtx(other);
        if (f[other] == 0) return where + " does not broadcast";
        bool found = false;
        for (Vertex b : t.path(other, w)) {
          if (t.distance(l, b) == f[l] && f[other] == t.distance(b, other)) {
            found = true;
            break;
          }
        }
        if (!found) return where + " has no boundary vertex of " + vtx(l) + " at its own range";
      }
    }
  }
  return std::nullopt;
}

bool has_leaves_from_two_branches(const StructuralProfile& p, const Broadcast& f) {
  std::size_t owners = 0;
  for (const auto& [w, leaf_set] : p.leaf_sets) {
    if (std::any_of(leaf_set.begin(), leaf_set.end(), [&](Vertex l) { return f[l] > 0; }))
      ++owners;
  }
  return owners >= 2;
}

std::size_t overdominated_branch_count(const Tree& t, const StructuralProfile& p,
                                       const Broadcast& f) {
  const auto senders = broadcasters(f);
  return static_cast<std::size_t>(
      std::count_if(p.branch_vertices.begin(), p.branch_vertices.end(), [&](Vertex w) {
        return std::any_of(senders.begin(), senders.end(),
                           [&](Vertex v) { return t.distance(w, v) < f[v]; });
      }));
}

std::optional<std::string> branch_overdomination_defect(const Tree& t, const StructuralProfile& p,
                                                        const Broadcast& f) {
  const auto on_endpath = p.endpath_interior_mask(t.order());
  for (Vertex l : p.leaves) {
    if (f[l] == 0) continue;
    std::vector<Vertex> X;
    for (Vertex w : p.branch_vertices)
      if (t.distance(l, w) < f[l]) X.push_back(w);
    if (X.empty()) continue;
    std::vector<Vertex> boundary;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.distance(l, v) == f[l]) boundary.push_back(v);
    for (Vertex v : boundary)
      if (on_endpath[v])
        return "leaf " + vtx(l) + " has boundary vertex " + vtx(v) + " on an endpath";

    const auto by = [&](Vertex w) { return static_cast<std::int64_t>(f[l]) - t.distance(l, w); };
    bool clause_i = false;
    for (Vertex w : X) {
      if (by(w) != 1) continue;
      const auto& own = p.leaf_sets.at(w);
      const bool sole = own.size() == 1 && own.front() == l && X.size() == 1;
      const bool bare = own.empty() && std::all_of(X.begin(), X.end(), [&](Vertex x) {
                          return x == w || by(x) >= 3;
                        });
      if (sole || bare) {
        clause_i = true;
        break;
      }
    }
    const bool clause_ii = boundary.size() == 1 &&
                           std::all_of(X.begin(), X.end(), [&](Vertex w) { return by(w) >= 3; });
    if (!clause_i && !clause_ii)
      return "leaf " + vtx(l) + " overdominates branch vertices without meeting either clause";
  }
  return std::nullopt;
}

LawReport check_lemma_hear1(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "lemma_hear1";
  if (optima.empty()) return make_report(law, t, Verdict::inapplicable, "no optima supplied");
  for (const auto& f : optima)
    if (auto defect = leaf_hears_nonleaf(t, f))
      return make_report(law, t, Verdict::violated, *defect, f);
  return make_report(law, t, Verdict::holds,
                     "all " + std::to_string(optima.size()) + " optima");
}

LawReport check_lemma_nonleaf1(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "lemma_nonleaf1";
  if (optima.empty()) return make_report(law, t, Verdict::inapplicable, "no optima supplied");
  for (const auto& f : optima)
    if (!heavy_nonleaf(t, f)) return make_report(law, t, Verdict::holds, witness_text(f));
  return make_report(law, t, Verdict::violated, "every optimum has a non-leaf above strength 1",
                     optima.front());
}

LawReport check_lemma_pb_empty(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "lemma_pb_empty";
  if (optima.empty()) return make_report(law, t, Verdict::inapplicable, "no optima supplied");
  std::size_t most = 0;
  for (const auto& f : optima) most = std::max(most, strength_one_count(f));
  bool exercised = false;
  for (const auto& f : optima) {
    if (strength_one_count(f) != most) continue;
    const auto senders = broadcasters(f);
    if (std::any_of(senders.begin(), senders.end(), [&](Vertex v) { return f[v] >= 2; }))
      exercised = true;
    if (auto defect = heavy_private_boundary(t, f))
      return make_report(law, t, Verdict::violated, *defect, f);
  }
  if (!exercised)
    return make_report(law, t, Verdict::inapplicable,
                       "no strength >= 2 broadcaster among optima with most strength-1 broadcasters");
  return make_report(law, t, Verdict::holds);
}

LawReport check_lemma_leaf_branch(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "lemma_leaf_branch";
  const auto p = profile(t);
  if (p.b == 0) return make_report(law, t, Verdict::inapplicable, "no branch vertices");
  bool triggered = false;
  for (const auto& f : optima)
    if (auto defect = leaf_branch_defect(t, p, f, triggered))
      return make_report(law, t, Verdict::violated, *defect, f);
  if (!triggered)
    return make_report(law, t, Verdict::inapplicable,
                       "no leaf dominates a branch vertex while missing one of its leaves");
  return make_report(law, t, Verdict::holds);
}

LawReport check_lemma_2lb(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "lemma_2lb";
  const auto p = profile(t);
  if (p.b < 2) return make_report(law, t, Verdict::inapplicable, "fewer than two branch vertices");
  for (const auto& f : optima)
    if (has_leaves_from_two_branches(p, f)) return make_report(law, t, Verdict::holds, witness_text(f));
  return make_report(law, t, Verdict::violated,
                     "no optimum has broadcasting leaves under two branch vertices",
                     optima.empty() ? std::nullopt : std::optional<Broadcast>(optima.front()));
}

LawReport check_cor_branch(const Tree& t, std::span<const Broadcast> optima) {
  const char* law = "cor_branch";
  const auto p = profile(t);
  if (p.b < 2) return make_report(law, t, Verdict::inapplicable, "fewer than two branch vertices");
  std::vector<const Broadcast*> family;
  for (const auto& f : optima)
    if (!heavy_nonleaf(t, f)) family.push_back(&f);
  if (family.empty())
    return make_report(law, t, Verdict::violated,
                       "no optimum keeps non-leaf strengths at most 1",
                       optima.empty() ? std::nullopt : std::optional<Broadcast>(optima.front()));
  std::size_t fewest = t.order();
  for (const auto* f : family) fewest = std::min(fewest, overdominated_branch_count(t, p, *f));
  std::optional<std::string> first_defect;
  const Broadcast* first_minimizer = nullptr;
  for (const auto* f : family) {
    if (overdominated_branch_count(t, p, *f) != fewest) continue;
    auto defect = branch_overdomination_defect(t, p, *f);
    if (!defect)
      return make_report(law, t, Verdict::holds,
                         std::to_string(fewest) + " overdominated branch vertices; " + witness_text(*f));
    if (!first_minimizer) {
      first_minimizer = f;
      first_defect = defect;
    }
  }
  return make_report(law, t, Verdict::violated, *first_defect, *first_minimizer);
}

namespace {

template <typename Check>
LawReport with_optima(const Tree& t, Check check) {
  const auto optima = enumerate_optimal_broadcasts(t);
  return check(t, std::span<const Broadcast>(optima));
}

}  // namespace

LawReport check_lemma_hear1(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_lemma_hear1(tr, o); });
}
LawReport check_lemma_nonleaf1(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_lemma_nonleaf1(tr, o); });
}
LawReport check_lemma_pb_empty(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_lemma_pb_empty(tr, o); });
}
LawReport check_lemma_leaf_branch(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_lemma_leaf_branch(tr, o); });
}
LawReport check_lemma_2lb(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_lemma_2lb(tr, o); });
}
LawReport check_cor_branch(const Tree& t) {
  return with_optima(t, [](const Tree& tr, auto o) { return check_cor_branch(tr, o); });
}

LawReport check_theorem_bound(const Tree& t, const SolveResult& result) {
  const auto p = profile(t);
  const auto bound = static_cast<std::int64_t>(t.order() - p.b + p.rho);
  const auto value = static_cast<std::int64_t>(result.value);
  std::string detail = std::to_string(value) + " <= " + std::to_string(bound);
  if (value > bound) return make_report("theorem_bound", t, Verdict::violated,
                                        "alpha_bn " + std::to_string(value) + " > " +
                                            std::to_string(bound),
                                        result.witness);
  return make_report("theorem_bound", t, Verdict::holds,
                     value == bound ? detail + " (tight)" : detail);
}

LawReport check_observation_diam(const Tree& t) {
  const auto p = profile(t);
  const auto limit = static_cast<std::int64_t>(t.order()) - static_cast<std::int64_t>(p.b) - 1;
  const auto diam = static_cast<std::int64_t>(t.diameter());
  const std::string detail = std::to_string(diam) + " <= " + std::to_string(limit);
  if (diam > limit) return make_report("observation_diam", t, Verdict::violated, detail);
  return make_report("observation_diam", t, Verdict::holds,
                     diam == limit ? detail + " (tight)" : detail);
}

std::vector<LawReport> check_all_laws(const Tree& t) {
  std::vector<LawReport> out;
  const char* optima_laws[] = {"lemma_hear1",       "lemma_nonleaf1", "lemma_pb_empty",
                               "lemma_leaf_branch", "lemma_2lb",      "cor_branch"};
  if (t.order() < 2 || t.order() > OracleLimits::optima) {
    const std::string why = t.order() < 2 ? "trivial tree"
                                          : "n exceeds the optima enumeration limit of " +
                                                std::to_string(OracleLimits::optima);
    for (const char* law : optima_laws) out.push_back(make_report(law, t, Verdict::inapplicable, why));
  } else {
    const auto optima = enumerate_optimal_broadcasts(t);
    const std::span<const Broadcast> o(optima);
    out.push_back(check_lemma_hear1(t, o));
    out.push_back(check_lemma_nonleaf1(t, o));
    out.push_back(check_lemma_pb_empty(t, o));
    out.push_back(check_lemma_leaf_branch(t, o));
    out.push_back(check_lemma_2lb(t, o));
    out.push_back(check_cor_branch(t, o));
  }
  if (t.order() >= 2)
    out.push_back(check_theorem_bound(t, alpha_bn(t)));
  else
    out.push_back(make_report("theorem_bound", t, Verdict::inapplicable, "trivial tree"));
  out.push_back(check_observation_diam(t));
  return out;
}

std::string law_table(std::span<const LawReport> reports, bool csv) {
  std::ostringstream out;
  auto one_line = [](std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  if (csv) {
    out << "tree,law,verdict,detail\n";
    for (const auto& r : reports) {
      auto detail = one_line(r.detail);
      for (std::size_t i = 0; (i = detail.find('"', i)) != std::string::npos; i += 2)
        detail.insert(i, 1, '"');
      out << r.tree_id << ',' << r.law << ',' << to_string(r.verdict) << ",\"" << detail
          << "\"\n";
    }
    return out.str();
  }
  for (const auto& r : reports) {
    out << r.tree_id << "  " << r.law;
    for (std::size_t pad = r.law.size(); pad < 18; ++pad) out << ' ';
    out << to_string(r.verdict);
    if (!r.detail.empty()) out << "  " << one_line(r.detail);
    out << '\n';
  }
  return out.str();
}

}  // namespace treecast
