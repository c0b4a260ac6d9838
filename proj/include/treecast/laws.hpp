#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecast/broadcast.hpp"
#include "treecast/solvers.hpp"
#include "treecast/structure.hpp"

namespace treecast {

enum class Verdict { holds, violated, inapplicable };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of checking one structural law on one tree. A violated report
/// carries the broadcast that breaks it whenever the law is about broadcasts.
struct LawReport {
  std::string law;
  std::string tree_id;
  Verdict verdict = Verdict::inapplicable;
  std::optional<Broadcast> certificate;
  std::string detail;
};

// Per-broadcast predicates. Each returns a description of the defect, or
// nullopt when the broadcast is fine.

/// A leaf that hears some non-leaf broadcaster.
std::optional<std::string> leaf_hears_nonleaf(const Tree& t, const Broadcast& f);
/// A non-leaf broadcasting with strength above 1.
std::optional<std::string> heavy_nonleaf(const Tree& t, const Broadcast& f);
/// A broadcaster of strength >= 2 with a nonempty private boundary.
std::optional<std::string> heavy_private_boundary(const Tree& t, const Broadcast& f);
/// Breach of the endpath rule for leaves dominating a branch vertex. Sets
/// `triggered` when some (l, w, l') instance was examined.
std::optional<std::string> leaf_branch_defect(const Tree& t, const StructuralProfile& p,
                                              const Broadcast& f, bool& triggered);
/// Broadcasting leaves l in L(w), l' in L(w') for distinct branch vertices.
bool has_leaves_from_two_branches(const StructuralProfile& p, const Broadcast& f);
/// Branch vertices w with d(w, v) < f(v) for some broadcaster v.
std::size_t overdominated_branch_count(const Tree& t, const StructuralProfile& p,
                                       const Broadcast& f);
/// The boundary and strength clauses for leaves that overdominate branch vertices.
std::optional<std::string> branch_overdomination_defect(const Tree& t, const StructuralProfile& p,
                                                        const Broadcast& f);

// Law checkers. The overloads taking `optima` trust the caller to pass the
// full set of maximum-weight bn-independent broadcasts.

LawReport check_lemma_hear1(const Tree& t, std::span<const Broadcast> optima);
LawReport check_lemma_nonleaf1(const Tree& t, std::span<const Broadcast> optima);
LawReport check_lemma_pb_empty(const Tree& t, std::span<const Broadcast> optima);
LawReport check_lemma_leaf_branch(const Tree& t, std::span<const Broadcast> optima);
LawReport check_lemma_2lb(const Tree& t, std::span<const Broadcast> optima);
LawReport check_cor_branch(const Tree& t, std::span<const Broadcast> optima);

LawReport check_lemma_hear1(const Tree& t);
LawReport check_lemma_nonleaf1(const Tree& t);
LawReport check_lemma_pb_empty(const Tree& t);
LawReport check_lemma_leaf_branch(const Tree& t);
LawReport check_lemma_2lb(const Tree& t);
LawReport check_cor_branch(const Tree& t);

LawReport check_theorem_bound(const Tree& t, const SolveResult& result);
LawReport check_observation_diam(const Tree& t);

/// Every checker above on one tree, enumerating optima once. Optima-based
/// laws are reported inapplicable when n exceeds the optima limit.
std::vector<LawReport> check_all_laws(const Tree& t);

std::string law_table(std::span<const LawReport> reports, bool csv);

}  // namespace treecast
