#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kst/delineation.hpp"
#include "kst/multimap.hpp"
#include "kst/structure.hpp"

namespace kst {

enum class Verdict { True, False, NotApplicable };

const char* verdict_name(Verdict v);

struct Statement {
    std::string label;
    bool value = false;
};

// A multimap-side condition evaluated next to the definitional value computed
// on the delineated structure (the oracle). When the hypothesis of the
// underlying characterisation is not met, holds stays NotApplicable and note
// explains why.
struct ConditionReport {
    std::string id;
    bool hypothesis_met = true;
    Verdict holds = Verdict::NotApplicable;
    std::optional<bool> oracle;
    std::vector<Statement> statements;
    std::string witness; // human-readable counterexample for a false verdict
    std::string note;
};

// --- sufficient conditions for closure properties -------------------------

// Every competency has a molecule of the same family below it. Sufficient for
// the delineated structure to be union-closed.
bool molecule_cover_condition(const FuzzySkillMultimap& mm);

// Every two competencies of a family dominate a third one of that family
// (C3 <= C1 meet C2). Sufficient for intersection-closedness.
bool meet_refinement_condition(const FuzzySkillMultimap& mm);

// The states of the images of the minimal competencies form a union base:
// unions of { p(D) : D minimal } give exactly the delineated states.
// Equivalent to union-closedness of the delineated structure.
bool union_base_condition(const FuzzySkillMultimap& mm, const KnowledgeStructure& ks);

// For every item g and every subfamily P of the minimal competencies: if no
// competency of the minimized family of g sits below a member of P, then none
// sits below join(P) either. Sufficient for union-closedness.
bool join_stability_condition(const FuzzySkillMultimap& mm);

struct LearningSpaceConditions {
    bool finite = true;          // item set finite (always, here)
    bool molecule_cover = false; // molecule_cover_condition
    bool chain_condition = false;
    bool all() const { return finite && molecule_cover && chain_condition; }
};

// Conditions sufficient for the delineated structure to be a learning space.
// chain_condition: for every molecule T of the multimap with |[T]| >= 2 some
// subfamily of molecules covers exactly [T] minus one item.
LearningSpaceConditions learning_space_conditions(const FuzzySkillMultimap& mm);

// --- separability characterisations ----------------------------------------

// Family-level comparisons per item pair: mutual non-inclusion, inequality,
// and non-refinement. The refinement form is equivalent to the structure
// being discriminative; the others are necessary, and all four line up when
// the multimap is a fuzzy skill function.
ConditionReport separability_by_families(const FuzzySkillMultimap& mm,
                                         const KnowledgeStructure& ks);

// Distinctness of per-competency minima M(q,C) = min_below(q,C). Requires
// every M(q,C) to exist; otherwise hypothesis_met is false.
ConditionReport separability_by_minima(const FuzzySkillMultimap& mm,
                                       const KnowledgeStructure& ks);

// Bi-discriminative counterpart of separability_by_minima. The refinement
// form of the statement is the one equivalent to the oracle; the equality
// form is recorded but is strictly weaker on some instances.
ConditionReport biseparability_by_minima(const FuzzySkillMultimap& mm,
                                         const KnowledgeStructure& ks);

// Mutual non-refinement of the families of every item pair. Equivalent to
// the structure being bi-discriminative, with no extra hypothesis.
ConditionReport biseparability_by_refinement(const FuzzySkillMultimap& mm,
                                             const KnowledgeStructure& ks);

// When every family has a global minimum M(q): distinctness of the minima
// against discriminative, pairwise incomparability against bi-discriminative.
// The report flags instances where the claimed four-way equivalence breaks.
ConditionReport separability_by_global_minima(const FuzzySkillMultimap& mm,
                                              const KnowledgeStructure& ks);

// --- fringe witnesses -------------------------------------------------------

// A molecule m in mu(q) with [m] \ K == {q}, if one exists. Under
// molecule_cover_condition its existence is equivalent to q lying in the
// outer fringe of K. Requires K to be a state and q outside K.
std::optional<FuzzySet> outer_fringe_witness(const FuzzySkillMultimap& mm,
                                             const KnowledgeStructure& ks,
                                             StateMask K, std::size_t q);

// For r in K: one molecule per item q of K\{r} with [m_q] <= K\{r}, if such
// a choice exists. Under molecule_cover_condition its existence is
// equivalent to r lying in the inner fringe of K.
std::optional<std::vector<std::pair<std::size_t, FuzzySet>>>
inner_fringe_witness(const FuzzySkillMultimap& mm, const KnowledgeStructure& ks,
                     StateMask K, std::size_t r);

} // namespace kst
