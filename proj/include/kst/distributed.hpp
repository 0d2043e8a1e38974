#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kst/classifiers.hpp"
#include "kst/delineation.hpp"
#include "kst/multimap.hpp"
#include "kst/structure.hpp"

namespace kst {

// --- restrictions -----------------------------------------------------------

struct RestrictionResult {
    FuzzySkillMultimap multimap; // over the surviving skills, original order
    bool dropped_any = false;
    // (item, competency over the original domain) pairs that masked to zero.
    std::vector<std::pair<std::string, std::string>> dropped;
};

// Mask every competency to the given skills and drop the ones that become
// zero. A family losing all its members is an error.
RestrictionResult zero_restrict(const FuzzySkillMultimap& mm,
                                const std::vector<std::string>& keep_skills);

// The multimap induced on a subset of the items: same skills, same families.
FuzzySkillMultimap submultimap(const FuzzySkillMultimap& mm,
                               const std::vector<std::string>& keep_items);

// Re-base a multimap onto a wider skill domain, padding grades with zeros.
// Every original skill must appear in the target domain.
FuzzySkillMultimap extend_by_zeros(const FuzzySkillMultimap& mm,
                                   const SkillDomain& target);

// --- merging -----------------------------------------------------------------

struct MergePart {
    FuzzySkillMultimap original;          // (Q_i, S_i, mu_i) as supplied
    std::vector<std::size_t> item_index;  // part item -> merged item index
    StateMask items_mask = 0;             // Q_i inside the merged item list
    FuzzySet skill_mask;                  // grade 1 on S_i, 0 elsewhere
    // mu*_i: the part families re-based onto the merged domain, aligned with
    // the part's own item order.
    std::vector<std::vector<FuzzySet>> extended;
};

struct MergeResult {
    FuzzySkillMultimap merged;
    std::vector<MergePart> parts;
    bool distributed = false; // merged multimap is a fuzzy skill function
};

// Merge parts over the union of their items and skills; items shared between
// parts pool their families. Parts must be fuzzy skill functions unless
// permissive is set.
MergeResult merge(const std::vector<FuzzySkillMultimap>& parts, bool permissive = false);

// Problem function of one component (Q_i, mu*_i) at T (over the merged
// domain); the result only has bits inside the part's items_mask.
StateMask component_problem_function(const MergeResult& mr, std::size_t part,
                                     const FuzzySet& T);

// --- meshing and consistency --------------------------------------------------

struct MeshCheck {
    bool items_cover = false;          // union of part items == parent items
    std::vector<bool> part_matches;    // part structure == parent trace, by name
    std::vector<std::string> mismatch; // description per failing part
    bool mesh() const;
};

// Whether the parent structure is a mesh of the part structures: the parent
// items are exactly the union of part items and every part equals the
// parent's trace on that part's items.
MeshCheck mesh_check(const KnowledgeStructure& parent,
                     const std::vector<KnowledgeStructure>& parts);
bool is_mesh(const KnowledgeStructure& parent,
             const std::vector<KnowledgeStructure>& parts);

struct MergeAnalysis {
    DelineationResult merged;
    std::vector<DelineationResult> parts; // each over its own domain
};

MergeAnalysis analyze_merge(const MergeResult& mr, const DelineationOptions& opts = {});

struct ConsistencyReport {
    bool consistent = false; // merged delineation is a mesh of part delineations
    MeshCheck mesh;
};

ConsistencyReport check_consistency(const MergeResult& mr, const MergeAnalysis& an);

// --- component conditions ------------------------------------------------------

// Per component: a merged competency of a part item supported inside the
// part's skills belongs to that part, equivalently the component problem
// function agrees with the merged one on sets below the part's skill mask.
// Either form makes the part's structure a substructure of the merged trace.
ConditionReport component_competency_condition(const MergeResult& mr,
                                               const MergeAnalysis& an);

// Per component: part items keep all their merged competencies inside the
// part's skills, equivalently masking T to the part's skills never changes
// the merged problem function on part items.
ConditionReport component_support_condition(const MergeResult& mr,
                                            const MergeAnalysis& an);

} // namespace kst
