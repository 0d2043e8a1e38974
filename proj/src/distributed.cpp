#include "kst/distributed.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "kst/error.hpp"

namespace kst {

namespace {

Verdict as_verdict(bool b) { return b ? Verdict::True : Verdict::False; }

// Map the states of `from` into the item positions of `to` (same item names,
// possibly different order), sorted canonically.
std::vector<StateMask> remap_states(const KnowledgeStructure& from,
                                    const KnowledgeStructure& to) {
    std::vector<std::size_t> pos(from.item_count());
    for (std::size_t i = 0; i < from.item_count(); ++i) {
        auto j = to.item_index(from.items()[i]);
        detail::require(j.has_value(), "remap_states: item sets differ");
        pos[i] = *j;
    }
    std::vector<StateMask> out;
    out.reserve(from.state_count());
    for (StateMask s : from.states()) {
        StateMask t = 0;
        for (std::size_t i = 0; i < from.item_count(); ++i) {
            if (s >> i & 1) t |= StateMask{1} << pos[i];
        }
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), state_less);
    return out;
}

} // namespace

RestrictionResult zero_restrict(const FuzzySkillMultimap& mm,
                                const std::vector<std::string>& keep_skills) {
    if (keep_skills.empty()) {
        throw InputError("zero_restrict: the skill subset must be non-empty");
    }
    std::vector<bool> keep(mm.skill_count(), false);
    for (const std::string& name : keep_skills) {
        auto i = mm.skills().index_of(name);
        if (!i) throw InputError("zero_restrict: unknown skill: " + name);
        keep[*i] = true;
    }
    std::vector<std::string> kept_names;
    std::vector<std::size_t> kept_idx;
    for (std::size_t s = 0; s < mm.skill_count(); ++s) {
        if (keep[s]) {
            kept_names.push_back(mm.skills().name(s));
            kept_idx.push_back(s);
        }
    }
    RestrictionResult out;
    std::vector<std::vector<FuzzySet>> families;
    families.reserve(mm.item_count());
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        std::vector<FuzzySet> fam;
        for (const FuzzySet& c : mm.family(q)) {
            std::vector<Grade> grades;
            grades.reserve(kept_idx.size());
            for (std::size_t s : kept_idx) grades.push_back(c.grade(s));
            FuzzySet masked{std::move(grades)};
            if (masked.is_zero()) {
                out.dropped_any = true;
                out.dropped.emplace_back(mm.item(q), c.str(mm.skills()));
            } else {
                fam.push_back(std::move(masked));
            }
        }
        if (fam.empty()) {
            throw InputError("zero_restrict: the family of " + mm.item(q) +
                             " collapses to zero");
        }
        families.push_back(std::move(fam));
    }
    out.multimap = FuzzySkillMultimap::create(mm.items(), SkillDomain(kept_names),
                                              std::move(families));
    return out;
}

FuzzySkillMultimap submultimap(const FuzzySkillMultimap& mm,
                               const std::vector<std::string>& keep_items) {
    if (keep_items.empty()) {
        throw InputError("submultimap: the item subset must be non-empty");
    }
    std::vector<std::string> items;
    std::vector<std::vector<FuzzySet>> families;
    std::unordered_set<std::string> seen;
    for (const std::string& name : keep_items) {
        auto i = mm.item_index(name);
        if (!i) throw InputError("submultimap: unknown item: " + name);
        if (!seen.insert(name).second) {
            throw InputError("submultimap: duplicate item: " + name);
        }
        items.push_back(name);
        families.push_back(mm.family(*i));
    }
    return FuzzySkillMultimap::create(std::move(items), mm.skills(), std::move(families));
}

FuzzySkillMultimap extend_by_zeros(const FuzzySkillMultimap& mm, const SkillDomain& target) {
    std::vector<std::size_t> pos(mm.skill_count());
    for (std::size_t s = 0; s < mm.skill_count(); ++s) {
        auto t = target.index_of(mm.skills().name(s));
        if (!t) {
            throw InputError("extend_by_zeros: target domain misses skill: " +
                             mm.skills().name(s));
        }
        pos[s] = *t;
    }
    std::vector<std::vector<FuzzySet>> families;
    families.reserve(mm.item_count());
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        std::vector<FuzzySet> fam;
        fam.reserve(mm.family(q).size());
        for (const FuzzySet& c : mm.family(q)) {
            FuzzySet e = FuzzySet::zeros(target.size());
            for (std::size_t s = 0; s < mm.skill_count(); ++s) {
                e.set_grade(pos[s], c.grade(s));
            }
            fam.push_back(std::move(e));
        }
        families.push_back(std::move(fam));
    }
    return FuzzySkillMultimap::create(mm.items(), target, std::move(families));
}

MergeResult merge(const std::vector<FuzzySkillMultimap>& parts, bool permissive) {
    if (parts.empty()) throw InputError("merge: at least one part is required");

    if (!permissive) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].is_skill_function()) continue;
            // Locate one offending comparable pair for the error message.
            for (std::size_t q = 0; q < parts[i].item_count(); ++q) {
                const auto& fam = parts[i].family(q);
                for (std::size_t a = 0; a < fam.size(); ++a) {
                    for (std::size_t b = 0; b < fam.size(); ++b) {
                        if (a != b && subseteq(fam[a], fam[b])) {
                            throw InputError(
                                "merge: part " + std::to_string(i + 1) +
                                " is not a fuzzy skill function: in the family of " +
                                parts[i].item(q) + ", " + fam[a].str(parts[i].skills()) +
                                " lies below " + fam[b].str(parts[i].skills()));
                        }
                    }
                }
            }
        }
    }

    std::vector<std::string> skill_names;
    std::unordered_set<std::string> skill_seen;
    std::vector<std::string> item_names;
    std::unordered_set<std::string> item_seen;
    for (const FuzzySkillMultimap& part : parts) {
        for (const std::string& s : part.skills().names()) {
            if (skill_seen.insert(s).second) skill_names.push_back(s);
        }
        for (const std::string& q : part.items()) {
            if (item_seen.insert(q).second) item_names.push_back(q);
        }
    }
    const SkillDomain merged_skills{skill_names};
    auto merged_item = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(item_names.begin(), item_names.end(), name) - item_names.begin());
    };

    MergeResult out;
    std::vector<std::vector<FuzzySet>> families(item_names.size());
    for (const FuzzySkillMultimap& part : parts) {
        MergePart mp;
        mp.original = part;
        mp.skill_mask = FuzzySet::zeros(merged_skills.size());
        std::vector<std::size_t> skill_pos(part.skill_count());
        for (std::size_t s = 0; s < part.skill_count(); ++s) {
            skill_pos[s] = *merged_skills.index_of(part.skills().name(s));
            mp.skill_mask.set_grade(skill_pos[s], Grade::from_ratio(1, 1));
        }
        for (std::size_t j = 0; j < part.item_count(); ++j) {
            const std::size_t k = merged_item(part.item(j));
            mp.item_index.push_back(k);
            mp.items_mask |= StateMask{1} << k;
            std::vector<FuzzySet> ext;
            ext.reserve(part.family(j).size());
            for (const FuzzySet& c : part.family(j)) {
                FuzzySet e = FuzzySet::zeros(merged_skills.size());
                for (std::size_t s = 0; s < part.skill_count(); ++s) {
                    e.set_grade(skill_pos[s], c.grade(s));
                }
                ext.push_back(std::move(e));
            }
            canonicalize_family(ext);
            families[k].insert(families[k].end(), ext.begin(), ext.end());
            mp.extended.push_back(std::move(ext));
        }
        out.parts.push_back(std::move(mp));
    }
    out.merged = FuzzySkillMultimap::create(item_names, merged_skills, std::move(families));
    out.distributed = out.merged.is_skill_function();
    return out;
}

StateMask component_problem_function(const MergeResult& mr, std::size_t part,
                                     const FuzzySet& T) {
    detail::require(part < mr.parts.size(), "component_problem_function: part out of range");
    detail::require(T.size() == mr.merged.skill_count(),
                    "component_problem_function: fuzzy set width mismatch");
    const MergePart& mp = mr.parts[part];
    StateMask out = 0;
    for (std::size_t j = 0; j < mp.extended.size(); ++j) {
        for (const FuzzySet& c : mp.extended[j]) {
            if (subseteq(c, T)) {
                out |= StateMask{1} << mp.item_index[j];
                break;
            }
        }
    }
    return out;
}

bool MeshCheck::mesh() const {
    if (!items_cover) return false;
    return std::all_of(part_matches.begin(), part_matches.end(), [](bool b) { return b; });
}

MeshCheck mesh_check(const KnowledgeStructure& parent,
                     const std::vector<KnowledgeStructure>& parts) {
    MeshCheck mc;
    std::set<std::string> union_names;
    for (const KnowledgeStructure& part : parts) {
        union_names.insert(part.items().begin(), part.items().end());
    }
    const std::set<std::string> parent_names(parent.items().begin(), parent.items().end());
    mc.items_cover = union_names == parent_names;

    for (const KnowledgeStructure& part : parts) {
        bool ok = true;
        std::string why;
        StateMask keep = 0;
        for (const std::string& name : part.items()) {
            auto b = parent.item_index(name);
            if (!b) {
                ok = false;
                why = "item " + name + " is not a parent item";
                break;
            }
            keep |= StateMask{1} << *b;
        }
        if (ok) {
            const KnowledgeStructure tr = parent.trace(keep);
            const std::vector<StateMask> remapped = remap_states(part, tr);
            if (remapped != tr.states()) {
                ok = false;
                for (StateMask s : tr.states()) {
                    if (!std::binary_search(remapped.begin(), remapped.end(), s, state_less)) {
                        why = "parent trace state " + mask_to_string(s, tr.items()) +
                              " is not a part state";
                        break;
                    }
                }
                if (why.empty()) {
                    for (StateMask s : remapped) {
                        if (!tr.contains(s)) {
                            why = "part state " + mask_to_string(s, tr.items()) +
                                  " is not a parent trace state";
                            break;
                        }
                    }
                }
            }
        }
        mc.part_matches.push_back(ok);
        mc.mismatch.push_back(why);
    }
    return mc;
}

bool is_mesh(const KnowledgeStructure& parent,
             const std::vector<KnowledgeStructure>& parts) {
    return mesh_check(parent, parts).mesh();
}

MergeAnalysis analyze_merge(const MergeResult& mr, const DelineationOptions& opts) {
    MergeAnalysis an;
    an.merged = delineate(mr.merged, opts);
    an.parts.reserve(mr.parts.size());
    for (const MergePart& mp : mr.parts) {
        an.parts.push_back(delineate(mp.original, opts));
    }
    return an;
}

ConsistencyReport check_consistency(const MergeResult& mr, const MergeAnalysis& an) {
    detail::require(an.parts.size() == mr.parts.size(),
                    "check_consistency: analysis does not match the merge");
    ConsistencyReport rep;
    std::vector<KnowledgeStructure> part_structures;
    part_structures.reserve(an.parts.size());
    for (const DelineationResult& dr : an.parts) part_structures.push_back(dr.structure);
    rep.mesh = mesh_check(an.merged.structure, part_structures);
    rep.consistent = rep.mesh.mesh();
    return rep;
}

ConditionReport component_competency_condition(const MergeResult& mr,
                                               const MergeAnalysis& an) {
    detail::require(an.parts.size() == mr.parts.size(),
                    "component_competency_condition: analysis does not match the merge");
    ConditionReport rep;
    rep.id = "component_competency_condition";
    rep.hypothesis_met = mr.distributed;
    if (!rep.hypothesis_met) {
        rep.note = "the merged multimap is not a fuzzy skill function";
    }

    bool all_membership = true;
    bool all_p_equal = true;
    for (std::size_t i = 0; i < mr.parts.size(); ++i) {
        const MergePart& mp = mr.parts[i];
        const std::string tag = "part" + std::to_string(i + 1);

        bool membership = true;
        for (std::size_t j = 0; j < mp.item_index.size() && membership; ++j) {
            const auto& merged_fam = mr.merged.family(mp.item_index[j]);
            for (const FuzzySet& c : merged_fam) {
                if (!subseteq(c, mp.skill_mask)) continue;
                if (std::find(mp.extended[j].begin(), mp.extended[j].end(), c) ==
                    mp.extended[j].end()) {
                    membership = false;
                    if (rep.witness.empty()) {
                        rep.witness = tag + ": " + c.str(mr.merged.skills()) +
                                      " of " + mr.merged.item(mp.item_index[j]) +
                                      " is supported in the part but not one of its competencies";
                    }
                    break;
                }
            }
        }

        std::vector<FuzzySet> masked_pool;
        for (const FuzzySet& c : mr.merged.pool()) {
            if (subseteq(c, mp.skill_mask)) masked_pool.push_back(c);
        }
        bool p_equal = true;
        for (const FuzzySet& u : subset_joins(masked_pool, mr.merged.skill_count())) {
            const StateMask lhs = component_problem_function(mr, i, u);
            const StateMask rhs = problem_function(mr.merged, u) & mp.items_mask;
            if (lhs != rhs) {
                p_equal = false;
                break;
            }
        }

        const KnowledgeStructure tr = an.merged.structure.trace(mp.items_mask);
        const std::vector<StateMask> remapped = remap_states(an.parts[i].structure, tr);
        bool trace_subset = true;
        for (StateMask s : remapped) {
            if (!tr.contains(s)) {
                trace_subset = false;
                break;
            }
        }

        rep.statements.push_back({tag + "_competency_condition", membership});
        rep.statements.push_back({tag + "_masked_p_equality", p_equal});
        rep.statements.push_back({tag + "_trace_subset", trace_subset});
        all_membership = all_membership && membership;
        all_p_equal = all_p_equal && p_equal;
    }
    rep.oracle = all_p_equal;
    if (rep.hypothesis_met) rep.holds = as_verdict(all_membership);
    return rep;
}

ConditionReport component_support_condition(const MergeResult& mr,
                                            const MergeAnalysis& an) {
    detail::require(an.parts.size() == mr.parts.size(),
                    "component_support_condition: analysis does not match the merge");
    ConditionReport rep;
    rep.id = "component_support_condition";
    rep.hypothesis_met = mr.distributed;
    if (!rep.hypothesis_met) {
        rep.note = "the merged multimap is not a fuzzy skill function";
    }

    const std::vector<FuzzySet> joins =
        subset_joins(mr.merged.pool(), mr.merged.skill_count());

    bool all_support = true;
    bool all_invariant = true;
    for (std::size_t i = 0; i < mr.parts.size(); ++i) {
        const MergePart& mp = mr.parts[i];
        const std::string tag = "part" + std::to_string(i + 1);

        bool support = true;
        for (std::size_t j = 0; j < mp.item_index.size() && support; ++j) {
            for (const FuzzySet& c : mr.merged.family(mp.item_index[j])) {
                if (!subseteq(c, mp.skill_mask)) {
                    support = false;
                    if (rep.witness.empty()) {
                        rep.witness = tag + ": " + c.str(mr.merged.skills()) + " of " +
                                      mr.merged.item(mp.item_index[j]) +
                                      " reaches outside the part's skills";
                    }
                    break;
                }
            }
        }

        bool invariant = true;
        for (const FuzzySet& u : joins) {
            const StateMask lhs =
                problem_function(mr.merged, meet(u, mp.skill_mask)) & mp.items_mask;
            const StateMask rhs = problem_function(mr.merged, u) & mp.items_mask;
            if (lhs != rhs) {
                invariant = false;
                break;
            }
        }

        const KnowledgeStructure tr = an.merged.structure.trace(mp.items_mask);
        const std::vector<StateMask> remapped = remap_states(an.parts[i].structure, tr);
        const bool trace_equal = remapped == tr.states();

        rep.statements.push_back({tag + "_support_condition", support});
        rep.statements.push_back({tag + "_mask_invariance", invariant});
        rep.statements.push_back({tag + "_trace_equality", trace_equal});
        all_support = all_support && support;
        all_invariant = all_invariant && invariant;
    }
    rep.oracle = all_invariant;
    if (rep.hypothesis_met) rep.holds = as_verdict(all_support);
    return rep;
}

} // namespace kst
