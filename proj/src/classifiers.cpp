#include "kst/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

#include "kst/error.hpp"

namespace kst {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::NotApplicable: return "n/a";
    }
    return "n/a";
}

namespace {

Verdict as_verdict(bool b) { return b ? Verdict::True : Verdict::False; }

// True when every member of a also belongs to b (families are canonical and
// duplicate-free, so membership scanning is enough).
bool family_subset(const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b) {
    for (const FuzzySet& x : a) {
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    }
    return true;
}

// X is not refined by the set: no member of vs lies below X.
bool not_refined_by(const FuzzySet& x, const std::vector<FuzzySet>& vs) {
    for (const FuzzySet& v : vs) {
        if (subseteq(v, x)) return false;
    }
    return true;
}

std::string pair_text(const FuzzySkillMultimap& mm, std::size_t q, std::size_t r) {
    return "(" + mm.item(q) + ", " + mm.item(r) + ")";
}

// Per-competency minima M(q,C) for every family member, or nullopt at the
// first (q, C) without one.
struct MinimaTable {
    bool complete = true;
    std::string missing; // description of the first missing minimum
    std::vector<std::vector<FuzzySet>> m; // aligned with mm.family(q)
};

MinimaTable competency_minima(const FuzzySkillMultimap& mm) {
    MinimaTable t;
    t.m.resize(mm.item_count());
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (const FuzzySet& c : mm.family(q)) {
            auto m = mm.min_below(q, c);
            if (!m) {
                t.complete = false;
                t.missing = "no minimum below " + c.str(mm.skills()) +
                            " within the family of " + mm.item(q);
                return t;
            }
            t.m[q].push_back(*m);
        }
    }
    return t;
}

} // namespace

bool molecule_cover_condition(const FuzzySkillMultimap& mm) {
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        const auto& fam = mm.family(q);
        for (const FuzzySet& c : fam) {
            bool covered = false;
            for (const FuzzySet& m : fam) {
                if (m.is_molecule() && subseteq(m, c)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
    }
    return true;
}

bool meet_refinement_condition(const FuzzySkillMultimap& mm) {
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        const auto& fam = mm.family(q);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                const FuzzySet low = meet(fam[i], fam[j]);
                bool dominated = false;
                for (const FuzzySet& c : fam) {
                    if (subseteq(c, low)) {
                        dominated = true;
                        break;
                    }
                }
                if (!dominated) return false;
            }
        }
    }
    return true;
}

bool union_base_condition(const FuzzySkillMultimap& mm, const KnowledgeStructure& ks) {
    detail::require(mm.item_count() == ks.item_count(),
                    "union_base_condition: item count mismatch");
    const FuzzySkillMultimap minimized = mm.minimized();
    std::set<StateMask> closure{0};
    for (const FuzzySet& d : minimized.pool()) {
        const StateMask base = problem_function(mm, d);
        std::vector<StateMask> extra;
        for (StateMask u : closure) extra.push_back(u | base);
        closure.insert(extra.begin(), extra.end());
    }
    // Both directions of the condition at once: every state is a union of
    // base members, and every union of base members is a state.
    if (closure.size() != ks.state_count()) return false;
    for (StateMask u : closure) {
        if (!ks.contains(u)) return false;
    }
    return true;
}

bool join_stability_condition(const FuzzySkillMultimap& mm) {
    const FuzzySkillMultimap minimized = mm.minimized();
    const std::vector<FuzzySet> pool = minimized.pool();
    // covers[d] = items with a minimized competency below pool member d.
    std::vector<StateMask> covers(pool.size(), 0);
    for (std::size_t d = 0; d < pool.size(); ++d) {
        covers[d] = problem_function(minimized, pool[d]);
    }
    bool stable = true;
    // Every subfamily P once: running join plus the set of items already
    // covered by an individual member of P. Skipping the include branch when
    // it cannot change the join is sound, because extra coverage only ever
    // removes violations.
    std::function<void(std::size_t, const FuzzySet&, StateMask)> walk =
        [&](std::size_t idx, const FuzzySet& acc, StateMask covered) {
            if (!stable) return;
            if (idx == pool.size()) {
                const StateMask reached = problem_function(minimized, acc);
                if ((reached & ~covered) != 0) stable = false;
                return;
            }
            walk(idx + 1, acc, covered);
            if (!subseteq(pool[idx], acc)) {
                walk(idx + 1, join(acc, pool[idx]), covered | covers[idx]);
            }
        };
    walk(0, FuzzySet::zeros(mm.skill_count()), 0);
    return stable;
}

LearningSpaceConditions learning_space_conditions(const FuzzySkillMultimap& mm) {
    LearningSpaceConditions out;
    out.finite = true;
    out.molecule_cover = molecule_cover_condition(mm);

    std::vector<FuzzySet> molecules;
    for (const FuzzySet& c : mm.pool()) {
        if (c.is_molecule()) molecules.push_back(c);
    }
    std::vector<StateMask> brackets(molecules.size(), 0);
    for (std::size_t d = 0; d < molecules.size(); ++d) {
        brackets[d] = problem_function(mm, molecules[d]);
    }
    out.chain_condition = true;
    for (std::size_t t = 0; t < molecules.size() && out.chain_condition; ++t) {
        const StateMask bt = brackets[t];
        if (std::popcount(bt) < 2) continue;
        bool reachable = false;
        for (std::size_t x = 0; x < mm.item_count() && !reachable; ++x) {
            if (!(bt >> x & 1)) continue;
            const StateMask target = bt & ~(StateMask{1} << x);
            StateMask covered = 0;
            for (std::size_t d = 0; d < molecules.size(); ++d) {
                if ((brackets[d] & ~target) == 0) covered |= brackets[d];
            }
            if (covered == target) reachable = true;
        }
        if (!reachable) out.chain_condition = false;
    }
    return out;
}

ConditionReport separability_by_families(const FuzzySkillMultimap& mm,
                                         const KnowledgeStructure& ks) {
    ConditionReport rep;
    rep.id = "separability_by_families";
    rep.oracle = ks.is_discriminative();

    bool no_mutual_inclusion = true;
    bool distinct = true;
    bool non_refining = true;
    std::string witness;
    for (std::size_t q = 0; q < mm.item_count() ; ++q) {
        for (std::size_t r = q + 1; r < mm.item_count(); ++r) {
            const auto& fq = mm.family(q);
            const auto& fr = mm.family(r);
            if (family_subset(fq, fr) && family_subset(fr, fq)) {
                no_mutual_inclusion = false;
            }
            if (fq == fr) distinct = false;
            if (family_refines(fq, fr) && family_refines(fr, fq)) {
                if (non_refining) witness = "pair " + pair_text(mm, q, r);
                non_refining = false;
            }
        }
    }
    rep.statements.push_back({"skill_function", mm.is_skill_function()});
    rep.statements.push_back({"no_mutual_family_inclusion", no_mutual_inclusion});
    rep.statements.push_back({"families_distinct", distinct});
    rep.statements.push_back({"mutual_non_refinement", non_refining});
    rep.holds = as_verdict(non_refining);
    if (!non_refining) rep.witness = witness;
    return rep;
}

ConditionReport separability_by_minima(const FuzzySkillMultimap& mm,
                                       const KnowledgeStructure& ks) {
    ConditionReport rep;
    rep.id = "separability_by_minima";
    rep.oracle = ks.is_discriminative();

    const MinimaTable minima = competency_minima(mm);
    if (!minima.complete) {
        rep.hypothesis_met = false;
        rep.note = minima.missing;
        return rep;
    }

    bool distinct_form = true;     // some side has a minimum avoiding all of the other's
    bool refinement_form = true;   // same with "not above any" instead of "different"
    std::string witness;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (std::size_t r = q + 1; r < mm.item_count(); ++r) {
            const auto& mq = minima.m[q];
            const auto& mr = minima.m[r];
            auto side_distinct = [](const std::vector<FuzzySet>& a,
                                    const std::vector<FuzzySet>& b) {
                for (const FuzzySet& x : a) {
                    if (std::find(b.begin(), b.end(), x) == b.end()) return true;
                }
                return false;
            };
            auto side_unrefined = [](const std::vector<FuzzySet>& a,
                                     const std::vector<FuzzySet>& b) {
                for (const FuzzySet& x : a) {
                    if (not_refined_by(x, b)) return true;
                }
                return false;
            };
            if (!(side_distinct(mq, mr) || side_distinct(mr, mq))) {
                distinct_form = false;
            }
            if (!(side_unrefined(mq, mr) || side_unrefined(mr, mq))) {
                if (refinement_form) witness = "pair " + pair_text(mm, q, r);
                refinement_form = false;
            }
        }
    }
    rep.statements.push_back({"distinct_minima_per_pair", distinct_form});
    rep.statements.push_back({"incomparable_minima_per_pair", refinement_form});
    rep.holds = as_verdict(refinement_form);
    if (!refinement_form) rep.witness = witness;
    return rep;
}

ConditionReport biseparability_by_minima(const FuzzySkillMultimap& mm,
                                         const KnowledgeStructure& ks) {
    ConditionReport rep;
    rep.id = "biseparability_by_minima";
    rep.oracle = ks.is_bidiscriminative();

    const MinimaTable minima = competency_minima(mm);
    if (!minima.complete) {
        rep.hypothesis_met = false;
        rep.note = minima.missing;
        return rep;
    }

    bool equality_form = true;
    bool refinement_form = true;
    std::string witness;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (std::size_t r = q + 1; r < mm.item_count(); ++r) {
            const auto& mq = minima.m[q];
            const auto& mr = minima.m[r];
            auto some_distinct = [](const std::vector<FuzzySet>& a,
                                    const std::vector<FuzzySet>& b) {
                for (const FuzzySet& x : a) {
                    if (std::find(b.begin(), b.end(), x) == b.end()) return true;
                }
                return false;
            };
            auto some_unrefined = [](const std::vector<FuzzySet>& a,
                                     const std::vector<FuzzySet>& b) {
                for (const FuzzySet& x : a) {
                    if (not_refined_by(x, b)) return true;
                }
                return false;
            };
            if (!(some_distinct(mq, mr) && some_distinct(mr, mq))) {
                equality_form = false;
            }
            if (!(some_unrefined(mq, mr) && some_unrefined(mr, mq))) {
                if (refinement_form) witness = "pair " + pair_text(mm, q, r);
                refinement_form = false;
            }
        }
    }
    rep.statements.push_back({"distinct_minima_both_ways", equality_form});
    rep.statements.push_back({"incomparable_minima_both_ways", refinement_form});
    rep.holds = as_verdict(refinement_form);
    if (!refinement_form) rep.witness = witness;
    if (equality_form != refinement_form) {
        rep.note = "equality form and refinement form diverge on this instance";
    }
    return rep;
}

ConditionReport biseparability_by_refinement(const FuzzySkillMultimap& mm,
                                             const KnowledgeStructure& ks) {
    ConditionReport rep;
    rep.id = "biseparability_by_refinement";
    rep.oracle = ks.is_bidiscriminative();

    bool mutual = true;
    std::string witness;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (std::size_t r = q + 1; r < mm.item_count(); ++r) {
            if (family_refines(mm.family(q), mm.family(r)) ||
                family_refines(mm.family(r), mm.family(q))) {
                if (mutual) witness = "pair " + pair_text(mm, q, r);
                mutual = false;
            }
        }
    }
    rep.statements.push_back({"mutual_non_refinement_all_pairs", mutual});
    rep.holds = as_verdict(mutual);
    if (!mutual) rep.witness = witness;
    return rep;
}

ConditionReport separability_by_global_minima(const FuzzySkillMultimap& mm,
                                              const KnowledgeStructure& ks) {
    ConditionReport rep;
    rep.id = "separability_by_global_minima";
    rep.oracle = ks.is_discriminative();

    std::vector<FuzzySet> minima;
    FuzzySet ones = FuzzySet::zeros(mm.skill_count());
    for (std::size_t s = 0; s < mm.skill_count(); ++s) {
        ones.set_grade(s, Grade::from_ratio(1, 1));
    }
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        auto m = mm.min_below(q, ones);
        if (!m) {
            rep.hypothesis_met = false;
            rep.note = "the family of " + mm.item(q) + " has no minimum";
            return rep;
        }
        minima.push_back(*m);
    }

    const bool disc = ks.is_discriminative();
    const bool bidisc = ks.is_bidiscriminative();
    bool distinct = true;
    bool incomparable = true;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (std::size_t r = q + 1; r < mm.item_count(); ++r) {
            if (minima[q] == minima[r]) distinct = false;
            if (subseteq(minima[q], minima[r]) || subseteq(minima[r], minima[q])) {
                incomparable = false;
            }
        }
    }
    rep.statements.push_back({"oracle_discriminative", disc});
    rep.statements.push_back({"oracle_bi_discriminative", bidisc});
    rep.statements.push_back({"global_minima_distinct", distinct});
    rep.statements.push_back({"global_minima_incomparable", incomparable});

    const bool four_way = (disc == bidisc) && (disc == distinct) && (disc == incomparable);
    rep.holds = as_verdict(four_way);
    if (!four_way) {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        rep.note = std::string("REFUTATION CANDIDATE: four-way equivalence fails; ") +
                   "discriminative<=>distinct: " + yn(disc == distinct) +
                   ", bi-discriminative<=>incomparable: " + yn(bidisc == incomparable) +
                   ", discriminative<=>bi-discriminative: " + yn(disc == bidisc);
    }
    return rep;
}

std::optional<FuzzySet> outer_fringe_witness(const FuzzySkillMultimap& mm,
                                             const KnowledgeStructure& ks,
                                             StateMask K, std::size_t q) {
    detail::require(mm.item_count() == ks.item_count(),
                    "outer_fringe_witness: item count mismatch");
    detail::require(q < mm.item_count(), "outer_fringe_witness: item index out of range");
    if (!ks.contains(K)) {
        throw InputError("outer_fringe_witness: " + mask_to_string(K, ks.items()) +
                         " is not a state");
    }
    if (K >> q & 1) {
        throw InputError("outer_fringe_witness: " + mm.item(q) +
                         " already belongs to the state");
    }
    for (const FuzzySet& m : mm.family(q)) {
        if (!m.is_molecule()) continue;
        if ((problem_function(mm, m) & ~K) == (StateMask{1} << q)) return m;
    }
    return std::nullopt;
}

std::optional<std::vector<std::pair<std::size_t, FuzzySet>>>
inner_fringe_witness(const FuzzySkillMultimap& mm, const KnowledgeStructure& ks,
                     StateMask K, std::size_t r) {
    detail::require(mm.item_count() == ks.item_count(),
                    "inner_fringe_witness: item count mismatch");
    detail::require(r < mm.item_count(), "inner_fringe_witness: item index out of range");
    if (!ks.contains(K)) {
        throw InputError("inner_fringe_witness: " + mask_to_string(K, ks.items()) +
                         " is not a state");
    }
    if (!(K >> r & 1)) {
        throw InputError("inner_fringe_witness: " + mm.item(r) +
                         " does not belong to the state");
    }
    const StateMask target = K & ~(StateMask{1} << r);
    std::vector<std::pair<std::size_t, FuzzySet>> picks;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        if (!(target >> q & 1)) continue;
        bool found = false;
        for (const FuzzySet& m : mm.family(q)) {
            if (!m.is_molecule()) continue;
            if ((problem_function(mm, m) & ~target) == 0) {
                picks.emplace_back(q, m);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return picks;
}

} // namespace kst
