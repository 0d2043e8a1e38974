#include "kst/delineation.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "kst/error.hpp"

namespace kst {

StateMask problem_function(const FuzzySkillMultimap& mm, const FuzzySet& T) {
    detail::require(T.size() == mm.skill_count(),
                    "problem_function: fuzzy set width does not match skill count");
    StateMask out = 0;
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        for (const FuzzySet& c : mm.family(q)) {
            if (subseteq(c, T)) {
                out |= StateMask{1} << q;
                break;
            }
        }
    }
    return out;
}

std::vector<FuzzySet> subset_joins(const std::vector<FuzzySet>& pool, std::size_t width) {
    std::unordered_set<FuzzySet, FuzzySetHash> seen;
    std::vector<FuzzySet> out;
    std::function<void(std::size_t, const FuzzySet&)> walk =
        [&](std::size_t idx, const FuzzySet& acc) {
            if (idx == pool.size()) {
                if (seen.insert(acc).second) out.push_back(acc);
                return;
            }
            walk(idx + 1, acc);
            if (!subseteq(pool[idx], acc)) {
                walk(idx + 1, join(acc, pool[idx]));
            }
        };
    walk(0, FuzzySet::zeros(width));
    return out;
}

DelineationResult delineate(const FuzzySkillMultimap& mm, const DelineationOptions& opts) {
    const std::vector<FuzzySet> pool = mm.pool();
    if (pool.size() > opts.max_competencies) {
        throw InputError("delineate: competency pool has " + std::to_string(pool.size()) +
                         " distinct members, above the limit of " +
                         std::to_string(opts.max_competencies) +
                         " (raise max_competencies to proceed)");
    }

    DelineationResult result;
    result.pool = pool;

    std::unordered_set<FuzzySet, FuzzySetHash> seen;
    std::unordered_map<StateMask, FuzzySet> witness_of;

    auto consider = [&](const FuzzySet& j) {
        if (!seen.insert(j).second) {
            return; // same join reached through a different subset
        }
        ++result.joins_evaluated;
        const StateMask state = problem_function(mm, j);
        auto [it, inserted] = witness_of.try_emplace(state, j);
        if (!inserted && compare_canonical(j, it->second) < 0) {
            it->second = j;
        }
    };

    // Depth-first over the pool, carrying the running join. Including a
    // competency already below the running join cannot change any downstream
    // join, so that branch is skipped.
    std::function<void(std::size_t, const FuzzySet&)> walk =
        [&](std::size_t idx, const FuzzySet& acc) {
            if (idx == pool.size()) {
                consider(acc);
                return;
            }
            walk(idx + 1, acc);
            if (!subseteq(pool[idx], acc)) {
                walk(idx + 1, join(acc, pool[idx]));
            }
        };
    walk(0, FuzzySet::zeros(mm.skill_count()));

    std::vector<StateMask> states;
    states.reserve(witness_of.size());
    for (const auto& [state, w] : witness_of) {
        (void)w;
        states.push_back(state);
    }
    result.structure = KnowledgeStructure::create(mm.items(), states);

    result.witnesses.reserve(result.structure.state_count());
    for (const StateMask state : result.structure.states()) {
        result.witnesses.push_back(witness_of.at(state));
    }
    return result;
}

} // namespace kst
