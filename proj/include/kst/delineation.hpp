#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "kst/multimap.hpp"
#include "kst/structure.hpp"

namespace kst {

struct DelineationOptions {
    // Upper bound on the number of distinct competencies enumerated
    // (2^n candidate joins). Exceeding it is an error, never truncation.
    std::size_t max_competencies = 22;
};

struct DelineationResult {
    KnowledgeStructure structure;
    // One witness per state, aligned with structure.states(): the canonically
    // smallest join attaining the state (problem_function(witness) == state).
    std::vector<FuzzySet> witnesses;
    std::vector<FuzzySet> pool;        // distinct competencies, canonical order
    std::uint64_t joins_evaluated = 0; // candidate joins visited
};

// p(T): the items having some competency below T.
StateMask problem_function(const FuzzySkillMultimap& mm, const FuzzySet& T);

// All distinct joins of subsets of the given pool, including the zero set.
// Quantifiers of the form "for every fuzzy set T" reduce exactly to this
// finite set whenever both sides of the tested property only depend on which
// pool members lie below T.
std::vector<FuzzySet> subset_joins(const std::vector<FuzzySet>& pool, std::size_t width);

// Alias used by the theorem-side code where the bracket notation [T] reads
// better than "problem function".
inline StateMask bracket(const FuzzySkillMultimap& mm, const FuzzySet& T) {
    return problem_function(mm, T);
}

// Computes { p(T) : T any fuzzy set } exactly by enumerating joins of subsets
// of the competency pool: with A = { C in pool : C <= T } we have
// p(T) = p(join A), because any competency below join(A) is below T, so the
// finitely many subset joins cover every fuzzy set.
DelineationResult delineate(const FuzzySkillMultimap& mm,
                            const DelineationOptions& opts = {});

} // namespace kst
