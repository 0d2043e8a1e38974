#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kst/fuzzy.hpp"

namespace kst {

// A fuzzy skill multimap: every item (question) owns a non-empty family of
// non-zero fuzzy competencies over a shared skill domain. Families are kept
// canonically sorted and deduplicated; item order is declaration order.
class FuzzySkillMultimap {
public:
    FuzzySkillMultimap() = default;

    // Validates and canonicalizes. Throws InputError on: empty item/skill
    // sets, duplicate or empty item names, an empty family, a zero
    // competency, a competency whose width differs from the skill domain, or
    // more than 64 items. Duplicate competencies inside one family are
    // merged silently.
    static FuzzySkillMultimap create(std::vector<std::string> items,
                                     SkillDomain skills,
                                     std::vector<std::vector<FuzzySet>> families);

    std::size_t item_count() const { return items_.size(); }
    std::size_t skill_count() const { return skills_.size(); }
    const std::vector<std::string>& items() const { return items_; }
    const std::string& item(std::size_t i) const { return items_[i]; }
    std::optional<std::size_t> item_index(const std::string& name) const;
    const SkillDomain& skills() const { return skills_; }
    const std::vector<FuzzySet>& family(std::size_t i) const { return families_[i]; }
    const std::vector<std::vector<FuzzySet>>& families() const { return families_; }

    // Family-level predicates.
    bool is_skill_function() const;   // every family is an antichain under subseteq
    bool is_conjunctive() const;      // every family is a singleton
    bool is_disjunctive() const;      // every competency is a molecule

    // Minimal elements of one family (no other member strictly below).
    std::vector<FuzzySet> minimal_family(std::size_t i) const;

    // The multimap whose families are the minimal families. Always a skill
    // function; delineates the same structure as the original.
    FuzzySkillMultimap minimized() const;

    // The minimum of { D in family(i) : D subseteq bound }, when that set has
    // one element below all the others. Empty optional when the set is empty
    // or has no minimum.
    std::optional<FuzzySet> min_below(std::size_t i, const FuzzySet& bound) const;

    // All competencies across all families, deduplicated, canonically sorted.
    std::vector<FuzzySet> pool() const;

    friend bool operator==(const FuzzySkillMultimap& a, const FuzzySkillMultimap& b) {
        return a.items_ == b.items_ && a.skills_ == b.skills_ &&
               a.families_ == b.families_;
    }

private:
    std::vector<std::string> items_;
    SkillDomain skills_;
    std::vector<std::vector<FuzzySet>> families_;
};

// Sorts canonically and removes exact duplicates.
void canonicalize_family(std::vector<FuzzySet>& family);

// Family refinement: every member of a contains (includes) some member of b.
// Written a >= b in order-theoretic terms: b's competencies sit below a's.
bool family_refines(const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b);

} // namespace kst
