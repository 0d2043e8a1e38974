#include "kst/multimap.hpp"

#include <algorithm>
#include <unordered_set>

#include "kst/error.hpp"

namespace kst {

void canonicalize_family(std::vector<FuzzySet>& family) {
    std::sort(family.begin(), family.end(), [](const FuzzySet& a, const FuzzySet& b) {
        return compare_canonical(a, b) < 0;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

FuzzySkillMultimap FuzzySkillMultimap::create(std::vector<std::string> items,
                                              SkillDomain skills,
                                              std::vector<std::vector<FuzzySet>> families) {
    FuzzySkillMultimap m;
    if (items.empty()) throw InputError("item set must be non-empty");
    if (skills.size() == 0) throw InputError("skill set must be non-empty");
    if (items.size() > 64) {
        throw InputError("at most 64 items are supported (states are 64-bit masks)");
    }
    if (families.size() != items.size()) {
        throw InputError("expected one competency family per item");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& q : items) {
        if (q.empty()) throw InputError("item name must be non-empty");
        if (!seen.insert(q).second) throw InputError("duplicate item name: " + q);
    }
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (families[i].empty()) {
            throw InputError("item " + items[i] + " has an empty competency family");
        }
        for (const FuzzySet& c : families[i]) {
            if (c.size() != skills.size()) {
                throw InputError("competency width mismatch for item " + items[i]);
            }
            if (c.is_zero()) {
                throw InputError("item " + items[i] + " has a zero competency");
            }
        }
        canonicalize_family(families[i]);
    }
    m.items_ = std::move(items);
    m.skills_ = std::move(skills);
    m.families_ = std::move(families);
    return m;
}

std::optional<std::size_t> FuzzySkillMultimap::item_index(const std::string& name) const {
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i] == name) return i;
    }
    return std::nullopt;
}

bool FuzzySkillMultimap::is_skill_function() const {
    for (const auto& fam : families_) {
        for (std::size_t i = 0; i < fam.size(); ++i) {
            for (std::size_t j = 0; j < fam.size(); ++j) {
                if (i != j && subseteq(fam[i], fam[j])) return false;
            }
        }
    }
    return true;
}

bool FuzzySkillMultimap::is_conjunctive() const {
    return std::all_of(families_.begin(), families_.end(),
                       [](const std::vector<FuzzySet>& fam) { return fam.size() == 1; });
}

bool FuzzySkillMultimap::is_disjunctive() const {
    for (const auto& fam : families_) {
        for (const FuzzySet& c : fam) {
            if (!c.is_molecule()) return false;
        }
    }
    return true;
}

std::vector<FuzzySet> FuzzySkillMultimap::minimal_family(std::size_t i) const {
    const auto& fam = families_[i];
    std::vector<FuzzySet> out;
    for (const FuzzySet& c : fam) {
        bool minimal = true;
        for (const FuzzySet& d : fam) {
            if (!(d == c) && subseteq(d, c)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(c);
    }
    return out; // fam is canonical, subsequence stays canonical
}

FuzzySkillMultimap FuzzySkillMultimap::minimized() const {
    std::vector<std::vector<FuzzySet>> fams;
    fams.reserve(families_.size());
    for (std::size_t i = 0; i < families_.size(); ++i) {
        fams.push_back(minimal_family(i));
    }
    return create(items_, skills_, std::move(fams));
}

std::optional<FuzzySet> FuzzySkillMultimap::min_below(std::size_t i,
                                                      const FuzzySet& bound) const {
    const FuzzySet* best = nullptr;
    for (const FuzzySet& c : families_[i]) {
        if (!subseteq(c, bound)) continue;
        if (best == nullptr || subseteq(c, *best)) best = &c;
    }
    if (best == nullptr) return std::nullopt;
    // best is below every candidate seen after it was chosen; re-check all.
    for (const FuzzySet& c : families_[i]) {
        if (subseteq(c, bound) && !subseteq(*best, c)) return std::nullopt;
    }
    return *best;
}

std::vector<FuzzySet> FuzzySkillMultimap::pool() const {
    std::vector<FuzzySet> out;
    for (const auto& fam : families_) {
        out.insert(out.end(), fam.begin(), fam.end());
    }
    canonicalize_family(out);
    return out;
}

bool family_refines(const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b) {
    for (const FuzzySet& c : a) {
        bool covered = false;
        for (const FuzzySet& d : b) {
            if (subseteq(d, c)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace kst
