#include "kst/fuzzy.hpp"

#include <algorithm>

#include "kst/error.hpp"

namespace kst {

SkillDomain::SkillDomain(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw InputError("skill name must be non-empty");
        }
        auto [it, inserted] = index_.emplace(names_[i], i);
        (void)it;
        if (!inserted) {
            throw InputError("duplicate skill name: " + names_[i]);
        }
    }
}

std::optional<std::size_t> SkillDomain::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FuzzySet::is_zero() const {
    return std::all_of(grades_.begin(), grades_.end(),
                       [](const Grade& g) { return g.is_zero(); });
}

bool FuzzySet::is_molecule() const {
    return support_size() == 1;
}

std::size_t FuzzySet::support_size() const {
    std::size_t n = 0;
    for (const Grade& g : grades_) {
        if (!g.is_zero()) ++n;
    }
    return n;
}

std::string FuzzySet::str(const SkillDomain& domain) const {
    detail::require(domain.size() == grades_.size(),
                    "FuzzySet::str: domain size mismatch");
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < grades_.size(); ++i) {
        if (grades_[i].is_zero()) continue;
        if (!first) out += ", ";
        first = false;
        out += grades_[i].str();
        out += "/";
        out += domain.name(i);
    }
    out += "}";
    return out;
}

namespace {
void require_same_size(const FuzzySet& a, const FuzzySet& b, const char* where) {
    detail::require(a.size() == b.size(), std::string(where) + ": size mismatch");
}
} // namespace

bool subseteq(const FuzzySet& a, const FuzzySet& b) {
    require_same_size(a, b, "subseteq");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.grade(i) <= b.grade(i))) return false;
    }
    return true;
}

bool strictly_below(const FuzzySet& a, const FuzzySet& b) {
    return subseteq(a, b) && !(a == b);
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
    require_same_size(a, b, "join");
    std::vector<Grade> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = grade_max(a.grade(i), b.grade(i));
    }
    return FuzzySet(std::move(out));
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
    require_same_size(a, b, "meet");
    std::vector<Grade> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = grade_min(a.grade(i), b.grade(i));
    }
    return FuzzySet(std::move(out));
}

int compare_canonical(const FuzzySet& a, const FuzzySet& b) {
    require_same_size(a, b, "compare_canonical");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.grade(i) < b.grade(i)) return -1;
        if (b.grade(i) < a.grade(i)) return 1;
    }
    return 0;
}

std::size_t hash_value(const FuzzySet& s) {
    std::size_t h = 0xcbf29ce484222325ull;
    std::hash<Grade> hg;
    for (std::size_t i = 0; i < s.size(); ++i) {
        h ^= hg(s.grade(i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace kst
