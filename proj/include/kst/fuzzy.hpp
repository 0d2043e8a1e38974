#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kst/grade.hpp"

namespace kst {

// An ordered skill domain. Order is the declaration order of the input
// document and fixes the dense layout of every FuzzySet over the domain.
class SkillDomain {
public:
    SkillDomain() = default;

    // Throws InputError on duplicate or empty names.
    explicit SkillDomain(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const SkillDomain& a, const SkillDomain& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

// A fuzzy subset of a skill domain: one exact grade per skill, dense,
// aligned with the domain order. The domain itself is carried alongside by
// the owning multimap/structure; mixing sets of different sizes is a logic
// error and throws InternalError.
class FuzzySet {
public:
    FuzzySet() = default;
    explicit FuzzySet(std::vector<Grade> grades) : grades_(std::move(grades)) {}
    static FuzzySet zeros(std::size_t n) { return FuzzySet(std::vector<Grade>(n)); }

    std::size_t size() const { return grades_.size(); }
    const Grade& grade(std::size_t i) const { return grades_[i]; }
    void set_grade(std::size_t i, Grade g) { grades_[i] = g; }

    bool is_zero() const;
    // Exactly one non-zero grade.
    bool is_molecule() const;
    std::size_t support_size() const;

    // Renders as "{0.2/s1, 0.3/s2}" (zero grades omitted), "{}" for the zero set.
    std::string str(const SkillDomain& domain) const;

    friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
        return a.grades_ == b.grades_;
    }

private:
    std::vector<Grade> grades_;
};

// Pointwise order and lattice operations.
bool subseteq(const FuzzySet& a, const FuzzySet& b);          // a(s) <= b(s) for all s
bool strictly_below(const FuzzySet& a, const FuzzySet& b);    // subseteq and not equal
FuzzySet join(const FuzzySet& a, const FuzzySet& b);          // pointwise max (fuzzy union)
FuzzySet meet(const FuzzySet& a, const FuzzySet& b);          // pointwise min (fuzzy intersection)

// Arbitrary total order for canonical sorting of families (lexicographic by
// exact grade value). Returns <0, 0, >0.
int compare_canonical(const FuzzySet& a, const FuzzySet& b);

std::size_t hash_value(const FuzzySet& s);

struct FuzzySetHash {
    std::size_t operator()(const FuzzySet& s) const { return hash_value(s); }
};

} // namespace kst
