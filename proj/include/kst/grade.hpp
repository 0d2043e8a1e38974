#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace kst {

// An exact membership grade in [0, 1], stored as a reduced rational.
//
// Grades enter the system as decimal strings ("0.3", "0.35", "1") or as
// fraction strings ("1/3"); they are never parsed from binary floats, so
// "0.1" and "0.10" compare equal and comparisons are exact. Only ordering,
// min and max are ever needed (fuzzy union/intersection are pointwise
// max/min), so no rational arithmetic beyond parsing is implemented.
class Grade {
public:
    constexpr Grade() = default; // zero

    static Grade zero() { return Grade(); }
    static Grade one() { return Grade(1, 1); }

    // Builds a grade from a ratio; reduces and checks 0 <= num/den <= 1.
    // Throws InputError on a denominator of 0, negative values, values > 1,
    // or a denominator beyond the supported magnitude (1e9).
    static Grade from_ratio(std::int64_t num, std::int64_t den);

    // Parses "0", "1", "0.35", ".35", "1.0" or "7/20". At most 9 fractional
    // digits are accepted so that exact comparison never overflows.
    // Throws InputError on anything else.
    static Grade parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == den_; }

    // Renders as a decimal string when the reduced denominator is of the
    // form 2^a * 5^b (i.e. the expansion terminates), else as "num/den".
    std::string str() const;

    friend bool operator==(const Grade& a, const Grade& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
        // Safe: parse() caps denominators at 1e9 and num <= den.
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    Grade(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline const Grade& grade_max(const Grade& a, const Grade& b) { return a < b ? b : a; }
inline const Grade& grade_min(const Grade& a, const Grade& b) { return b < a ? b : a; }

} // namespace kst

template <>
struct std::hash<kst::Grade> {
    std::size_t operator()(const kst::Grade& g) const noexcept {
        return std::hash<std::int64_t>()(g.num() * 0x9e3779b97f4a7c15LL ^ g.den());
    }
};
