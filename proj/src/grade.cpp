#include "kst/grade.hpp"

#include <cctype>
#include <numeric>

#include "kst/error.hpp"

namespace kst {

namespace {

constexpr std::int64_t kMaxDen = 1'000'000'000; // keeps cross-multiplication in int64

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Grade Grade::from_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw InputError("grade denominator must be positive");
    if (num < 0) throw InputError("grade must not be negative");
    if (num > den) throw InputError("grade must not exceed 1");
    if (den > kMaxDen) throw InputError("grade denominator too large (max 1e9)");
    const std::int64_t g = std::gcd(num, den);
    return Grade(num / g, den / g);
}

Grade Grade::parse(const std::string& text) {
    const auto fail = [&]() -> Grade {
        throw InputError("invalid grade '" + text + "': expected a decimal in [0,1] "
                         "(at most 9 fractional digits) or a fraction 'num/den'");
    };
    if (text.empty()) return fail();

    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const std::string num_s = text.substr(0, slash);
        const std::string den_s = text.substr(slash + 1);
        if (!all_digits(num_s) || !all_digits(den_s)) return fail();
        if (num_s.size() > 10 || den_s.size() > 10) return fail();
        return from_ratio(std::stoll(num_s), std::stoll(den_s));
    }

    const auto dot = text.find('.');
    const std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
    const std::string frac_part = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !all_digits(int_part)) return fail();
    if (!frac_part.empty() && !all_digits(frac_part)) return fail();
    if (int_part.size() > 2) return fail();
    if (frac_part.size() > 9)
        throw InputError("invalid grade '" + text + "': at most 9 fractional digits supported");

    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : std::stoll(int_part);
    const std::int64_t frac = frac_part.empty() ? 0 : std::stoll(frac_part);
    return from_ratio(whole * den + frac, den);
}

std::string Grade::str() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";

    // Terminating decimal iff the reduced denominator is 2^a * 5^b.
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    const int digits = twos > fives ? twos : fives;
    // Pathological power-of-two denominators would need >17 digits and could
    // overflow the scaling below; the fraction form is still exact.
    if (digits > 17) return std::to_string(num_) + "/" + std::to_string(den_);
    std::int64_t scaled = num_;
    for (int i = 0; i < digits - twos; ++i) scaled *= 2;
    for (int i = 0; i < digits - fives; ++i) scaled *= 5;

    std::string frac = std::to_string(scaled);
    if (static_cast<int>(frac.size()) < digits)
        frac.insert(frac.begin(), digits - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return "0." + frac;
}

} // namespace kst
