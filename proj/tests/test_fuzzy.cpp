#include <random>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "kst/error.hpp"
#include "kst/fuzzy.hpp"

using kst::FuzzySet;
using kst::Grade;
using kst::SkillDomain;

namespace {
FuzzySet fz(std::initializer_list<const char*> grades) {
    std::vector<Grade> gs;
    for (const char* g : grades) gs.push_back(Grade::parse(g));
    return FuzzySet(std::move(gs));
}
} // namespace

TEST_CASE("skill domain lookups and validation") {
    SkillDomain dom({"s1", "s2", "s3"});
    CHECK(dom.size() == 3);
    CHECK(dom.name(0) == "s1");
    CHECK(dom.index_of("s3") == 2);
    CHECK_FALSE(dom.index_of("nope").has_value());
    CHECK_THROWS_AS(SkillDomain({"s1", "s1"}), kst::InputError);
    CHECK_THROWS_AS(SkillDomain({""}), kst::InputError);
}

TEST_CASE("fuzzy set predicates") {
    CHECK(FuzzySet::zeros(3).is_zero());
    CHECK_FALSE(FuzzySet::zeros(3).is_molecule());
    CHECK(fz({"0", "0.4", "0"}).is_molecule());
    CHECK_FALSE(fz({"0.1", "0.4", "0"}).is_molecule());
    CHECK(fz({"0.1", "0.4", "0"}).support_size() == 2);
    CHECK(fz({"1", "1", "1"}).support_size() == 3);
    CHECK_FALSE(fz({"0.1", "0", "0"}).is_zero());
}

TEST_CASE("pointwise order") {
    const auto a = fz({"0.1", "0.3"});
    const auto b = fz({"0.2", "0.3"});
    const auto c = fz({"0.3", "0.1"});
    CHECK(subseteq(a, b));
    CHECK_FALSE(subseteq(b, a));
    CHECK(subseteq(a, a));
    CHECK_FALSE(strictly_below(a, a));
    CHECK(strictly_below(a, b));
    // Incomparable pair: neither direction.
    CHECK_FALSE(subseteq(b, c));
    CHECK_FALSE(subseteq(c, b));
    CHECK(subseteq(FuzzySet::zeros(2), a));
}

TEST_CASE("join and meet are the pointwise lattice operations") {
    const auto a = fz({"0.1", "0.7", "0"});
    const auto b = fz({"0.4", "0.2", "0"});
    CHECK(join(a, b) == fz({"0.4", "0.7", "0"}));
    CHECK(meet(a, b) == fz({"0.1", "0.2", "0"}));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto x = kstgen::random_fuzzy_set(rng, 4);
        const auto y = kstgen::random_fuzzy_set(rng, 4);
        const auto z = kstgen::random_fuzzy_set(rng, 4);
        CHECK(join(x, y) == join(y, x));
        CHECK(meet(x, y) == meet(y, x));
        CHECK(join(x, join(y, z)) == join(join(x, y), z));
        CHECK(meet(x, meet(y, z)) == meet(meet(x, y), z));
        CHECK(join(x, x) == x);
        CHECK(meet(x, x) == x);
        // Absorption ties the two operations together.
        CHECK(join(x, meet(x, y)) == x);
        CHECK(meet(x, join(x, y)) == x);
        // Order is definable from either operation.
        CHECK(subseteq(x, y) == (join(x, y) == y));
        CHECK(subseteq(x, y) == (meet(x, y) == x));
        CHECK(subseteq(meet(x, y), x));
        CHECK(subseteq(x, join(x, y)));
    }
}

TEST_CASE("canonical comparison is a total order consistent with equality") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const auto x = kstgen::random_fuzzy_set(rng, 3);
        const auto y = kstgen::random_fuzzy_set(rng, 3);
        const int xy = kst::compare_canonical(x, y);
        const int yx = kst::compare_canonical(y, x);
        CHECK((xy == 0) == (x == y));
        if (xy < 0) CHECK(yx > 0);
        if (xy > 0) CHECK(yx < 0);
        CHECK(kst::compare_canonical(x, x) == 0);
    }
}

TEST_CASE("hashing respects equality across different grade spellings") {
    const auto a = FuzzySet({Grade::parse("0.5"), Grade::parse("0.2")});
    const auto b = FuzzySet({Grade::parse("1/2"), Grade::parse("2/10")});
    CHECK(a == b);
    CHECK(kst::hash_value(a) == kst::hash_value(b));

    std::unordered_set<FuzzySet, kst::FuzzySetHash> pool;
    std::mt19937_64 rng(13);
    std::size_t distinct = 0;
    std::vector<FuzzySet> all;
    for (int i = 0; i < 200; ++i) {
        auto s = kstgen::random_fuzzy_set(rng, 2);
        bool fresh = true;
        for (const auto& t : all) fresh = fresh && !(t == s);
        distinct += fresh ? 1 : 0;
        all.push_back(s);
        pool.insert(std::move(s));
    }
    CHECK(pool.size() == distinct);
}

TEST_CASE("rendering lists only the support") {
    SkillDomain dom({"s1", "s2", "s3"});
    CHECK(fz({"0.2", "0", "0.3"}).str(dom) == "{0.2/s1, 0.3/s3}");
    CHECK(FuzzySet::zeros(3).str(dom) == "{}");
    CHECK(fz({"0", "1", "0"}).str(dom) == "{1/s2}");
}
