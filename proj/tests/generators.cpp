#include "generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace kstgen {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<kst::FuzzySet> random_family(Rng& rng, std::size_t width, std::size_t max_family) {
    const std::size_t count = pick(rng, 1, max_family);
    std::vector<kst::FuzzySet> family;
    family.reserve(count);
    for (std::size_t i = 0; i < count; ++i) family.push_back(random_competency(rng, width));
    kst::canonicalize_family(family);
    return family;
}

kst::FuzzySkillMultimap multimap_over(Rng& rng,
                                      std::vector<std::string> items,
                                      std::vector<std::string> skills,
                                      std::size_t max_family,
                                      bool force_skill_function) {
    const std::size_t width = skills.size();
    std::vector<std::vector<kst::FuzzySet>> families;
    families.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        families.push_back(random_family(rng, width, max_family));
    }
    auto mm = kst::FuzzySkillMultimap::create(std::move(items), kst::SkillDomain(std::move(skills)),
                                              std::move(families));
    if (force_skill_function) mm = mm.minimized();
    return mm;
}

} // namespace

kst::Grade random_grade(Rng& rng) {
    const auto tenths = pick(rng, 0, 10);
    return kst::Grade::from_ratio(static_cast<std::int64_t>(tenths), 10);
}

kst::FuzzySet random_fuzzy_set(Rng& rng, std::size_t width) {
    std::vector<kst::Grade> grades;
    grades.reserve(width);
    for (std::size_t i = 0; i < width; ++i) grades.push_back(random_grade(rng));
    return kst::FuzzySet(std::move(grades));
}

kst::FuzzySet random_competency(Rng& rng, std::size_t width) {
    for (;;) {
        auto candidate = random_fuzzy_set(rng, width);
        if (!candidate.is_zero()) return candidate;
    }
}

kst::FuzzySkillMultimap random_multimap(Rng& rng, const MultimapParams& params) {
    const std::size_t n_items = pick(rng, params.min_items, params.max_items);
    const std::size_t n_skills = pick(rng, params.min_skills, params.max_skills);
    return multimap_over(rng, numbered("q", n_items), numbered("s", n_skills), params.max_family,
                         params.force_skill_function);
}

kst::FuzzySkillMultimap with_molecule_cover(Rng& rng, const kst::FuzzySkillMultimap& mm) {
    std::vector<std::vector<kst::FuzzySet>> families;
    families.reserve(mm.item_count());
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        auto fam = mm.family(q);
        const std::size_t original = fam.size();
        for (std::size_t c = 0; c < original; ++c) {
            if (fam[c].is_molecule()) continue;
            // Pick a random support skill and keep just that grade.
            std::vector<std::size_t> support;
            for (std::size_t s = 0; s < fam[c].size(); ++s) {
                if (!fam[c].grade(s).is_zero()) support.push_back(s);
            }
            const std::size_t s = support[pick(rng, 0, support.size() - 1)];
            auto molecule = kst::FuzzySet::zeros(fam[c].size());
            molecule.set_grade(s, fam[c].grade(s));
            fam.push_back(std::move(molecule));
        }
        families.push_back(std::move(fam));
    }
    return kst::FuzzySkillMultimap::create(mm.items(), mm.skills(), std::move(families));
}

kst::KnowledgeStructure random_structure(Rng& rng, std::size_t max_items) {
    const std::size_t n_items = pick(rng, 1, max_items);
    const kst::StateMask full = (n_items == 64) ? ~kst::StateMask{0}
                                                : ((kst::StateMask{1} << n_items) - 1);
    std::set<kst::StateMask> states{kst::StateMask{0}, full};
    const std::size_t extra = pick(rng, 0, (std::size_t{1} << n_items));
    for (std::size_t i = 0; i < extra; ++i) {
        states.insert(std::uniform_int_distribution<kst::StateMask>(0, full)(rng));
    }
    return kst::KnowledgeStructure::create(
        numbered("q", n_items), std::vector<kst::StateMask>(states.begin(), states.end()));
}

std::vector<kst::FuzzySkillMultimap> random_merge_parts(Rng& rng, MergeShape shape) {
    const std::size_t n_parts = pick(rng, 2, 3);
    const bool disjoint_items =
        shape == MergeShape::DisjointItems || shape == MergeShape::DisjointBoth;
    const bool disjoint_skills =
        shape == MergeShape::DisjointSkills || shape == MergeShape::DisjointBoth;

    // Shared pools for the non-disjoint axes; per-part prefixes otherwise.
    const std::vector<std::string> shared_items{"a", "b", "c", "d"};
    const std::vector<std::string> shared_skills{"s1", "s2", "s3"};

    std::vector<kst::FuzzySkillMultimap> parts;
    parts.reserve(n_parts);
    std::size_t item_cursor = 0;
    for (std::size_t p = 0; p < n_parts; ++p) {
        const std::size_t n_items = pick(rng, 1, 2);
        const std::size_t n_skills = pick(rng, 1, 2);

        std::vector<std::string> items;
        if (disjoint_items) {
            for (std::size_t i = 0; i < n_items; ++i) {
                items.push_back(shared_items[(item_cursor + i) % shared_items.size()] +
                                std::to_string(p + 1));
            }
            item_cursor += n_items;
        } else {
            // Sample without replacement from the shared pool.
            std::vector<std::string> pool = shared_items;
            std::shuffle(pool.begin(), pool.end(), rng);
            items.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_items));
            std::sort(items.begin(), items.end());
        }

        std::vector<std::string> skills;
        if (disjoint_skills) {
            for (std::size_t i = 0; i < n_skills; ++i) {
                skills.push_back("p" + std::to_string(p + 1) + "s" + std::to_string(i + 1));
            }
        } else {
            std::vector<std::string> pool = shared_skills;
            std::shuffle(pool.begin(), pool.end(), rng);
            skills.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_skills));
            std::sort(skills.begin(), skills.end());
        }

        // Merge parts are always fuzzy skill functions: the merge operation
        // requires antichain families.
        parts.push_back(multimap_over(rng, std::move(items), std::move(skills),
                                      /*max_family=*/2, /*force_skill_function=*/true));
    }
    return parts;
}

} // namespace kstgen
