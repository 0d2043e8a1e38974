#include "fixtures.hpp"

#include "kst/error.hpp"

namespace kstfix {

using kst::FuzzySet;
using kst::FuzzySkillMultimap;
using kst::Grade;
using kst::KnowledgeStructure;
using kst::SkillDomain;
using kst::StateMask;

FuzzySet fs(const SkillDomain& dom, const Competency& entries) {
    FuzzySet out = FuzzySet::zeros(dom.size());
    for (const auto& [skill, grade] : entries) {
        const auto idx = dom.index_of(skill);
        kst::detail::require(idx.has_value(), "fixture references unknown skill " + skill);
        out.set_grade(*idx, Grade::parse(grade));
    }
    return out;
}

FuzzySet fs(const std::vector<std::string>& skills, const Competency& entries) {
    return fs(SkillDomain(skills), entries);
}

FuzzySkillMultimap make_multimap(std::vector<std::string> items,
                                 std::vector<std::string> skills,
                                 std::vector<Family> families) {
    SkillDomain dom(std::move(skills));
    std::vector<std::vector<FuzzySet>> sets;
    sets.reserve(families.size());
    for (const Family& family : families) {
        std::vector<FuzzySet>& row = sets.emplace_back();
        row.reserve(family.size());
        for (const Competency& competency : family) row.push_back(fs(dom, competency));
    }
    return FuzzySkillMultimap::create(std::move(items), std::move(dom), std::move(sets));
}

StateMask mask_of(const std::vector<std::string>& items,
                  const std::vector<std::string>& members) {
    StateMask mask = 0;
    for (const std::string& name : members) {
        bool found = false;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i] == name) {
                mask |= StateMask{1} << i;
                found = true;
                break;
            }
        }
        kst::detail::require(found, "fixture references unknown item " + name);
    }
    return mask;
}

KnowledgeStructure make_structure(std::vector<std::string> items,
                                  std::vector<std::vector<std::string>> states) {
    std::vector<StateMask> masks;
    masks.reserve(states.size());
    for (const auto& names : states) masks.push_back(mask_of(items, names));
    return KnowledgeStructure::create(std::move(items), std::move(masks));
}

FuzzySkillMultimap f_ex1() {
    const Competency ones = {{"s1", "1"}, {"s2", "1"}};
    return make_multimap({"q1", "q2"}, {"s1", "s2"}, {{ones}, {ones}});
}

FuzzySkillMultimap f_scs() {
    return make_multimap({"q1", "q2", "q3"}, {"s1", "s2"},
                         {{{{"s1", "0.2"}}, {{"s1", "0.1"}, {"s2", "0.3"}}},
                          {{{"s1", "0.6"}, {"s2", "0.7"}}},
                          {{{"s1", "0.4"}}}});
}

FuzzySkillMultimap f_ls() {
    return make_multimap({"q1", "q2"}, {"s1", "s2", "s3"},
                         {{{{"s1", "0.1"}, {"s2", "0.3"}}, {{"s2", "0.4"}, {"s3", "0.6"}}},
                          {{{"s2", "0.4"}, {"s3", "0.6"}}}});
}

FuzzySkillMultimap f_ls_crisp() {
    return make_multimap({"q1", "q2"}, {"s1", "s2", "s3"},
                         {{{{"s1", "1"}, {"s2", "1"}}, {{"s2", "1"}, {"s3", "1"}}},
                          {{{"s2", "1"}, {"s3", "1"}}}});
}

FuzzySkillMultimap f_nd() {
    return make_multimap({"a", "b"}, {"s1", "s2", "s3"},
                         {{{{"s1", "0.3"}}, {{"s2", "0.4"}}, {{"s2", "0.7"}, {"s3", "0.4"}}},
                          {{{"s1", "0.3"}}, {{"s2", "0.4"}}}});
}

FuzzySkillMultimap f_inj() {
    return make_multimap({"a", "b"}, {"s1", "s2"},
                         {{{{"s1", "0.6"}}, {{"s1", "0.8"}}, {{"s2", "0.7"}}},
                          {{{"s1", "0.3"}}, {{"s2", "0.4"}}}});
}

FuzzySkillMultimap f_min() {
    return make_multimap(
        {"a", "b", "c"}, {"s1", "s2", "s3"},
        {{{{"s1", "0.2"}}, {{"s2", "0.1"}}, {{"s1", "0.3"}, {"s2", "0.4"}}},
         {{{"s1", "0.2"}},
          {{"s2", "0.1"}},
          {{"s1", "0.5"}, {"s3", "0.2"}},
          {{"s2", "0.3"}, {"s3", "0.3"}}},
         {{{"s1", "0.2"}}, {{"s2", "0.1"}}, {{"s1", "0.3"}, {"s2", "0.5"}, {"s3", "0.6"}}}});
}

FuzzySkillMultimap f_bd() {
    return make_multimap(
        {"a", "b"}, {"s1", "s2", "s3"},
        {{{{"s1", "0.2"}}, {{"s2", "0.1"}}, {{"s1", "0.3"}, {"s2", "0.4"}}},
         {{{"s1", "0.2"}}, {{"s2", "0.1"}}, {{"s3", "0.6"}}, {{"s1", "0.5"}, {"s2", "0.2"}}}});
}

FuzzySkillMultimap f_14() {
    return make_multimap({"a", "b"}, {"s1", "s2"},
                         {{{{"s1", "0.2"}}}, {{{"s1", "0.3"}, {"s2", "0.7"}}}});
}

FuzzySkillMultimap f_disj() {
    return make_multimap({"q", "r"}, {"s1", "s2"},
                         {{{{"s1", "0.2"}}}, {{{"s1", "0.1"}}, {{"s2", "0.7"}}}});
}

FuzzySkillMultimap f_prol_full() {
    return make_multimap({"q", "r"}, {"s1", "s2", "s3"},
                         {{{{"s1", "0.2"}, {"s2", "0.3"}}}, {{{"s1", "0.2"}, {"s3", "0.5"}}}});
}

FuzzySkillMultimap f_prol_restricted() {
    return make_multimap({"q", "r"}, {"s1"}, {{{{"s1", "0.2"}}}, {{{"s1", "0.2"}}}});
}

std::vector<FuzzySkillMultimap> f_merge1_parts() {
    FuzzySkillMultimap part1 = make_multimap(
        {"a", "b"}, {"s1", "s2", "s3", "s4"},
        {{{{"s1", "0.1"}, {"s2", "0.7"}}, {{"s2", "0.4"}, {"s3", "0.6"}}},
         {{{"s1", "0.2"}, {"s3", "0.5"}}, {{"s3", "0.5"}, {"s4", "0.5"}}}});
    FuzzySkillMultimap part2 = make_multimap(
        {"c", "d"}, {"s1", "s3", "s4", "s5"},
        {{{{"s1", "0.2"}, {"s3", "0.5"}}, {{"s3", "0.5"}, {"s4", "0.5"}}},
         {{{"s1", "0.2"}, {"s4", "0.5"}}, {{"s3", "0.5"}, {"s5", "0.5"}}}});
    return {part1, part2};
}

std::vector<FuzzySkillMultimap> f_merge2_parts() {
    return {make_multimap({"a", "b"}, {"s1"}, {{{{"s1", "0.2"}}}, {{{"s1", "0.2"}}}}),
            make_multimap({"b", "c"}, {"s2"}, {{{{"s2", "0.4"}}}, {{{"s2", "0.4"}}}}),
            make_multimap({"a", "c"}, {"s3"}, {{{{"s3", "0.6"}}}, {{{"s3", "0.6"}}}})};
}

KnowledgeStructure f_quot() {
    return make_structure({"a", "b", "c", "d"},
                          {{}, {"d"}, {"a", "c"}, {"a", "b", "c"}, {"a", "c", "d"},
                           {"a", "b", "c", "d"}});
}

KnowledgeStructure printed_merge1_merged() {
    return make_structure({"a", "b", "c", "d"},
                          {{}, {"a"}, {"d"}, {"b", "c"}, {"a", "d"}, {"a", "b", "c"},
                           {"a", "b", "c", "d"}});
}

KnowledgeStructure computed_merge1_merged() {
    return make_structure({"a", "b", "c", "d"},
                          {{}, {"a"}, {"d"}, {"b", "c"}, {"a", "d"}, {"a", "b", "c"},
                           {"b", "c", "d"}, {"a", "b", "c", "d"}});
}

std::vector<FuzzySkillMultimap> support_condition_gap_parts() {
    return {make_multimap({"q", "r"}, {"s1", "t1"},
                          {{{{"s1", "0.2"}, {"t1", "0.5"}}}, {{{"s1", "0.5"}, {"t1", "0.2"}}}}),
            make_multimap({"q"}, {"s1", "t1"}, {{{{"s1", "0.5"}, {"t1", "0.2"}}}})};
}

FuzzySkillMultimap drop_prolongation_full() {
    return make_multimap({"q", "r"}, {"s1", "t1", "s2"},
                         {{{{"s1", "0.5"}, {"s2", "0.3"}}},
                          {{{"s2", "0.3"}}, {{"s1", "0.2"}, {"t1", "0.4"}}}});
}

std::vector<std::string> drop_prolongation_keep() { return {"s1", "t1"}; }

} // namespace kstfix
