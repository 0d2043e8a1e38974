#pragma once

// Shared fixtures for the unit and acceptance suites: the worked examples the
// library is checked against, built programmatically with exact grades, plus
// small literal-style builders used across the tests.

#include <string>
#include <utility>
#include <vector>

#include "kst/multimap.hpp"
#include "kst/structure.hpp"

namespace kstfix {

// One competency as (skill name, grade text) pairs; unlisted skills get 0.
using Competency = std::vector<std::pair<std::string, std::string>>;
using Family = std::vector<Competency>;

kst::FuzzySet fs(const kst::SkillDomain& dom, const Competency& entries);
kst::FuzzySet fs(const std::vector<std::string>& skills, const Competency& entries);

kst::FuzzySkillMultimap make_multimap(std::vector<std::string> items,
                                      std::vector<std::string> skills,
                                      std::vector<Family> families);

kst::KnowledgeStructure make_structure(std::vector<std::string> items,
                                       std::vector<std::vector<std::string>> states);

kst::StateMask mask_of(const std::vector<std::string>& items,
                       const std::vector<std::string>& members);

// --- fixtures ---------------------------------------------------------------

// Two items sharing the all-ones competency; delineates {0, Q}.
kst::FuzzySkillMultimap f_ex1();

// Three items over two skills; delineates a 4-state quasi-ordinal structure
// {0, {q1}, {q1,q3}, Q} whose families do not satisfy the meet-refinement
// condition.
kst::FuzzySkillMultimap f_scs();

// Two items over three skills; delineates the chain {0, {q1}, Q} (a learning
// space) although no competency of mu(q1) dominates a molecule of mu(q1).
kst::FuzzySkillMultimap f_ls();

// Crisp variant of f_ls (all grades 1).
kst::FuzzySkillMultimap f_ls_crisp();

// Distinct families that still delineate the indiscrete structure {0, Q}.
kst::FuzzySkillMultimap f_nd();

// Injective but non-antichain families; delineates {0, {b}, Q}.
kst::FuzzySkillMultimap f_inj();

// Three items whose compound competencies have no in-family minimum below
// them; delineates {0, Q}.
kst::FuzzySkillMultimap f_min();

// Two items, same mu(a) as f_min; delineates {0, {b}, Q}.
kst::FuzzySkillMultimap f_bd();

// Conjunctive two-item fixture with comparable competencies; delineates
// {0, {a}, Q}: discriminative but not bi-discriminative.
kst::FuzzySkillMultimap f_14();

// Disjunctive two-item fixture; delineates {0, {r}, Q}.
kst::FuzzySkillMultimap f_disj();

// A prolongation pair: the full multimap over {s1,s2,s3} and its restriction
// to {s1} (both families collapse to {0.2/s1}).
kst::FuzzySkillMultimap f_prol_full();
kst::FuzzySkillMultimap f_prol_restricted();

// Merge example with disjoint item sets and overlapping skills: two parts
// whose structures are bi-discriminative while the merged structure is not
// discriminative (mu(b) == mu(c)).
std::vector<kst::FuzzySkillMultimap> f_merge1_parts();

// Merge example with disjoint skills: three single-skill parts, none
// discriminative, whose merge is bi-discriminative.
std::vector<kst::FuzzySkillMultimap> f_merge2_parts();

// A non-delineated structure used by the quotient tests:
// {0,{d},{a,c},{a,b,c},{a,c,d},Q} over {a,b,c,d}; items a and c share their
// states, so the quotient has classes {a,c}, {b}, {d}.
kst::KnowledgeStructure f_quot();

// The merged structure of f_merge1 as printed in the source material (7
// states) and as computed by exhaustive enumeration (8 states: the printed
// list is missing {b,c,d}).
kst::KnowledgeStructure printed_merge1_merged();
kst::KnowledgeStructure computed_merge1_merged();

// Regression: merged skill function where the support condition holds for
// every part but a part structure still differs from the merged trace
// (part 1 delineates {r} while the merged trace never does).
std::vector<kst::FuzzySkillMultimap> support_condition_gap_parts();

// Regression: restricting this multimap to {s1,t1} drops a competency that
// masks to zero, and the restriction is bi-discriminative while the full
// multimap's structure is not.
kst::FuzzySkillMultimap drop_prolongation_full();
std::vector<std::string> drop_prolongation_keep(); // {s1, t1}

} // namespace kstfix
