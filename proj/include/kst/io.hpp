#pragma once

#include <string>

#include <json.hpp>

#include "kst/classifiers.hpp"
#include "kst/delineation.hpp"
#include "kst/distributed.hpp"
#include "kst/multimap.hpp"
#include "kst/structure.hpp"

namespace kst {

// Insertion-ordered JSON so emitted documents keep declaration order.
using Json = nlohmann::ordered_json;

// --- documents ---------------------------------------------------------------
//
// Multimap document:
//   { "items": ["a","b"], "skills": ["s1","s2"],
//     "mu": { "a": [ {"s1": "0.2"} ], "b": [ {"s1": "0.3", "s2": "0.7"} ] } }
// Grades are decimal strings (or JSON numbers, taken at their printed value);
// zero grades are omitted on output.
//
// Structure document:
//   { "items": ["a","b"], "states": [[], ["a"], ["a","b"]] }

FuzzySkillMultimap multimap_from_json(const Json& j);
FuzzySkillMultimap parse_multimap(const std::string& text);
Json multimap_to_json(const FuzzySkillMultimap& mm);

KnowledgeStructure structure_from_json(const Json& j);
KnowledgeStructure parse_structure(const std::string& text);
Json structure_to_json(const KnowledgeStructure& ks);

// A document with a "states" field is a structure document.
bool looks_like_structure(const Json& j);

Json fuzzy_set_to_json(const FuzzySet& f, const SkillDomain& skills);

// --- reports -------------------------------------------------------------------

Json summary_json(const FuzzySkillMultimap& mm);
Json delineation_json(const FuzzySkillMultimap& mm, const DelineationResult& dr);
Json structure_classification_json(const KnowledgeStructure& ks);
Json classification_json(const FuzzySkillMultimap& mm, const DelineationResult& dr);
Json condition_report_json(const ConditionReport& rep);
Json separability_json(const FuzzySkillMultimap& mm, const DelineationResult& dr);
Json quotient_json(const KnowledgeStructure& ks);
Json fringes_json(const KnowledgeStructure& ks, StateMask state);
// Fringes plus molecule witnesses from the multimap's families.
Json fringes_json(const FuzzySkillMultimap& mm, const DelineationResult& dr, StateMask state);
Json restriction_json(const RestrictionResult& rr);
Json mesh_json(const MeshCheck& mc);
Json merge_json(const MergeResult& mr, const MergeAnalysis& an);
// Everything about one multimap: summary, delineation, classification,
// separability.
Json report_json(const FuzzySkillMultimap& mm, const DelineationResult& dr);

} // namespace kst
