#include "kst/io.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kst/error.hpp"

namespace kst {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError("document must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field: ") + key);
    return *it;
}

std::vector<std::string> string_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const Json& e : j) {
        if (!e.is_string()) {
            throw InputError(std::string(what) + " must contain only strings");
        }
        out.push_back(e.get<std::string>());
    }
    return out;
}

Grade grade_from_json(const Json& g) {
    if (g.is_string()) return Grade::parse(g.get<std::string>());
    // Numbers are taken at their printed (shortest round-trip) value.
    if (g.is_number()) return Grade::parse(g.dump());
    throw InputError("a grade must be a decimal string or a number");
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Json names_json(StateMask mask, const std::vector<std::string>& items) {
    return Json(mask_to_names(mask, items));
}

} // namespace

FuzzySkillMultimap multimap_from_json(const Json& j) {
    const std::vector<std::string> items = string_array(field(j, "items"), "items");
    const std::vector<std::string> skills = string_array(field(j, "skills"), "skills");
    const SkillDomain domain{skills};

    const Json& mu = field(j, "mu");
    if (!mu.is_object()) throw InputError("mu must be an object keyed by item name");
    for (const auto& [key, value] : mu.items()) {
        (void)value;
        if (std::find(items.begin(), items.end(), key) == items.end()) {
            throw InputError("mu references an unknown item: " + key);
        }
    }

    std::vector<std::vector<FuzzySet>> families;
    families.reserve(items.size());
    for (const std::string& q : items) {
        auto it = mu.find(q);
        if (it == mu.end()) throw InputError("mu is missing the family of item " + q);
        if (!it->is_array()) {
            throw InputError("the family of " + q + " must be an array of competencies");
        }
        std::vector<FuzzySet> fam;
        for (const Json& comp : *it) {
            if (!comp.is_object()) {
                throw InputError("each competency of " + q +
                                 " must be an object mapping skills to grades");
            }
            FuzzySet c = FuzzySet::zeros(domain.size());
            for (const auto& [skill, grade] : comp.items()) {
                auto s = domain.index_of(skill);
                if (!s) {
                    throw InputError("competency of " + q +
                                     " references an unknown skill: " + skill);
                }
                c.set_grade(*s, grade_from_json(grade));
            }
            fam.push_back(std::move(c));
        }
        families.push_back(std::move(fam));
    }
    return FuzzySkillMultimap::create(items, domain, std::move(families));
}

FuzzySkillMultimap parse_multimap(const std::string& text) {
    return multimap_from_json(parse_text(text));
}

Json fuzzy_set_to_json(const FuzzySet& f, const SkillDomain& skills) {
    Json out = Json::object();
    for (std::size_t s = 0; s < skills.size(); ++s) {
        if (!(f.grade(s) == Grade{})) out[skills.name(s)] = f.grade(s).str();
    }
    return out;
}

Json multimap_to_json(const FuzzySkillMultimap& mm) {
    Json mu = Json::object();
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        Json fam = Json::array();
        for (const FuzzySet& c : mm.family(q)) {
            fam.push_back(fuzzy_set_to_json(c, mm.skills()));
        }
        mu[mm.item(q)] = std::move(fam);
    }
    return Json{{"items", mm.items()},
                {"skills", mm.skills().names()},
                {"mu", std::move(mu)}};
}

KnowledgeStructure structure_from_json(const Json& j) {
    const std::vector<std::string> items = string_array(field(j, "items"), "items");
    const Json& states = field(j, "states");
    if (!states.is_array()) throw InputError("states must be an array of item arrays");
    std::vector<StateMask> masks;
    for (const Json& state : states) {
        StateMask m = 0;
        for (const std::string& name : string_array(state, "state")) {
            auto it = std::find(items.begin(), items.end(), name);
            if (it == items.end()) {
                throw InputError("state references an unknown item: " + name);
            }
            m |= StateMask{1} << (it - items.begin());
        }
        masks.push_back(m);
    }
    return KnowledgeStructure::create(items, std::move(masks));
}

KnowledgeStructure parse_structure(const std::string& text) {
    return structure_from_json(parse_text(text));
}

Json structure_to_json(const KnowledgeStructure& ks) {
    Json states = Json::array();
    for (StateMask s : ks.states()) states.push_back(names_json(s, ks.items()));
    return Json{{"items", ks.items()}, {"states", std::move(states)}};
}

bool looks_like_structure(const Json& j) {
    return j.is_object() && j.contains("states");
}

Json summary_json(const FuzzySkillMultimap& mm) {
    std::size_t molecules = 0;
    const std::vector<FuzzySet> pool = mm.pool();
    for (const FuzzySet& c : pool) {
        if (c.is_molecule()) ++molecules;
    }
    return Json{{"items", mm.items()},
                {"skills", mm.skills().names()},
                {"item_count", mm.item_count()},
                {"skill_count", mm.skill_count()},
                {"competency_pool_size", pool.size()},
                {"molecule_count", molecules},
                {"skill_function", mm.is_skill_function()},
                {"conjunctive", mm.is_conjunctive()},
                {"disjunctive", mm.is_disjunctive()}};
}

Json delineation_json(const FuzzySkillMultimap& mm, const DelineationResult& dr) {
    Json states = Json::array();
    for (std::size_t i = 0; i < dr.structure.state_count(); ++i) {
        states.push_back(Json{
            {"state", names_json(dr.structure.states()[i], dr.structure.items())},
            {"witness", fuzzy_set_to_json(dr.witnesses[i], mm.skills())}});
    }
    return Json{{"structure", structure_to_json(dr.structure)},
                {"states", std::move(states)},
                {"pool_size", dr.pool.size()},
                {"joins_evaluated", dr.joins_evaluated}};
}

Json structure_classification_json(const KnowledgeStructure& ks) {
    const bool uc = ks.is_union_closed();
    const bool ic = ks.is_intersection_closed();
    return Json{{"state_count", ks.state_count()},
                {"union_closed", uc},
                {"intersection_closed", ic},
                {"quasi_ordinal", uc && ic},
                {"well_graded", ks.is_well_graded()},
                {"accessible", ks.is_accessible()},
                {"knowledge_space", uc},
                {"simple_closure_space", ic},
                {"learning_space", ks.is_learning_space()},
                {"T0", ks.is_T0()},
                {"T1", ks.is_T1()},
                {"discriminative", ks.is_discriminative()},
                {"bi_discriminative", ks.is_bidiscriminative()}};
}

Json classification_json(const FuzzySkillMultimap& mm, const DelineationResult& dr) {
    const LearningSpaceConditions ls = learning_space_conditions(mm);
    Json conditions{
        {"molecule_cover", molecule_cover_condition(mm)},
        {"meet_refinement", meet_refinement_condition(mm)},
        {"union_base", union_base_condition(mm, dr.structure)},
        {"join_stability", join_stability_condition(mm)},
        {"learning_space",
         Json{{"finite", ls.finite},
              {"molecule_cover", ls.molecule_cover},
              {"chain_condition", ls.chain_condition},
              {"all", ls.all()}}}};
    return Json{{"structure", structure_classification_json(dr.structure)},
                {"conditions", std::move(conditions)}};
}

Json condition_report_json(const ConditionReport& rep) {
    Json statements = Json::array();
    for (const Statement& s : rep.statements) {
        statements.push_back(Json{{"label", s.label}, {"value", s.value}});
    }
    Json out{{"id", rep.id},
             {"hypothesis_met", rep.hypothesis_met},
             {"holds", verdict_name(rep.holds)}};
    if (rep.oracle) {
        out["oracle"] = *rep.oracle;
    } else {
        out["oracle"] = nullptr;
    }
    out["statements"] = std::move(statements);
    if (!rep.witness.empty()) out["witness"] = rep.witness;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

Json separability_json(const FuzzySkillMultimap& mm, const DelineationResult& dr) {
    Json reports = Json::array();
    reports.push_back(condition_report_json(separability_by_families(mm, dr.structure)));
    reports.push_back(condition_report_json(separability_by_minima(mm, dr.structure)));
    reports.push_back(condition_report_json(biseparability_by_minima(mm, dr.structure)));
    reports.push_back(
        condition_report_json(biseparability_by_refinement(mm, dr.structure)));
    reports.push_back(
        condition_report_json(separability_by_global_minima(mm, dr.structure)));
    return Json{{"discriminative", dr.structure.is_discriminative()},
                {"bi_discriminative", dr.structure.is_bidiscriminative()},
                {"reports", std::move(reports)}};
}

Json quotient_json(const KnowledgeStructure& ks) {
    const QuotientResult q = quotient(ks);
    Json classes = Json::array();
    for (std::size_t c = 0; c < q.classes.size(); ++c) {
        classes.push_back(Json{{"label", q.quotient.items()[c]},
                               {"members", q.classes[c]}});
    }
    return Json{{"discriminative", ks.is_discriminative()},
                {"classes", std::move(classes)},
                {"structure", structure_to_json(q.quotient)}};
}

Json fringes_json(const KnowledgeStructure& ks, StateMask state) {
    const KnowledgeStructure::Fringes f = ks.fringes(state);
    return Json{{"state", names_json(state, ks.items())},
                {"inner", names_json(f.inner, ks.items())},
                {"outer", names_json(f.outer, ks.items())}};
}

Json fringes_json(const FuzzySkillMultimap& mm, const DelineationResult& dr,
                  StateMask state) {
    Json out = fringes_json(dr.structure, state);
    const KnowledgeStructure::Fringes f = dr.structure.fringes(state);
    Json outer_witnesses = Json::object();
    for (std::size_t q = 0; q < mm.item_count(); ++q) {
        if (!(f.outer >> q & 1)) continue;
        if (auto w = outer_fringe_witness(mm, dr.structure, state, q)) {
            outer_witnesses[mm.item(q)] = fuzzy_set_to_json(*w, mm.skills());
        }
    }
    Json inner_witnesses = Json::object();
    for (std::size_t r = 0; r < mm.item_count(); ++r) {
        if (!(f.inner >> r & 1)) continue;
        if (auto w = inner_fringe_witness(mm, dr.structure, state, r)) {
            Json per_item = Json::object();
            for (const auto& [q, molecule] : *w) {
                per_item[mm.item(q)] = fuzzy_set_to_json(molecule, mm.skills());
            }
            inner_witnesses[mm.item(r)] = std::move(per_item);
        }
    }
    out["outer_witnesses"] = std::move(outer_witnesses);
    out["inner_witnesses"] = std::move(inner_witnesses);
    return out;
}

Json restriction_json(const RestrictionResult& rr) {
    Json dropped = Json::array();
    for (const auto& [item, competency] : rr.dropped) {
        dropped.push_back(Json{{"item", item}, {"competency", competency}});
    }
    return Json{{"multimap", multimap_to_json(rr.multimap)},
                {"dropped_any", rr.dropped_any},
                {"dropped", std::move(dropped)}};
}

Json mesh_json(const MeshCheck& mc) {
    Json parts = Json::array();
    for (std::size_t i = 0; i < mc.part_matches.size(); ++i) {
        Json p{{"matches", static_cast<bool>(mc.part_matches[i])}};
        if (!mc.mismatch[i].empty()) p["why"] = mc.mismatch[i];
        parts.push_back(std::move(p));
    }
    return Json{{"mesh", mc.mesh()},
                {"items_cover", mc.items_cover},
                {"parts", std::move(parts)}};
}

Json merge_json(const MergeResult& mr, const MergeAnalysis& an) {
    Json parts = Json::array();
    for (std::size_t i = 0; i < mr.parts.size(); ++i) {
        parts.push_back(Json{{"items", mr.parts[i].original.items()},
                             {"skills", mr.parts[i].original.skills().names()},
                             {"structure", structure_to_json(an.parts[i].structure)}});
    }
    const ConsistencyReport consistency = check_consistency(mr, an);
    return Json{{"merged", multimap_to_json(mr.merged)},
                {"distributed", mr.distributed},
                {"structure", structure_to_json(an.merged.structure)},
                {"parts", std::move(parts)},
                {"consistent", consistency.consistent},
                {"mesh", mesh_json(consistency.mesh)},
                {"conditions",
                 Json::array({condition_report_json(component_competency_condition(mr, an)),
                              condition_report_json(component_support_condition(mr, an))})}};
}

Json report_json(const FuzzySkillMultimap& mm, const DelineationResult& dr) {
    return Json{{"summary", summary_json(mm)},
                {"delineation", delineation_json(mm, dr)},
                {"classification", classification_json(mm, dr)},
                {"separability", separability_json(mm, dr)}};
}

} // namespace kst
