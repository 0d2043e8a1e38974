#include "kst/capi.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "kst/error.hpp"
#include "kst/io.hpp"

struct kst_multimap {
    kst::FuzzySkillMultimap value;
};

struct kst_structure {
    kst::KnowledgeStructure value;
};

namespace {

constexpr const char* kVersion = "1.0.0";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error) *error = dup_string(message);
}

template <typename F>
int guarded(char** error, F&& body) {
    try {
        body();
        return KST_OK;
    } catch (const kst::InputError& e) {
        set_error(error, e.what());
        return KST_ERR_INPUT;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return KST_ERR_INTERNAL;
    } catch (...) {
        set_error(error, "unknown error");
        return KST_ERR_INTERNAL;
    }
}

void emit(char** json, const kst::Json& doc) {
    if (json) *json = dup_string(doc.dump(2));
}

kst::DelineationOptions options_for(size_t max_competencies) {
    kst::DelineationOptions opts;
    if (max_competencies > 0) opts.max_competencies = max_competencies;
    return opts;
}

std::vector<std::string> name_list(const char* const* names, size_t n) {
    kst::detail::require(names != nullptr || n == 0, "name array is null");
    std::vector<std::string> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        kst::detail::require(names[i] != nullptr, "name array contains a null entry");
        out.emplace_back(names[i]);
    }
    return out;
}

kst::StateMask state_from_names(const kst::KnowledgeStructure& ks,
                                const char* const* items, size_t n) {
    kst::StateMask mask = 0;
    for (const std::string& name : name_list(items, n)) {
        auto i = ks.item_index(name);
        if (!i) throw kst::InputError("unknown item: " + name);
        mask |= kst::StateMask{1} << *i;
    }
    return mask;
}

} // namespace

extern "C" {

const char* kst_version(void) { return kVersion; }

void kst_string_free(char* s) { std::free(s); }

int kst_multimap_parse(const char* text, kst_multimap** out, char** error) {
    return guarded(error, [&] {
        kst::detail::require(text != nullptr, "input text is null");
        kst::detail::require(out != nullptr, "output handle is null");
        *out = new kst_multimap{kst::parse_multimap(text)};
    });
}

void kst_multimap_free(kst_multimap* mm) { delete mm; }

int kst_multimap_to_json(const kst_multimap* mm, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        emit(json, kst::multimap_to_json(mm->value));
    });
}

int kst_structure_parse(const char* text, kst_structure** out, char** error) {
    return guarded(error, [&] {
        kst::detail::require(text != nullptr, "input text is null");
        kst::detail::require(out != nullptr, "output handle is null");
        *out = new kst_structure{kst::parse_structure(text)};
    });
}

void kst_structure_free(kst_structure* ks) { delete ks; }

int kst_structure_to_json(const kst_structure* ks, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(ks != nullptr, "structure handle is null");
        emit(json, kst::structure_to_json(ks->value));
    });
}

int kst_validate(const kst_multimap* mm, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        kst::Json out = kst::summary_json(mm->value);
        out["valid"] = true;
        emit(json, out);
    });
}

int kst_delineate(const kst_multimap* mm, size_t max_competencies,
                  kst_structure** structure_out, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::DelineationResult dr =
            kst::delineate(mm->value, options_for(max_competencies));
        if (structure_out) *structure_out = new kst_structure{dr.structure};
        emit(json, kst::delineation_json(mm->value, dr));
    });
}

int kst_classify(const kst_multimap* mm, size_t max_competencies, char** json,
                 char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::DelineationResult dr =
            kst::delineate(mm->value, options_for(max_competencies));
        emit(json, kst::classification_json(mm->value, dr));
    });
}

int kst_classify_structure(const kst_structure* ks, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(ks != nullptr, "structure handle is null");
        emit(json, kst::structure_classification_json(ks->value));
    });
}

int kst_separability(const kst_multimap* mm, size_t max_competencies, char** json,
                     char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::DelineationResult dr =
            kst::delineate(mm->value, options_for(max_competencies));
        emit(json, kst::separability_json(mm->value, dr));
    });
}

int kst_quotient(const kst_structure* ks, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(ks != nullptr, "structure handle is null");
        emit(json, kst::quotient_json(ks->value));
    });
}

int kst_fringes(const kst_structure* ks, const char* const* state_items,
                size_t n_items, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(ks != nullptr, "structure handle is null");
        const kst::StateMask state = state_from_names(ks->value, state_items, n_items);
        emit(json, kst::fringes_json(ks->value, state));
    });
}

int kst_fringes_with_witnesses(const kst_multimap* mm, size_t max_competencies,
                               const char* const* state_items, size_t n_items,
                               char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::DelineationResult dr =
            kst::delineate(mm->value, options_for(max_competencies));
        const kst::StateMask state = state_from_names(dr.structure, state_items, n_items);
        emit(json, kst::fringes_json(mm->value, dr, state));
    });
}

int kst_merge(const kst_multimap* const* parts, size_t n_parts, int permissive,
              size_t max_competencies, char** json, char** error) {
    return guarded(error, [&] {
        if (n_parts == 0) throw kst::InputError("merge: at least one part is required");
        kst::detail::require(parts != nullptr, "part array is null");
        std::vector<kst::FuzzySkillMultimap> inputs;
        inputs.reserve(n_parts);
        for (size_t i = 0; i < n_parts; ++i) {
            kst::detail::require(parts[i] != nullptr, "part handle is null");
            inputs.push_back(parts[i]->value);
        }
        const kst::MergeResult mr = kst::merge(inputs, permissive != 0);
        const kst::MergeAnalysis an =
            kst::analyze_merge(mr, options_for(max_competencies));
        emit(json, kst::merge_json(mr, an));
    });
}

int kst_mesh(const kst_structure* parent, const kst_structure* const* parts,
             size_t n_parts, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(parent != nullptr, "parent handle is null");
        if (n_parts == 0) throw kst::InputError("mesh: at least one part is required");
        kst::detail::require(parts != nullptr, "part array is null");
        std::vector<kst::KnowledgeStructure> inputs;
        inputs.reserve(n_parts);
        for (size_t i = 0; i < n_parts; ++i) {
            kst::detail::require(parts[i] != nullptr, "part handle is null");
            inputs.push_back(parts[i]->value);
        }
        emit(json, kst::mesh_json(kst::mesh_check(parent->value, inputs)));
    });
}

int kst_restrict_skills(const kst_multimap* mm, const char* const* skills,
                        size_t n_skills, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        emit(json, kst::restriction_json(
                       kst::zero_restrict(mm->value, name_list(skills, n_skills))));
    });
}

int kst_restrict_items(const kst_multimap* mm, const char* const* items,
                       size_t n_items, char** json, char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::FuzzySkillMultimap sub =
            kst::submultimap(mm->value, name_list(items, n_items));
        emit(json, kst::multimap_to_json(sub));
    });
}

int kst_report(const kst_multimap* mm, size_t max_competencies, char** json,
               char** error) {
    return guarded(error, [&] {
        kst::detail::require(mm != nullptr, "multimap handle is null");
        const kst::DelineationResult dr =
            kst::delineate(mm->value, options_for(max_competencies));
        emit(json, kst::report_json(mm->value, dr));
    });
}

} // extern "C"
