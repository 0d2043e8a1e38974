// Command-line front end. All domain work goes through the C API in
// kst/capi.h; this file only handles files, arguments, and formatting.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kst/capi.h"

namespace {

using Json = nlohmann::ordered_json;

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { kst_string_free(p); }
};

struct OwnedMultimap {
    kst_multimap* h = nullptr;
    ~OwnedMultimap() { kst_multimap_free(h); }
};

struct OwnedStructure {
    kst_structure* h = nullptr;
    ~OwnedStructure() { kst_structure_free(h); }
};

struct MultimapList {
    std::vector<kst_multimap*> hs;
    ~MultimapList() {
        for (auto* h : hs) kst_multimap_free(h);
    }
};

struct StructureList {
    std::vector<kst_structure*> hs;
    ~StructureList() {
        for (auto* h : hs) kst_structure_free(h);
    }
};

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int report_failure(int rc, const OwnedString& err) {
    std::cerr << "error: " << (err.p ? err.p : "unknown error") << "\n";
    return rc;
}

bool looks_like_structure_text(const std::string& text) {
    const Json j = Json::parse(text, nullptr, false);
    return j.is_object() && j.contains("states");
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    if (csv.empty()) return out;
    std::string::size_type start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        out.push_back(csv.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<const char*> c_names(const std::vector<std::string>& names) {
    std::vector<const char*> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(n.c_str());
    return out;
}

// --- table rendering ---------------------------------------------------------

bool is_scalar(const Json& v) {
    return !v.is_object() && !v.is_array();
}

bool is_scalar_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& e : v) {
        if (!is_scalar(e)) return false;
    }
    return true;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string inline_array(const Json& v) {
    std::string out = "[";
    bool first = true;
    for (const Json& e : v) {
        if (!first) out += ", ";
        first = false;
        out += scalar_text(e);
    }
    return out + "]";
}

void render(const Json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value)) {
                os << pad << key << ": " << scalar_text(value) << "\n";
            } else if (is_scalar_array(value)) {
                os << pad << key << ": " << inline_array(value) << "\n";
            } else if (value.empty()) {
                os << pad << key << ": " << (value.is_object() ? "{}" : "[]") << "\n";
            } else {
                os << pad << key << ":\n";
                render(value, os, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const Json& e : j) {
            if (is_scalar(e)) {
                os << pad << "- " << scalar_text(e) << "\n";
            } else if (is_scalar_array(e)) {
                os << pad << "- " << inline_array(e) << "\n";
            } else {
                os << pad << "-\n";
                render(e, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

void output(const char* json_text, const std::string& format) {
    if (format == "table") {
        render(Json::parse(json_text), std::cout, 0);
    } else {
        std::cout << json_text << "\n";
    }
}

// --- loading -----------------------------------------------------------------

int load_multimap(const std::string& path, OwnedMultimap& mm) {
    const auto text = slurp(path);
    if (!text) {
        std::cerr << "error: cannot read file: " << path << "\n";
        return KST_ERR_INPUT;
    }
    OwnedString err;
    const int rc = kst_multimap_parse(text->c_str(), &mm.h, &err.p);
    if (rc != KST_OK) return report_failure(rc, err);
    return KST_OK;
}

// Load a structure from either document type, delineating multimaps.
int load_structure(const std::string& path, size_t max_competencies,
                   OwnedStructure& ks, bool force_structure) {
    const auto text = slurp(path);
    if (!text) {
        std::cerr << "error: cannot read file: " << path << "\n";
        return KST_ERR_INPUT;
    }
    OwnedString err;
    if (force_structure || looks_like_structure_text(*text)) {
        const int rc = kst_structure_parse(text->c_str(), &ks.h, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        return KST_OK;
    }
    OwnedMultimap mm;
    int rc = kst_multimap_parse(text->c_str(), &mm.h, &err.p);
    if (rc != KST_OK) return report_failure(rc, err);
    rc = kst_delineate(mm.h, max_competencies, &ks.h, nullptr, &err.p);
    if (rc != KST_OK) return report_failure(rc, err);
    return KST_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knowledge structures delineated by fuzzy skill multimaps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kst_version());

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    std::size_t max_competencies = 0;
    app.add_option("--max-competencies", max_competencies,
                   "cap on enumerated competencies during delineation (0 = default)");

    std::string file;
    std::string structure_file;
    std::string state_csv;
    std::string skills_csv;
    std::string items_csv;
    std::vector<std::string> part_files;
    std::string parent_file;
    bool permissive = false;

    CLI::App* validate = app.add_subcommand("validate", "check a document and summarize it");
    validate->add_option("file", file)->required();

    CLI::App* delineate = app.add_subcommand(
        "delineate", "enumerate the knowledge structure with per-state witnesses");
    delineate->add_option("file", file)->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "closure and gradedness properties, with multimap-side conditions");
    classify->add_option("file", file)->required();

    CLI::App* separability = app.add_subcommand(
        "separability", "discriminative/bi-discriminative characterisations");
    separability->add_option("file", file)->required();

    CLI::App* quotient_cmd = app.add_subcommand(
        "quotient", "collapse items contained in exactly the same states");
    quotient_cmd->add_option("file", file);
    quotient_cmd->add_option("--structure", structure_file,
                             "read a structure document instead of a multimap");

    CLI::App* fringes = app.add_subcommand("fringes", "inner and outer fringe of a state");
    fringes->add_option("file", file)->required();
    fringes->add_option("--state", state_csv, "comma-separated item names (empty = {})");

    CLI::App* merge_cmd = app.add_subcommand("merge", "merge part multimaps and analyze");
    merge_cmd->add_option("files", part_files, "part documents")->required()->expected(-1);
    merge_cmd->add_flag("--permissive", permissive,
                        "accept parts that are not fuzzy skill functions");

    CLI::App* mesh_cmd = app.add_subcommand("mesh", "check a mesh of structures");
    mesh_cmd->add_option("--parent", parent_file)->required();
    mesh_cmd->add_option("--part", part_files)->required()->expected(-1);

    CLI::App* restrict_cmd = app.add_subcommand(
        "restrict", "restrict a multimap to a skill subset or an item subset");
    restrict_cmd->add_option("file", file)->required();
    restrict_cmd->add_option("--skills", skills_csv, "comma-separated skill names");
    restrict_cmd->add_option("--items", items_csv, "comma-separated item names");

    CLI::App* report = app.add_subcommand("report", "full machine-readable report");
    report->add_option("file", file)->required();

    // Let global options (--format, --max-competencies) appear after the
    // subcommand name as well as before it.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    OwnedString err;
    OwnedString out;

    if (app.got_subcommand(validate)) {
        const auto text = slurp(file);
        if (!text) {
            std::cerr << "error: cannot read file: " << file << "\n";
            return 1;
        }
        if (looks_like_structure_text(*text)) {
            OwnedStructure ks;
            int rc = kst_structure_parse(text->c_str(), &ks.h, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            rc = kst_structure_to_json(ks.h, &out.p, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            Json doc = Json::parse(out.p);
            Json summary{{"valid", true},
                         {"type", "structure"},
                         {"items", doc["items"]},
                         {"state_count", doc["states"].size()}};
            const std::string text_out = summary.dump(2);
            output(text_out.c_str(), format);
            return 0;
        }
        OwnedMultimap mm;
        int rc = load_multimap(file, mm);
        if (rc != KST_OK) return rc;
        rc = kst_validate(mm.h, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(delineate)) {
        OwnedMultimap mm;
        int rc = load_multimap(file, mm);
        if (rc != KST_OK) return rc;
        rc = kst_delineate(mm.h, max_competencies, nullptr, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(classify)) {
        const auto text = slurp(file);
        if (!text) {
            std::cerr << "error: cannot read file: " << file << "\n";
            return 1;
        }
        int rc;
        if (looks_like_structure_text(*text)) {
            OwnedStructure ks;
            rc = kst_structure_parse(text->c_str(), &ks.h, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            rc = kst_classify_structure(ks.h, &out.p, &err.p);
        } else {
            OwnedMultimap mm;
            rc = kst_multimap_parse(text->c_str(), &mm.h, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            rc = kst_classify(mm.h, max_competencies, &out.p, &err.p);
        }
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(separability)) {
        OwnedMultimap mm;
        int rc = load_multimap(file, mm);
        if (rc != KST_OK) return rc;
        rc = kst_separability(mm.h, max_competencies, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(quotient_cmd)) {
        const bool has_file = !file.empty();
        const bool has_structure = !structure_file.empty();
        if (has_file == has_structure) {
            std::cerr << "error: quotient needs a file argument or --structure, not both\n";
            return 1;
        }
        OwnedStructure ks;
        const int loaded = load_structure(has_file ? file : structure_file,
                                          max_competencies, ks, has_structure);
        if (loaded != KST_OK) return loaded;
        const int rc = kst_quotient(ks.h, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(fringes)) {
        const auto text = slurp(file);
        if (!text) {
            std::cerr << "error: cannot read file: " << file << "\n";
            return 1;
        }
        const std::vector<std::string> state_names = split_csv(state_csv);
        const std::vector<const char*> names = c_names(state_names);
        int rc;
        if (looks_like_structure_text(*text)) {
            OwnedStructure ks;
            rc = kst_structure_parse(text->c_str(), &ks.h, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            rc = kst_fringes(ks.h, names.data(), names.size(), &out.p, &err.p);
        } else {
            OwnedMultimap mm;
            rc = kst_multimap_parse(text->c_str(), &mm.h, &err.p);
            if (rc != KST_OK) return report_failure(rc, err);
            rc = kst_fringes_with_witnesses(mm.h, max_competencies, names.data(),
                                            names.size(), &out.p, &err.p);
        }
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(merge_cmd)) {
        MultimapList parts;
        for (const std::string& path : part_files) {
            OwnedMultimap mm;
            const int rc = load_multimap(path, mm);
            if (rc != KST_OK) return rc;
            parts.hs.push_back(mm.h);
            mm.h = nullptr;
        }
        std::vector<const kst_multimap*> handles(parts.hs.begin(), parts.hs.end());
        const int rc = kst_merge(handles.data(), handles.size(), permissive ? 1 : 0,
                                 max_competencies, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(mesh_cmd)) {
        OwnedStructure parent;
        int rc = load_structure(parent_file, max_competencies, parent, false);
        if (rc != KST_OK) return rc;
        StructureList parts;
        for (const std::string& path : part_files) {
            OwnedStructure ks;
            rc = load_structure(path, max_competencies, ks, false);
            if (rc != KST_OK) return rc;
            parts.hs.push_back(ks.h);
            ks.h = nullptr;
        }
        std::vector<const kst_structure*> handles(parts.hs.begin(), parts.hs.end());
        rc = kst_mesh(parent.h, handles.data(), handles.size(), &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(restrict_cmd)) {
        const bool has_skills = restrict_cmd->count("--skills") > 0;
        const bool has_items = restrict_cmd->count("--items") > 0;
        if (has_skills == has_items) {
            std::cerr << "error: restrict needs exactly one of --skills or --items\n";
            return 1;
        }
        OwnedMultimap mm;
        int rc = load_multimap(file, mm);
        if (rc != KST_OK) return rc;
        if (has_skills) {
            const std::vector<std::string> names = split_csv(skills_csv);
            const std::vector<const char*> cnames = c_names(names);
            rc = kst_restrict_skills(mm.h, cnames.data(), cnames.size(), &out.p, &err.p);
        } else {
            const std::vector<std::string> names = split_csv(items_csv);
            const std::vector<const char*> cnames = c_names(names);
            rc = kst_restrict_items(mm.h, cnames.data(), cnames.size(), &out.p, &err.p);
        }
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    if (app.got_subcommand(report)) {
        OwnedMultimap mm;
        int rc = load_multimap(file, mm);
        if (rc != KST_OK) return rc;
        rc = kst_report(mm.h, max_competencies, &out.p, &err.p);
        if (rc != KST_OK) return report_failure(rc, err);
        output(out.p, format);
        return 0;
    }

    std::cerr << "error: no subcommand\n";
    return 1;
}
