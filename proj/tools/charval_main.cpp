// charval: exact character tables and character-value classification for
// small finite groups.
//
// Subcommands: table, cv, verify, scan. Groups are named either by family
// specs (family:sym(4), family:gendihedral(3^2), ...) or by catalog records
// (file:data/catalog.txt#o18_03). Machine-readable output is a single JSON
// document with a schema_version field; identical invocations produce
// byte-identical output.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "charval/analysis.hpp"
#include "charval/catalog.hpp"
#include "charval/families.hpp"
#include "charval/report.hpp"

using namespace charval;

namespace {

struct GlobalOpts {
    int cap = kDefaultOrderCap;
    unsigned long long seed = 0;
    std::string format = "text";
    int jobs = 1;
    std::vector<std::string> predicates;  // empty = all
};

const std::vector<std::string> kAllPredicates{
    "lemma-zero",       "lemma-cv-abelian", "prop-very-few", "four-value-lemmas",
    "theorem",          "orthogonality",    "remark-five",   "remark-solvable"};

bool predicate_selected(const GlobalOpts& opts, const std::string& name) {
    if (opts.predicates.empty()) return true;
    for (const auto& p : opts.predicates)
        if (p == name) return true;
    return false;
}

void validate_predicates(const GlobalOpts& opts) {
    for (const auto& p : opts.predicates) {
        bool known = false;
        for (const auto& k : kAllPredicates) known = known || k == p;
        if (!known) throw ParseError("unknown predicate '" + p + "'");
    }
}

FiniteGroup resolve_group_spec(const std::string& spec, int cap) {
    if (spec.rfind("family:", 0) == 0) return make_family(spec.substr(7), cap);
    if (spec.rfind("file:", 0) == 0) {
        std::string rest = spec.substr(5);
        std::size_t hash = rest.find('#');
        if (hash == std::string::npos)
            throw ParseError("group spec '" + spec + "' needs file:<path>#<name>");
        std::string path = rest.substr(0, hash);
        std::string name = rest.substr(hash + 1);
        CatalogParseResult parsed = parse_catalog_file(path);
        for (const auto& rec : parsed.records)
            if (rec.name == name) return load_group(rec, cap);
        throw ParseError("no record named '" + name + "' in " + path);
    }
    throw ParseError("group spec must start with family: or file:, got '" + spec + "'");
}

std::string class_label(const ConjugacyData& classes, int j) {
    int order = classes.element_orders[j];
    int nth = 0;
    for (int i = 0; i < j; ++i)
        if (classes.element_orders[i] == order) ++nth;
    std::string label = std::to_string(order);
    label += static_cast<char>('A' + (nth % 26));
    return label;
}

void print_table_text(const CharacterTable& T) {
    std::printf("Character table of %s (order %ld, exponent %ld, prime %llu, seed %llu)\n",
                T.group_name.c_str(), T.group_order, T.exponent,
                static_cast<unsigned long long>(T.prime),
                static_cast<unsigned long long>(T.seed));
    const int r = T.num_classes();
    std::vector<std::string> labels(r);
    std::size_t width = 8;
    std::vector<std::vector<std::string>> cells(T.num_rows(), std::vector<std::string>(r));
    for (int j = 0; j < r; ++j) labels[j] = class_label(T.classes, j);
    for (int i = 0; i < T.num_rows(); ++i)
        for (int j = 0; j < r; ++j) {
            cells[i][j] = T.values[i][j].to_string();
            width = std::max(width, cells[i][j].size() + 2);
        }

    std::printf("%-8s", "class");
    for (int j = 0; j < r; ++j) std::printf("%*s", static_cast<int>(width), labels[j].c_str());
    std::printf("\n%-8s", "size");
    for (int j = 0; j < r; ++j)
        std::printf("%*d", static_cast<int>(width), T.classes.class_sizes[j]);
    std::printf("\n");
    for (int i = 0; i < T.num_rows(); ++i) {
        std::string rowname = "X" + std::to_string(i + 1);
        std::printf("%-8s", rowname.c_str());
        for (int j = 0; j < r; ++j)
            std::printf("%*s", static_cast<int>(width), cells[i][j].c_str());
        std::printf("\n");
    }

    // display-only decimal approximations for non-rational values
    std::vector<std::string> seen;
    for (int i = 0; i < T.num_rows(); ++i)
        for (int j = 0; j < r; ++j) {
            if (T.values[i][j].as_rational_integer()) continue;
            std::string s = cells[i][j];
            bool dup = false;
            for (const auto& t : seen) dup = dup || t == s;
            if (dup) continue;
            seen.push_back(s);
            auto [re, im] = T.values[i][j].approx();
            if (seen.size() == 1) std::printf("approx (display only):\n");
            if (std::abs(im) < 1e-12)
                std::printf("  %s ~ %.6f\n", s.c_str(), re);
            else
                std::printf("  %s ~ %.6f%+.6fi\n", s.c_str(), re, im);
        }
}

Json config_json(const GlobalOpts& opts) {
    Json preds = Json::array();
    for (const auto& p : opts.predicates) preds.push_back(p);
    return Json{{"cap", opts.cap},
                {"seed", opts.seed},
                {"format", opts.format},
                {"jobs", opts.jobs},
                {"predicates", std::move(preds)}};
}

void emit_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_table(const GlobalOpts& opts, const std::string& spec) {
    FiniteGroup G = resolve_group_spec(spec, opts.cap);
    CharacterTable T = dixon_schneider(G, opts.seed);
    if (opts.format == "json") {
        Json doc{{"schema_version", kSchemaVersion},
                 {"kind", "table"},
                 {"config", config_json(opts)},
                 {"table", table_to_json(T)}};
        emit_json(doc);
    } else {
        print_table_text(T);
    }
    return 0;
}

int run_cv(const GlobalOpts& opts, const std::string& spec) {
    FiniteGroup G = resolve_group_spec(spec, opts.cap);
    CharacterTable T = dixon_schneider(G, opts.seed);
    ValueProfile profile = value_profile(T);
    if (opts.format == "json") {
        Json doc{{"schema_version", kSchemaVersion},
                 {"kind", "cv"},
                 {"config", config_json(opts)},
                 {"group", Json{{"name", G.name()}, {"order", G.order()}}},
                 {"profile", profile_to_json(profile)}};
        emit_json(doc);
    } else {
        std::printf("group %s (order %d)\n", G.name().c_str(), G.order());
        std::printf("cv_size %d\n", profile.cv_size);
        std::printf("cv {");
        for (std::size_t i = 0; i < profile.cv.size(); ++i)
            std::printf("%s%s", i ? ", " : "", profile.cv[i].to_string().c_str());
        std::printf("}\n");
        std::printf("cd {");
        for (std::size_t i = 0; i < profile.cd.size(); ++i)
            std::printf("%s%d", i ? ", " : "", profile.cd[i]);
        std::printf("}\n");
        std::printf("b %d\n", profile.b);
        std::printf("has_zero %s\n", profile.has_zero ? "true" : "false");
    }
    return 0;
}

struct FleetOutcome {
    int exit_code = 0;
    Json doc;
    std::vector<std::string> lines;
};

FleetOutcome run_fleet(const GlobalOpts& opts, std::vector<FiniteGroup> fleet,
                       const std::vector<std::string>& warnings, const char* kind,
                       bool fleet_predicates) {
    FleetOutcome out;
    std::vector<ClassificationReport> reports = analyze_fleet(fleet, opts.seed, opts.jobs);

    int fails = 0, warns = 0;
    Json groups = Json::array();
    for (const auto& r : reports) {
        Json jr = report_to_json(r);
        Json selected = Json::object();
        for (const auto& [name, v] : r.verdicts) {
            if (!predicate_selected(opts, name)) continue;
            selected[name] = verdict_to_json(v);
            if (v.status == Status::Fail) ++fails;
            if (v.status == Status::Warn) ++warns;
            if (v.status == Status::Fail || v.status == Status::Warn)
                out.lines.push_back(std::string(status_name(v.status)) + " " + r.name + " " +
                                    name + ": " + v.detail);
        }
        jr["verdicts"] = std::move(selected);
        groups.push_back(std::move(jr));
    }

    Json fleet_json = Json::object();
    if (fleet_predicates) {
        if (predicate_selected(opts, "remark-five")) {
            Verdict v = check_remark_five(reports);
            fleet_json["remark-five"] = verdict_to_json(v);
            if (v.status == Status::Fail) {
                ++fails;
                out.lines.push_back(std::string("FAIL fleet remark-five: ") + v.detail);
            }
        }
        if (predicate_selected(opts, "remark-solvable")) {
            Verdict v = check_remark_solvable(reports);
            fleet_json["remark-solvable"] = verdict_to_json(v);
            if (v.status == Status::Warn) {
                ++warns;
                out.lines.push_back(std::string("WARN fleet remark-solvable: ") + v.detail);
            }
        }
        Json four = Json::array();
        int five_two_groups = 0;
        for (const auto& r : reports) {
            if (!r.abelian && r.profile.cv_size == 4) four.push_back(r.name);
            long n = r.order;
            while (n % 2 == 0) n /= 2;
            if (n == 1 && r.profile.cv_size == 5) ++five_two_groups;
        }
        fleet_json["four_value_groups"] = std::move(four);
        fleet_json["five_value_two_groups"] = five_two_groups;
    }

    Json jwarnings = Json::array();
    for (const auto& w : warnings) jwarnings.push_back(w);
    out.doc = Json{{"schema_version", kSchemaVersion},
                   {"kind", kind},
                   {"config", config_json(opts)},
                   {"catalog_warnings", std::move(jwarnings)},
                   {"groups", std::move(groups)},
                   {"fleet", std::move(fleet_json)},
                   {"summary", Json{{"groups", reports.size()},
                                    {"fail", fails},
                                    {"warn", warns}}}};
    out.exit_code = fails ? 1 : 0;
    return out;
}

void print_fleet_text(const FleetOutcome& out) {
    const Json& doc = out.doc;
    for (const auto& g : doc["groups"]) {
        std::string line = g["name"].get<std::string>();
        line += " (order " + std::to_string(g["order"].get<long>()) + ")";
        line += " cv_size=" + std::to_string(g["profile"]["cv_size"].get<int>());
        line += ":";
        for (auto it = g["verdicts"].begin(); it != g["verdicts"].end(); ++it)
            line += " " + it.key() + "=" + (*it)["status"].get<std::string>();
        std::printf("%s\n", line.c_str());
    }
    if (doc.contains("fleet"))
        for (auto it = doc["fleet"].begin(); it != doc["fleet"].end(); ++it) {
            if (it->is_object() && it->contains("status"))
                std::printf("fleet %s: %s\n", it.key().c_str(),
                            (*it)["status"].get<std::string>().c_str());
        }
    for (const auto& l : out.lines) std::printf("%s\n", l.c_str());
    std::printf("summary: %zu groups, %d FAIL, %d WARN\n",
                doc["summary"]["groups"].get<std::size_t>(), doc["summary"]["fail"].get<int>(),
                doc["summary"]["warn"].get<int>());
}

int run_verify(const GlobalOpts& opts, const std::vector<std::string>& specs) {
    std::vector<FiniteGroup> fleet;
    std::vector<std::string> warnings;
    for (const auto& spec : specs) {
        if (spec.rfind("file:", 0) == 0 && spec.find('#') == std::string::npos) {
            CatalogParseResult parsed = parse_catalog_file(spec.substr(5));
            for (const auto& w : parsed.warnings) warnings.push_back(w);
            for (const auto& rec : parsed.records) fleet.push_back(load_group(rec, opts.cap));
        } else {
            fleet.push_back(resolve_group_spec(spec, opts.cap));
        }
    }
    FleetOutcome out = run_fleet(opts, std::move(fleet), warnings, "verify", false);
    if (opts.format == "json") emit_json(out.doc);
    else print_fleet_text(out);
    return out.exit_code;
}

int run_scan(const GlobalOpts& opts, const std::vector<std::string>& paths,
             bool include_families) {
    std::vector<FiniteGroup> fleet;
    std::vector<std::string> warnings;
    for (const auto& path : paths) {
        CatalogParseResult parsed = parse_catalog_file(path);
        for (const auto& w : parsed.warnings) warnings.push_back(w);
        for (const auto& rec : parsed.records) fleet.push_back(load_group(rec, opts.cap));
    }
    if (include_families)
        for (auto& G : builtin_fleet(opts.cap)) fleet.push_back(std::move(G));
    FleetOutcome out = run_fleet(opts, std::move(fleet), warnings, "scan", true);
    if (opts.format == "json") emit_json(out.doc);
    else print_fleet_text(out);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character tables and character-value classification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts opts;
    app.add_option("--cap", opts.cap, "group order cap")->envname("CHARVAL_CAP");
    app.add_option("--seed", opts.seed, "eigenspace-splitting seed");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opts.jobs, "parallel workers for scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--predicates", opts.predicates, "comma-separated predicate subset")
        ->delimiter(',');

    std::string table_spec, cv_spec;
    auto* cmd_table = app.add_subcommand("table", "print the exact character table");
    cmd_table->add_option("group", table_spec, "family:<spec> or file:<path>#<name>")
        ->required();
    auto* cmd_cv = app.add_subcommand("cv", "print the character value profile");
    cmd_cv->add_option("group", cv_spec, "family:<spec> or file:<path>#<name>")->required();

    std::vector<std::string> verify_specs;
    auto* cmd_verify = app.add_subcommand("verify", "run predicates on specific groups");
    cmd_verify->add_option("groups", verify_specs, "group specs (file:<path> loads all records)")
        ->required();

    std::vector<std::string> scan_paths;
    bool no_families = false;
    auto* cmd_scan = app.add_subcommand("scan", "fleet scan over catalogs plus built-in families");
    cmd_scan->add_option("catalogs", scan_paths, "catalog files");
    cmd_scan->add_flag("--no-families", no_families, "skip the built-in constructed families");

    CLI11_PARSE(app, argc, argv);

    try {
        validate_predicates(opts);
        if (opts.cap < 1) throw ParseError("--cap must be >= 1");
        if (cmd_table->parsed()) return run_table(opts, table_spec);
        if (cmd_cv->parsed()) return run_cv(opts, cv_spec);
        if (cmd_verify->parsed()) return run_verify(opts, verify_specs);
        if (cmd_scan->parsed()) {
            if (scan_paths.empty() && no_families)
                throw ParseError("scan needs at least one catalog or the built-in families");
            return run_scan(opts, scan_paths, !no_families);
        }
    } catch (const LiftInconsistent& ex) {
        std::fprintf(stderr, "internal verification failure: %s\n", ex.what());
        return 4;
    } catch (const ClosureExceedsCap& ex) {
        std::fprintf(stderr, "cap exceeded: %s\n", ex.what());
        return 3;
    } catch (const OrderCapExceeded& ex) {
        std::fprintf(stderr, "cap exceeded: %s\n", ex.what());
        return 3;
    } catch (const NoSuitablePrime& ex) {
        std::fprintf(stderr, "cap exceeded: %s\n", ex.what());
        return 3;
    } catch (const Error& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 0;
}
