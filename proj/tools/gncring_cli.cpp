// Command-line front end: build, classify, decompose, suite, scan-zn.
// Exit codes: 0 success, 1 check failure (or false predicate under --assert), 2 input error, 3 capacity.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gncring/gncring.hpp"

namespace {

using namespace gncring;

struct Globals {
    std::uint64_t cap = BuildOptions{}.carrier_cap;
    std::uint64_t validate_bound = ValidationOptions{}.bound;
    unsigned jobs = 1;
    std::uint64_t seed = ValidationOptions{}.seed;
    std::vector<std::string> defines; // NAME=FILE
    std::string format = "json";
    bool no_timing = false;

    BuildOptions build() const {
        BuildOptions b;
        b.carrier_cap = cap;
        return b;
    }
    ValidationOptions validation() const {
        ValidationOptions v;
        v.bound = validate_bound;
        v.seed = seed;
        return v;
    }
    NamedRings named() const {
        NamedRings n = default_named_rings();
        for (const auto& d : defines) {
            auto eq = d.find('=');
            if (eq == std::string::npos || eq == 0) throw input_error("--define expects NAME=FILE, got '" + d + "'");
            n.insert_or_assign(d.substr(0, eq), load_cayley_file(d.substr(eq + 1), validation()));
        }
        return n;
    }
};

void emit(const Globals& g, const Json& report) {
    if (g.format == "md") std::cout << render_markdown(report);
    else std::cout << report.dump(2) << "\n";
}

FiniteRing ring_from(const Globals& g, const std::string& expr, const std::string& load) {
    if (!load.empty()) return load_cayley_file(load, g.validation());
    if (expr.empty()) throw input_error("expected a ring expression or --load FILE");
    return build_ring(expr, g.build(), g.named());
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::string> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open catalog " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(to_string(parse_ring_expr(line.substr(b, e - b + 1))));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Finite-ring laboratory: constructions, classifiers and a theorem-check suite"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--cap", g.cap, "carrier cap for constructions");
    app.add_option("--validate-bound", g.validate_bound, "exhaustive validation up to this size");
    app.add_option("--jobs", g.jobs, "parallel checks in suite");
    app.add_option("--seed", g.seed, "seed for sampled validation");
    app.add_option("--define", g.defines, "register a named ring from Cayley JSON: NAME=FILE");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "md"}));

    std::string expr, load, save, props, kind, catalog, only;
    std::uint64_t element = 0, max_n = 64;
    bool assert_flag = false;

    auto* build = app.add_subcommand("build", "construct and validate a ring");
    build->add_option("expr", expr, "ring expression")->required();
    build->add_option("--save", save, "write Cayley JSON");

    auto* classify = app.add_subcommand("classify", "ring-level predicates");
    classify->add_option("expr", expr, "ring expression");
    classify->add_option("--load", load, "Cayley JSON input");
    classify->add_option("--props", props, "comma-separated properties (default: all)");
    classify->add_flag("--assert", assert_flag, "exit 1 when a listed property is false");

    auto* decomp = app.add_subcommand("decompose", "decompose one element");
    decomp->add_option("expr", expr, "ring expression");
    decomp->add_option("--load", load, "Cayley JSON input");
    decomp->add_option("--element", element, "carrier index")->required();
    decomp->add_option("--kind", kind, "clean | nil_clean | strongly_nil_clean")->required();

    auto* suite = app.add_subcommand("suite", "run the theorem checks");
    suite->add_option("--catalog", catalog, "file with one ring expression per line");
    suite->add_option("--only", only, "comma-separated check ids");
    suite->add_flag("--no-timing", g.no_timing, "omit runtimes for byte-stable output");

    auto* scan = app.add_subcommand("scan-zn", "classify Z_n for n = 1..max");
    scan->add_option("--max", max_n, "largest n")->required();

    for (auto* sub : {build, classify, decomp, suite, scan})
        sub->add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (build->parsed()) {
        FiniteRing r = build_ring(expr, g.build(), g.named());
        ValidationReport v = validate(r, g.validation());
        Json rep{{"command", "build"}, {"ring", r.label()}, {"size", r.size()}, {"materialized", r.materialized()},
                 {"validation", validation_json(v)}};
        if (!save.empty() && v.valid) {
            save_cayley_file(r, save);
            rep["saved"] = save;
        }
        emit(g, rep);
        return v.valid ? 0 : 1;
    }
    if (classify->parsed()) {
        FiniteRing r = ring_from(g, expr, load);
        ValidationReport v = validate(r, g.validation());
        if (!v.valid) throw input_error(r.label() + " violates " + v.axiom);
        std::vector<Property> list;
        for (const auto& p : split_list(props)) list.push_back(parse_property(p));
        const bool full = list.empty();
        RingProfile prof = full ? ring_profile(r) : ring_profile(r, list);
        Json rep{{"command", "classify"}, {"ring", r.label()}, {"size", r.size()}, {"validation", validation_json(v)},
                 {"verdicts", profile_json(r, prof)}};
        if (full) rep["semilocal_branch"] = to_string(semilocal_branch(r));
        emit(g, rep);
        if (assert_flag)
            for (const auto& [p, verdict] : prof.verdicts)
                if (!verdict.holds) return 1;
        return 0;
    }
    if (decomp->parsed()) {
        FiniteRing r = ring_from(g, expr, load);
        DecompositionKind k = parse_decomposition_kind(kind);
        if (element >= r.size())
            throw input_error("element " + std::to_string(element) + " out of range for " + r.label());
        auto result = decompose(r, Index(element), k);
        emit(g, Json{{"command", "decompose"}, {"ring", r.label()}, {"size", r.size()},
                     {"decomposition", decomposition_json(r, result)}});
        return 0;
    }
    if (suite->parsed()) {
        HarnessOptions h;
        h.build = g.build();
        h.validation = g.validation();
        h.jobs = g.jobs;
        RingContext ctx(h, g.named());
        std::vector<std::string> cat = catalog.empty() ? default_catalog(g.cap) : read_catalog(catalog);
        SuiteReport rep = run_all(cat, ctx, default_checks(), split_list(only));
        Json j = suite_json(rep, !g.no_timing);
        Json out{{"command", "suite"}, {"format", g.format}};
        out["catalog_size"] = cat.size();
        out["results"] = j["results"];
        out["summary"] = j["summary"];
        emit(g, out);
        return rep.summary.fail == 0 ? 0 : 1;
    }
    if (scan->parsed()) {
        auto rows = scan_zn(max_n, g.build());
        bool ok = true;
        for (const auto& r : rows) ok = ok && r.gnc == r.prime_power;
        emit(g, Json{{"command", "scan-zn"}, {"max", max_n}, {"rows", scan_json(rows)}, {"all_agree", ok}});
        return ok ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gncring::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const gncring::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
