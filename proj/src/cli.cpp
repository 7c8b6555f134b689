#include "freeact/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "freeact/classify.hpp"
#include "freeact/report.hpp"
#include "freeact/schreier.hpp"

namespace freeact {

namespace {

struct Options {
    std::string group;
    std::int64_t n = 0;
    std::int64_t genus = 0;
    std::int64_t bound = 30;
    bool weak = false;
    bool run_enumeration = false;
    std::string format = "table";
    std::uint64_t state_cap = kDefaultStateCap;
    int order_cap = kDefaultOrderCap;
    std::string vector_text;
    std::string export_path;

    bool has_n = false;
    bool has_genus = false;
};

void add_common(CLI::App* cmd, Options& opt, bool with_n) {
    cmd->add_option("group", opt.group, "group descriptor (cyclic:K, abelian:D1,D2,..., dihedral:R, quaternion, perm:...)")
        ->required();
    if (with_n) {
        auto* n_opt = cmd->add_option("--n", opt.n, "quotient rank n");
        auto* g_opt = cmd->add_option("--genus", opt.genus, "covering genus (must equal 1+|G|(n-1))");
        n_opt->excludes(g_opt);
        g_opt->excludes(n_opt);
    }
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    cmd->add_option("--state-cap", opt.state_cap, "orbit enumeration state cap");
    cmd->add_option("--order-cap", opt.order_cap, "group order cap");
}

// n from --n or --genus; genus must be 1 + |G|(n-1) for a positive n.
int resolve_n(const FiniteGroup& G, const Options& opt) {
    if (opt.has_n == opt.has_genus)
        throw std::invalid_argument("exactly one of --n and --genus is required");
    if (opt.has_n) {
        if (opt.n < 1) throw std::invalid_argument("--n must be positive");
        return static_cast<int>(opt.n);
    }
    const std::int64_t order = G.order();
    if (opt.genus < 1 || (opt.genus - 1) % order != 0)
        throw std::invalid_argument("genus " + std::to_string(opt.genus) +
                                    " is not of the form 1+" + std::to_string(order) +
                                    "(n-1)");
    return static_cast<int>(1 + (opt.genus - 1) / order);
}

void emit(std::ostream& out, const Options& opt, const std::string& table,
          const nlohmann::ordered_json& machine) {
    if (opt.format == "machine")
        out << machine.dump(2) << "\n";
    else
        out << table;
}

int run_classify(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    const int n = resolve_n(G, opt);
    const ClassificationReport report = classify_actions(G, n, opt.state_cap);
    emit(out, opt, render_report_table(G, report), report_to_json(G, report));
    return 0;
}

int run_formula(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    const int n = resolve_n(G, opt);
    const ClassificationReport formula = abelian_formula(G, n);
    if (!opt.run_enumeration) {
        emit(out, opt, render_report_table(G, formula), report_to_json(G, formula));
        return 0;
    }
    const ClassificationReport enumerated = classify_actions(G, n, opt.state_cap);
    const bool match = formula.counts_equal(enumerated);
    if (opt.format == "machine") {
        nlohmann::ordered_json j;
        j["formula"] = report_to_json(G, formula);
        j["enumeration"] = report_to_json(G, enumerated);
        j["match"] = match;
        out << j.dump(2) << "\n";
    } else {
        out << "closed form\n" << render_report_table(G, formula) << "\n";
        out << "enumeration\n" << render_report_table(G, enumerated) << "\n";
        out << "match: " << (match ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_spectrum(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    if (opt.bound < 1) throw std::invalid_argument("--bound must be positive");
    const GenusSpectrum spectrum = genus_spectrum(G, opt.bound);
    emit(out, opt, render_spectrum_table(spectrum), spectrum_to_json(spectrum));
    return 0;
}

int run_orbits(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    const EquivMode mode = opt.weak ? EquivMode::Weak : EquivMode::Equivalence;

    if (!opt.vector_text.empty()) {
        if (opt.has_n || opt.has_genus)
            throw std::invalid_argument("--vector excludes --n and --genus");
        const MarkedVector x = parse_marked_vector(G, opt.vector_text);
        OrbitRecord orbit = orbit_of(G, x, mode, opt.state_cap);
        orbit.kind = orientability_class(G, orbit.rep).kind;
        if (!opt.export_path.empty()) {
            std::ofstream file(opt.export_path);
            if (!file) throw std::invalid_argument("cannot write " + opt.export_path);
            file << edge_list_text(schreier_graph(G, x.g), x.v);
        }
        emit(out, opt, render_orbit_table(G, orbit), orbit_to_json(G, orbit));
        return 0;
    }

    if (!opt.export_path.empty())
        throw std::invalid_argument("--export-graph requires --vector");
    const int n = resolve_n(G, opt);
    OrbitPartition partition = enumerate_orbits(G, n, mode, opt.state_cap);
    tag_partition(G, partition);
    emit(out, opt, render_partition_table(G, partition), partition_to_json(G, partition));
    return 0;
}

int run_nielsen(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    const int n = resolve_n(G, opt);
    const auto classes = nielsen_classes(G, n, opt.state_cap);
    emit(out, opt, render_nielsen_table(G, n, classes), nielsen_to_json(G, n, classes));
    return 0;
}

int run_oracle_check(const Options& opt, std::ostream& out) {
    const FiniteGroup G = build_group(opt.group, opt.order_cap);
    const int n = resolve_n(G, opt);
    const OracleCheckResult result = oracle_check(G, n, opt.state_cap);
    emit(out, opt, render_oracle_table(G, n, result), oracle_to_json(G, n, result));
    return result.mismatch == 0 && result.genus_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classify free finite-group actions on 3-dimensional handlebodies"};
    app.name("freeact");
    app.require_subcommand(1);

    Options opt;
    CLI::App* classify = app.add_subcommand(
        "classify", "equivalence and weak-equivalence class counts at one genus");
    add_common(classify, opt, true);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "genera admitting each kind of action");
    add_common(spectrum, opt, false);
    spectrum->add_option("--bound", opt.bound, "largest genus to report (default 30)");

    CLI::App* orbits = app.add_subcommand("orbits", "orbit partition of marked vectors");
    add_common(orbits, opt, true);
    orbits->add_flag("--weak", opt.weak, "coarsen by group automorphisms");
    orbits->add_option("--vector", opt.vector_text,
                       "single marked vector, g=(name,...);v=(+,-,...)");
    orbits->add_option("--export-graph", opt.export_path,
                       "write the vector's covering graph as an edge list");

    CLI::App* nielsen =
        app.add_subcommand("nielsen", "classes of generating n-vectors");
    add_common(nielsen, opt, true);

    CLI::App* oracle = app.add_subcommand(
        "oracle-check", "sweep the sign criterion against the covering cycle test");
    add_common(oracle, opt, true);

    CLI::App* formula = app.add_subcommand(
        "formula", "closed-form class counts for abelian groups");
    add_common(formula, opt, true);
    formula->add_flag("--enumerate", opt.run_enumeration,
                      "also enumerate orbits and diff the counts");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    auto has = [](const CLI::App* cmd, const std::string& name) {
        return cmd->count(name) > 0;
    };
    CLI::App* active = app.get_subcommands().front();
    opt.has_n = active->get_option_no_throw("--n") && has(active, "--n");
    opt.has_genus = active->get_option_no_throw("--genus") && has(active, "--genus");

    try {
        if (active == classify) return run_classify(opt, out);
        if (active == spectrum) return run_spectrum(opt, out);
        if (active == orbits) return run_orbits(opt, out);
        if (active == nielsen) return run_nielsen(opt, out);
        if (active == oracle) return run_oracle_check(opt, out);
        if (active == formula) return run_formula(opt, out);
    } catch (const CapExceeded& e) {
        err << "error: cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }
    err << "error: usage: unknown command\n";
    return 2;
}

}  // namespace freeact
