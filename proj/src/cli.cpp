#include "raagtc/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raagtc/cliques.hpp"
#include "raagtc/genfunc.hpp"
#include "raagtc/graph.hpp"
#include "raagtc/tc_solver.hpp"
#include "raagtc/words.hpp"

namespace raagtc {

namespace {

using nlohmann::ordered_json;

struct GraphInput {
    std::string path;
    std::string format; // "", "edge-list", "dimacs"
};

GraphFormat infer_format(const GraphInput& gi) {
    if (gi.format == "edge-list") return GraphFormat::edge_list;
    if (gi.format == "dimacs") return GraphFormat::dimacs;
    if (!gi.format.empty())
        throw argument_error("unknown input format '" + gi.format +
                             "' (expected edge-list or dimacs)");
    std::string lower = gi.path;
    for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const char* ext : {".col", ".clq", ".dimacs"}) {
        std::string e = ext;
        if (lower.size() >= e.size() &&
            lower.compare(lower.size() - e.size(), e.size(), e) == 0)
            return GraphFormat::dimacs;
    }
    return GraphFormat::edge_list;
}

Graph load_graph(const GraphInput& gi, std::istream& in) {
    std::string text;
    if (gi.path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(gi.path);
        if (!file) throw argument_error("cannot open graph file '" + gi.path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return parse_graph(text, infer_format(gi));
}

int resolve_threads(int flag_value, bool flag_given, std::ostream& err) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("RAAG_TC_THREADS")) {
        try {
            size_t used = 0;
            int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 0) return v;
        } catch (const std::exception&) {
        }
        err << "warning: ignoring unparsable RAAG_TC_THREADS='" << env << "'\n";
    }
    return 0; // all cores
}

std::string clique_text(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.indices()) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

ordered_json clique_json(const Graph& g, const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    for (int v : s.indices()) arr.push_back(g.label(v));
    return arr;
}

ordered_json series_json(const std::vector<long long>& series) {
    ordered_json arr = ordered_json::array();
    for (long long v : series) arr.push_back(v);
    return arr;
}

std::string series_text(const std::vector<long long>& series) {
    std::ostringstream out;
    for (size_t i = 0; i < series.size(); ++i) {
        if (i) out << ' ';
        out << series[i];
    }
    return out.str();
}

ordered_json gf_json(const RationalGF& f) {
    ordered_json j;
    j["numerator"] = ordered_json::array();
    for (long long c : f.numerator.coeffs()) j["numerator"].push_back(c);
    j["denom_exponent"] = f.denom_exponent;
    return j;
}

std::string gf_latex(const std::string& numerator, int denom_exponent) {
    if (denom_exponent == 0) return numerator;
    std::string denom = denom_exponent == 1
                            ? "(1-x)"
                            : "(1-x)^" + std::to_string(denom_exponent);
    return "\\frac{" + numerator + "}{" + denom + "}";
}

std::string gf_text(const std::string& numerator, int denom_exponent) {
    if (denom_exponent == 0) return numerator;
    std::string denom = denom_exponent == 1
                            ? "(1-x)"
                            : "(1-x)^" + std::to_string(denom_exponent);
    bool single_term = numerator.find(" + ") == std::string::npos &&
                       numerator.find(" - ") == std::string::npos;
    if (single_term) return numerator + "/" + denom;
    return "(" + numerator + ")/" + denom;
}

int run_tc(const GraphInput& gi, std::istream& in, std::ostream& out, std::ostream& err,
           long long r, bool r_given, long long r_max, bool r_max_given,
           const std::string& method, bool force_exact, bool force_oracle, int threads,
           bool threads_given, const std::string& format) {
    Graph g = load_graph(gi, in);
    SolverOptions opts{resolve_threads(threads, threads_given, err)};

    if (r_given == r_max_given)
        throw argument_error("exactly one of --r and --r-max is required");

    if (r_max_given) {
        auto seq = z_sequence(g, r_max, opts);
        if (format == "json") {
            ordered_json j;
            j["r_max"] = r_max;
            j["values"] = ordered_json::array();
            for (const auto& e : seq) {
                ordered_json row;
                row["r"] = e.r;
                row["value"] = e.value;
                row["method"] = method_name(e.method);
                j["values"].push_back(row);
            }
            out << j.dump() << '\n';
        } else {
            for (const auto& e : seq)
                out << "z_" << e.r << " = " << e.value << " (" << method_name(e.method)
                    << ")\n";
        }
        return 0;
    }

    std::string chosen = force_exact ? "exact" : method;
    long long value = 0;
    Method used = Method::exact_search;
    bool have_witness = false;
    CliqueSequence witness;

    if (chosen == "oracle") {
        value = z_r_oracle(g, r, force_oracle);
        used = Method::oracle;
    } else {
        ZrResult res;
        if (chosen == "exact")
            res = z_r_exact(g, r, opts);
        else if (chosen == "recurrence")
            res = z_r_recurrence(g, r, opts);
        else if (chosen == "auto")
            res = z_r_auto(g, r, opts);
        else
            throw argument_error("unknown method '" + chosen +
                                 "' (expected auto, exact, oracle or recurrence)");
        value = res.value;
        used = res.method;
        have_witness = true;
        witness = std::move(res.witness);
    }

    if (format == "json") {
        ordered_json j;
        j["r"] = r;
        j["value"] = value;
        j["method"] = method_name(used);
        if (have_witness) {
            j["witness"] = ordered_json::array();
            for (const auto& c : witness.cliques) j["witness"].push_back(clique_json(g, c));
        }
        out << j.dump() << '\n';
    } else {
        out << "z_" << r << " = " << value << " (" << method_name(used) << ")\n";
        if (have_witness) {
            out << "witness:";
            for (const auto& c : witness.cliques) out << ' ' << clique_text(g, c);
            out << '\n';
        }
    }
    return 0;
}

int run_cliques(const GraphInput& gi, std::istream& in, std::ostream& out,
                const std::string& format) {
    Graph g = load_graph(gi, in);
    auto cliques = enumerate_maximal_cliques(g);
    int c = max_clique_size(g);
    if (format == "json") {
        ordered_json j;
        j["count"] = cliques.size();
        j["max_clique_size"] = c;
        j["cliques"] = ordered_json::array();
        for (const auto& m : cliques) j["cliques"].push_back(clique_json(g, m));
        out << j.dump() << '\n';
    } else {
        out << "maximal cliques: " << cliques.size() << ", max size: " << c << '\n';
        for (const auto& m : cliques) out << "  " << clique_text(g, m) << '\n';
    }
    return 0;
}

int run_genfunc(const GraphInput& gi, std::istream& in, std::ostream& out,
                std::ostream& err, const std::string& format, long long expand,
                bool expand_given) {
    Graph g = load_graph(gi, in);
    if (g.vertex_count() == 0)
        err << "warning: 0-vertex graph, the generating function is 0\n";
    IntPolynomial p = generating_polynomial(g);
    RationalGF f = make_rational_gf(p, 2);

    if (format == "json") {
        ordered_json j = gf_json(f);
        if (expand_given) j["series"] = series_json(expand_series(f, expand));
        out << j.dump() << '\n';
    } else if (format == "latex") {
        out << gf_latex(p.to_latex(), f.denom_exponent) << '\n';
    } else {
        out << "P(x) = " << p.to_text() << '\n';
        out << "F(x) = " << gf_text(p.to_text(), f.denom_exponent) << '\n';
        out << "P(1) = " << p.eval(1) << '\n';
        if (expand_given)
            out << "series: " << series_text(expand_series(f, expand)) << '\n';
    }
    return 0;
}

int run_catalog(const std::string& space_name, long long param, bool param_given,
                const GraphInput& gi, std::istream& in, std::ostream& out,
                const std::string& format, long long expand, bool expand_given) {
    CatalogSpace space = parse_catalog_space(space_name);
    Graph g;
    const Graph* gp = nullptr;
    if (space == CatalogSpace::raag) {
        if (gi.path.empty())
            throw argument_error("catalog space raag requires --graph");
        g = load_graph(gi, in);
        gp = &g;
    }
    (void)param_given;
    CatalogEntry e = catalog_genfunc(space, param, gp);

    if (format == "json") {
        ordered_json j;
        j["space"] = space_name;
        ordered_json gf = gf_json(e.gf);
        j["numerator"] = gf["numerator"];
        j["denom_exponent"] = gf["denom_exponent"];
        if (expand_given) j["series"] = series_json(expand_series(e.gf, expand));
        out << j.dump() << '\n';
    } else if (format == "latex") {
        out << gf_latex(e.display_numerator, e.gf.denom_exponent) << '\n';
    } else {
        out << "F(x) = " << gf_text(e.display_numerator, e.gf.denom_exponent) << '\n';
        if (expand_given)
            out << "series: " << series_text(expand_series(e.gf, expand)) << '\n';
    }
    return 0;
}

int run_verify(const GraphInput& gi, std::istream& in, std::ostream& out,
               long long samples, std::uint64_t seed, int max_word_length,
               const std::string& format) {
    Graph g = load_graph(gi, in);
    VerifyOptions opts;
    opts.max_word_length = max_word_length;
    LemmaReport report = verify_lemmas(g, samples, seed, opts);

    if (format == "json") {
        auto check_json = [](const LemmaCheck& c) {
            ordered_json j;
            j["pass"] = c.pass;
            j["fail"] = c.fail;
            j["vacuous"] = c.vacuous;
            if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
            return j;
        };
        ordered_json j;
        j["samples"] = samples;
        j["seed"] = seed;
        j["projection_composition"] = check_json(report.composition);
        j["subgroup_intersection"] = check_json(report.intersection);
        j["witness_annihilation"] = check_json(report.annihilation);
        j["all_passed"] = report.all_passed();
        out << j.dump() << '\n';
    } else {
        out << "samples: " << samples << ", seed: " << seed << '\n';
        out << format_lemma_report(report);
    }
    return report.all_passed() ? 0 : 3;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"topological complexity of right-angled Artin groups"};
    app.name("raagtc");
    app.require_subcommand(1);

    GraphInput gi;
    std::string format = "text";
    std::string method = "auto";
    long long r = 0, r_max = 0, expand = 0, param = 0;
    long long samples = 1000;
    std::uint64_t seed = 1;
    int max_word_length = 12;
    int threads = 0;
    bool force_exact = false, force_oracle = false;
    std::string space_name;

    auto add_graph_flags = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--graph", gi.path,
                                    "graph file (edge list or DIMACS), - for stdin");
        if (required) opt->required();
        cmd->add_option("--input-format", gi.format,
                        "override format inference: edge-list or dimacs");
    };

    CLI::App* tc = app.add_subcommand("tc", "compute TC_r of the RAAG, i.e. z_r");
    add_graph_flags(tc, true);
    auto* tc_r = tc->add_option("--r", r, "compute z_r for this r (r >= 2)");
    auto* tc_rmax = tc->add_option("--r-max", r_max, "compute z_2..z_{r_max}");
    tc->add_option("--method", method, "auto, exact, oracle or recurrence")
        ->default_str("auto");
    tc->add_flag("--force-exact", force_exact, "exact search even past the anchor");
    tc->add_flag("--force-oracle", force_oracle, "override the oracle size guard");
    auto* tc_threads =
        tc->add_option("--threads", threads, "solver threads, 0 = all cores");
    tc->add_option("--format", format, "text or json")->default_str("text");

    CLI::App* cliques = app.add_subcommand("cliques", "list maximal cliques");
    add_graph_flags(cliques, true);
    cliques->add_option("--format", format, "text or json")->default_str("text");

    CLI::App* genfunc =
        app.add_subcommand("genfunc", "TC-generating function of the RAAG");
    add_graph_flags(genfunc, true);
    genfunc->add_option("--format", format, "text, json or latex")->default_str("text");
    auto* gf_expand =
        genfunc->add_option("--expand", expand, "print the first K+1 series terms");

    CLI::App* catalog =
        app.add_subcommand("catalog", "closed-form generating functions");
    catalog->add_option("--space", space_name,
                        "higman, sphere-odd, sphere-even, free, torus, unitary, "
                        "surface, symplectic or raag")
        ->required();
    auto* cat_param =
        catalog->add_option("--param", param, "rank / dimension / genus parameter");
    add_graph_flags(catalog, false);
    catalog->add_option("--format", format, "text, json or latex")->default_str("text");
    auto* cat_expand =
        catalog->add_option("--expand", expand, "print the first K+1 series terms");

    CLI::App* verify =
        app.add_subcommand("verify", "randomized checks of the projection lemmas");
    add_graph_flags(verify, true);
    verify->add_option("--samples", samples, "sample count")->default_str("1000");
    verify->add_option("--seed", seed, "random seed")->default_str("1");
    verify->add_option("--max-word-length", max_word_length, "longest sampled word")
        ->default_str("12");
    verify->add_option("--format", format, "text or json")->default_str("text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        // CLI11 uses 0 for --help; fold its error codes into the usage slot.
        return code == 0 ? 0 : 1;
    }

    try {
        if (format != "text" && format != "json" && format != "latex")
            throw argument_error("unknown output format '" + format + "'");
        if (format == "latex" && !(genfunc->parsed() || catalog->parsed()))
            throw argument_error("latex output is only available for genfunc and catalog");

        if (tc->parsed())
            return run_tc(gi, in, out, err, r, tc_r->count() > 0, r_max,
                          tc_rmax->count() > 0, method, force_exact, force_oracle,
                          threads, tc_threads->count() > 0, format);
        if (cliques->parsed()) return run_cliques(gi, in, out, format);
        if (genfunc->parsed())
            return run_genfunc(gi, in, out, err, format, expand, gf_expand->count() > 0);
        if (catalog->parsed())
            return run_catalog(space_name, param, cat_param->count() > 0, gi, in, out,
                               format, expand, cat_expand->count() > 0);
        if (verify->parsed())
            return run_verify(gi, in, out, samples, seed, max_word_length, format);
        throw argument_error("no subcommand selected");
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace raagtc
