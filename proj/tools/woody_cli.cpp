#include <woody/construct.hpp>
#include <woody/decompose.hpp>
#include <woody/exact.hpp>
#include <woody/hunt.hpp>
#include <woody/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace woody;
using std::string;
using std::vector;

namespace
{
    namespace exit_code
    {
        constexpr int ok = 0;
        constexpr int invalid = 1;
        constexpr int parse_error = 2;
        constexpr int inexact = 3;
        constexpr int violation = 10;
    }

    struct Common
    {
        string config;
        string format = "auto";
        std::uint64_t budget_nodes = 10'000'000;
        double budget_secs = 10.0;
    };

    auto make_budget(const Common & c) -> Budget
    {
        Budget b;
        if (c.budget_nodes > 0)
            b.nodes = c.budget_nodes;
        if (c.budget_secs > 0)
            b.seconds = c.budget_secs;
        return b;
    }

    /// Config values fill in options the command line left unset.
    void merge_config(CLI::App & app, const string & path)
    {
        if (path.empty())
            return;
        for (auto & [key, value] : read_config(path)) {
            string flag = key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            CLI::Option * opt = nullptr;
            try {
                opt = app.get_option("--" + flag);
            }
            catch (const CLI::OptionNotFound &) {
                throw std::invalid_argument("config key '" + key + "' does not match an option of '" + app.get_name() + "'");
            }
            if (opt->count() > 0)
                continue;
            if (opt->get_type_size() == 0) {
                if (value == "true" || value == "1" || value == "yes")
                    opt->add_result(string("true"));
            }
            else
                opt->add_result(value);
            opt->run_callback();
        }
    }

    void write_text(const string & path, const string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error("cannot write " + path);
        out << text;
    }

    auto exact_json(const string & param, int lower, int upper, bool exact, std::uint64_t nodes) -> json
    {
        json j{{"parameter", param}};
        if (exact)
            j["value"] = upper;
        else {
            j["lower"] = lower;
            j["upper"] = upper;
        }
        j["exact"] = exact;
        j["nodes"] = nodes;
        return j;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Strongly woody edge colorings: verification, constructions, exact solvers and conjecture hunts"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App * sub, bool with_format) {
        sub->add_option("--config", common.config, "key=value file; values fill options not given on the command line");
        if (with_format)
            sub->add_option("--format", common.format, "graph file format")->check(CLI::IsMember({"auto", "g6", "edges"}));
        sub->add_option("--budget-nodes", common.budget_nodes, "search node limit per solver call (0 = none)");
        sub->add_option("--budget-secs", common.budget_secs, "wall-clock limit per solver call in seconds (0 = none)");
    };

    // verify
    string graph_path, coloring_path, mode = "strong", out_path;
    int p = 1;
    auto verify = app.add_subcommand("verify", "check a coloring; exit 0 iff valid");
    verify->add_option("graph", graph_path, "graph file (graph6 or edge list)")->required();
    verify->add_option("coloring", coloring_path, "edge-indexed color array")->required();
    verify->add_option("--mode", mode, "woody | strong | p-woody")->check(CLI::IsMember({"woody", "strong", "p-woody"}));
    verify->add_option("--p", p, "p for p-woody mode")->check(CLI::PositiveNumber);
    add_common(verify, true);

    // color
    string method = "cor7";
    auto color = app.add_subcommand("color", "build a strongly woody coloring by one of the constructions");
    color->add_option("graph", graph_path, "graph file")->required();
    color->add_option("--method", method, "thm1 | thm4 | thm5 | thm6 | cor7")
        ->check(CLI::IsMember({"thm1", "thm4", "thm5", "thm6", "cor7"}));
    color->add_option("--out", out_path, "write the coloring here");
    add_common(color, true);

    // exact
    string param = "zeta";
    auto exact = app.add_subcommand("exact", "solve zeta, chi_a, chi or chi' exactly");
    exact->add_option("graph", graph_path, "graph file")->required();
    exact->add_option("--param", param, "zeta | chia | chi | chiprime")
        ->check(CLI::IsMember({"zeta", "chia", "chi", "chiprime"}));
    exact->add_option("--out", out_path, "write the certificate coloring here");
    add_common(exact, true);

    // hunt
    vector<string> corpus_paths;
    string conjectures = "planar4,twoarb,col", csv_path, summary_path, timings_path, quarantine_path;
    string generator, declared_class;
    int jobs = 1;
    bool strict = false, no_chi = false, no_chi_a = false;
    auto hunt = app.add_subcommand("hunt", "run solvers over graph6 corpora and test the conjectured bounds");
    hunt->add_option("corpus", corpus_paths, "graph6 files");
    hunt->add_option("--conjectures", conjectures, "comma list of planar4, twoarb, col, girth-eq");
    hunt->add_option("--out", out_path, "JSON-lines report (default: stdout)");
    hunt->add_option("--csv", csv_path, "CSV summary, one row per graph");
    hunt->add_option("--summary", summary_path, "JSON run summary (default: stderr)");
    hunt->add_option("--timings", timings_path, "per-stage timings as JSON lines");
    hunt->add_option("--quarantine", quarantine_path, "where a counterexample is written (default: <out>.quarantine.json)");
    hunt->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    hunt->add_flag("--strict", strict, "stop at the first corpus error");
    hunt->add_option("--generator", generator, "corpus generator, recorded verbatim");
    hunt->add_option("--declared-class", declared_class, "graph class the generator guarantees, e.g. planar");
    hunt->add_flag("--no-chi", no_chi, "skip the chromatic number");
    hunt->add_flag("--no-chi-a", no_chi_a, "skip the acyclic chromatic number");
    add_common(hunt, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_code::ok : exit_code::parse_error;
    }

    CLI::App * active = app.get_subcommands().front();
    try {
        merge_config(*active, common.config);
    }
    catch (const std::exception & e) {
        std::cerr << "config: " << e.what() << '\n';
        return exit_code::parse_error;
    }
    auto budget = make_budget(common);

    Graph g;
    if (active != hunt) {
        try {
            g = read_graph_file(graph_path, parse_graph_format(common.format));
        }
        catch (const std::exception & e) {
            std::cerr << "cannot read graph: " << e.what() << '\n';
            return exit_code::parse_error;
        }
    }

    if (active == verify) {
        EdgeColoring c;
        try {
            c = EdgeColoring(read_coloring_file(coloring_path));
        }
        catch (const std::exception & e) {
            std::cerr << "cannot read coloring: " << e.what() << '\n';
            return exit_code::parse_error;
        }
        if (c.size() != g.m()) {
            std::cerr << "coloring has " << c.size() << " entries but the graph has " << g.m() << " edges\n";
            return exit_code::parse_error;
        }

        json out{{"mode", mode}, {"colors", c.distinct_colors()}};
        bool ok = false;
        try {
            if (mode == "woody" || mode == "strong") {
                auto r = mode == "woody" ? is_woody(g, c) : is_strongly_woody(g, c);
                ok = r.ok;
                if (r.witness)
                    out["witness"] = witness_to_json(g, *r.witness);
            }
            else {
                out["p"] = p;
                ok = is_p_woody(g, c, p);
            }
        }
        catch (const SizeGuardError & e) {
            std::cerr << e.what() << '\n';
            return exit_code::parse_error;
        }
        out["valid"] = ok;
        std::cout << out.dump() << '\n';
        return ok ? exit_code::ok : exit_code::invalid;
    }

    if (active == color) {
        json out{{"method", method}, {"n", g.n()}, {"m", g.m()}};
        EdgeColoring c;
        try {
            if (method == "thm1") {
                auto chi_a = acyclic_chromatic_exact(g, budget);
                if (! chi_a.exact) {
                    out["error"] = "acyclic coloring search ran out of budget";
                    out["chi_a"] = json{{"lower", chi_a.lower}, {"upper", chi_a.upper}};
                }
                c = derived_coloring(g, chi_a.certificate, std::max(1, chi_a.upper));
                out["bound"] = "zeta <= chi_a";
                out["chi_a"] = chi_a.upper;
                out["vertex_coloring"] = chi_a.certificate.colors;
            }
            else if (method == "thm4") {
                c = triangle_free_planar_coloring(g);
                out["bound"] = "zeta <= 4 (triangle-free, two forests)";
            }
            else if (method == "thm5") {
                auto part = find_forest_2independent_partition(g, budget);
                if (! part.found) {
                    out["error"] = part.exact ? "no forest / 2-independent partition exists"
                                              : "partition search ran out of budget";
                    std::cout << out.dump() << '\n';
                    return part.exact ? exit_code::invalid : exit_code::inexact;
                }
                c = partition_coloring(g, part.a, part.f);
                out["bound"] = "zeta <= 2";
                out["a"] = vertex_set_members(part.a);
            }
            else if (method == "thm6") {
                auto chi = chromatic_exact(g, budget);
                auto r = product_pipeline(g, chi.certificate);
                c = r.coloring;
                out["arb"] = r.arboricity;
                out["chi"] = chi.exact ? json(chi.upper) : json{{"lower", chi.lower}, {"upper", chi.upper}};
                out["bound"] = r.triangle_free_route ? "zeta <= 2 arb" : "zeta <= 2 chi arb";
                out["bound_value"] = r.bound;
            }
            else {
                auto r = degeneracy_pipeline(g);
                c = r.coloring;
                out["arb"] = r.arboricity;
                out["bound"] = r.triangle_free_route ? "zeta <= 2 arb" : "zeta <= 2 chi arb <= 4 arb^2";
                out["bound_value"] = r.bound;
                out["four_arb_squared"] = 4 * r.arboricity * r.arboricity;
            }
        }
        catch (const ArboricityTooLarge & e) {
            out["error"] = e.what();
            out["density_certificate"] = density_to_json(e.certificate);
            std::cout << out.dump() << '\n';
            return exit_code::invalid;
        }
        catch (const PreconditionError & e) {
            out["error"] = e.what();
            if (auto t = find_triangle(g); t && method == "thm4")
                out["triangle"] = *t;
            std::cout << out.dump() << '\n';
            return exit_code::invalid;
        }

        auto check = is_strongly_woody(g, c);
        out["colors"] = c.distinct_colors();
        out["verified"] = check.ok;
        if (! out_path.empty())
            write_text(out_path, format_color_array(c.colors));
        else
            out["coloring"] = c.colors;
        std::cout << out.dump() << '\n';
        return check.ok ? exit_code::ok : exit_code::invalid;
    }

    if (active == exact) {
        json out;
        vector<Color> cert;
        bool is_exact = false;
        if (param == "zeta" || param == "chiprime") {
            auto r = param == "zeta" ? zeta_exact(g, budget) : chromatic_index_exact(g, budget);
            out = exact_json(param, r.lower, r.upper, r.exact, r.nodes);
            cert = r.certificate.colors;
            is_exact = r.exact;
        }
        else {
            auto r = param == "chia" ? acyclic_chromatic_exact(g, budget) : chromatic_exact(g, budget);
            out = exact_json(param, r.lower, r.upper, r.exact, r.nodes);
            cert = r.certificate.colors;
            is_exact = r.exact;
        }
        if (! out_path.empty())
            write_text(out_path, format_color_array(cert));
        else
            out["certificate"] = cert;
        std::cout << out.dump() << '\n';
        return is_exact ? exit_code::ok : exit_code::inexact;
    }

    // hunt
    HuntOptions options;
    try {
        options.conjectures = parse_conjecture_list(conjectures);
    }
    catch (const std::exception & e) {
        std::cerr << e.what() << '\n';
        return exit_code::parse_error;
    }
    options.budget = budget;
    options.jobs = jobs;
    options.strict = strict;
    options.generator = generator;
    options.declared_class = declared_class;
    options.compute_chi = ! no_chi;
    options.compute_chi_a = ! no_chi_a;

    vector<CorpusEntry> corpus;
    for (std::size_t i = 0; i < corpus_paths.size(); ++i) {
        try {
            auto entries = read_graph6_corpus(corpus_paths[i], static_cast<int>(i));
            for (auto & e : entries) {
                if (e.error) {
                    std::cerr << "skipping " << e.id() << ": " << *e.error << '\n';
                    if (strict)
                        return exit_code::parse_error;
                }
                corpus.push_back(std::move(e));
            }
        }
        catch (const std::exception & e) {
            std::cerr << e.what() << '\n';
            return exit_code::parse_error;
        }
    }

    std::ofstream report_file, timings_file;
    std::ostream * report = &std::cout;
    if (! out_path.empty()) {
        report_file.open(out_path, std::ios::binary);
        report = &report_file;
    }
    if (! timings_path.empty())
        timings_file.open(timings_path, std::ios::binary);

    auto outcome = run_hunt(corpus, options, *report, timings_path.empty() ? nullptr : &timings_file);

    if (! csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        csv << csv_header() << '\n';
        for (auto & row : outcome.csv_rows)
            csv << csv_line(row) << '\n';
    }
    if (! summary_path.empty())
        write_text(summary_path, outcome.summary.dump(2) + "\n");
    else
        std::cerr << outcome.summary.dump(2) << '\n';

    if (outcome.violation) {
        string path = quarantine_path.empty() ? (out_path.empty() ? string("hunt") : out_path) + ".quarantine.json"
                                              : quarantine_path;
        write_text(path, outcome.violation->dump(2) + "\n");
        std::cerr << "conjecture violated; counterexample written to " << path << '\n';
        return exit_code::violation;
    }
    if (outcome.aborted) {
        std::cerr << outcome.abort_reason << '\n';
        return exit_code::parse_error;
    }
    return exit_code::ok;
}
