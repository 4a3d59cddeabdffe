#include <woody/construct.hpp>
#include <woody/decompose.hpp>
#include <woody/hunt.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

using std::string;
using std::vector;

namespace woody
{
    auto conjecture_name(Conjecture c) -> string
    {
        switch (c) {
            case Conjecture::planar4: return "planar4";
            case Conjecture::twoarb: return "twoarb";
            case Conjecture::col: return "col";
            case Conjecture::girth_eq: return "girth-eq";
        }
        return "unknown";
    }

    auto parse_conjecture(const string & name) -> Conjecture
    {
        for (auto c : {Conjecture::planar4, Conjecture::twoarb, Conjecture::col, Conjecture::girth_eq})
            if (conjecture_name(c) == name)
                return c;
        throw std::invalid_argument("unknown conjecture '" + name + "' (expected planar4, twoarb, col, girth-eq)");
    }

    auto parse_conjecture_list(const string & list) -> std::set<Conjecture>
    {
        std::set<Conjecture> result;
        std::istringstream in(list);
        string item;
        while (std::getline(in, item, ',')) {
            auto first = item.find_first_not_of(" \t");
            if (first == string::npos)
                continue;
            auto last = item.find_last_not_of(" \t");
            result.insert(parse_conjecture(item.substr(first, last - first + 1)));
        }
        return result;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto ms_since(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }

        template <typename C>
        auto value_json(const ExactResult<C> & r) -> json
        {
            if (r.exact)
                return r.upper;
            return json{{"lower", r.lower}, {"upper", r.upper}};
        }

        /// holds / violated / unresolved for "zeta <= bound".
        auto bound_status(const ExactResult<EdgeColoring> & zeta, int bound) -> string
        {
            if (zeta.upper <= bound)
                return "holds";
            if (zeta.lower > bound)
                return "violated";
            return "unresolved";
        }

        auto value_bounds(const json & v) -> std::pair<int, int>
        {
            if (v.is_number_integer())
                return {v.get<int>(), v.get<int>()};
            return {v.at("lower").get<int>(), v.at("upper").get<int>()};
        }
    }

    auto hunt_graph(const CorpusEntry & entry, std::size_t index, const HuntOptions & options) -> HuntRecord
    {
        HuntRecord out;
        out.index = index;
        auto & r = out.record;
        auto & t = out.timings;
        r["graph_id"] = entry.id();
        r["graph6"] = entry.graph6;
        if (! options.generator.empty())
            r["generator"] = options.generator;
        if (! options.declared_class.empty())
            r["declared_class"] = options.declared_class;
        t["graph_id"] = entry.id();

        if (entry.error) {
            r["status"] = "parse_error";
            r["error"] = *entry.error;
            return out;
        }
        const Graph & g = *entry.graph;

        auto start = Clock::now();
        auto gi = girth(g);
        auto arb = arboricity(g);
        auto col = coloring_number(g);
        bool triangle_free = ! has_triangle(g);
        t["structure_ms"] = ms_since(start);

        r["status"] = "ok";
        r["n"] = g.n();
        r["m"] = g.m();
        r["girth"] = gi ? json(*gi) : json("inf");
        r["triangle_free"] = triangle_free;
        r["arb"] = arb.k;
        r["col"] = col.value;

        json certificate;
        certificate["forests"] = arb.decomposition.assignment;
        if (arb.lower_bound)
            certificate["density"] = density_to_json(*arb.lower_bound);
        certificate["col_ordering"] = col.ordering;

        if (options.compute_chi) {
            start = Clock::now();
            auto chi = chromatic_exact(g, options.budget);
            t["chi_ms"] = ms_since(start);
            r["chi"] = value_json(chi);
            certificate["chi_coloring"] = chi.certificate.colors;
        }
        else
            r["chi"] = nullptr;

        std::optional<ExactResult<VertexColoring>> chi_a;
        if (options.compute_chi_a) {
            start = Clock::now();
            chi_a = acyclic_chromatic_exact(g, options.budget);
            t["chi_a_ms"] = ms_since(start);
            r["chi_a"] = value_json(*chi_a);
            certificate["chi_a_coloring"] = chi_a->certificate.colors;
        }
        else
            r["chi_a"] = nullptr;

        start = Clock::now();
        auto zeta = zeta_exact(g, options.budget);
        t["zeta_ms"] = ms_since(start);
        r["zeta"] = value_json(zeta);
        r["zeta_exact"] = zeta.exact;
        r["zeta_nodes"] = zeta.nodes;
        certificate["zeta_coloring"] = zeta.certificate.colors;

        if (zeta.exact && chi_a && chi_a->exact) {
            if (zeta.upper < arb.k || zeta.upper > chi_a->upper)
                throw std::logic_error("arb <= zeta <= chi_a fails on " + entry.id());
            r["sandwich"] = "holds";
        }

        json flags = json::object();
        for (auto c : options.conjectures) {
            string status;
            switch (c) {
                case Conjecture::planar4:
                    if (options.declared_class != "planar")
                        status = "not_applicable";
                    else if (! euler_planar_sanity(g, triangle_free))
                        status = "corpus_error";
                    else
                        status = bound_status(zeta, 4);
                    break;
                case Conjecture::twoarb:
                    status = bound_status(zeta, 2 * arb.k);
                    break;
                case Conjecture::col:
                    status = bound_status(zeta, col.value);
                    break;
                case Conjecture::girth_eq:
                    if (zeta.upper == arb.k)
                        status = "equal";
                    else if (zeta.lower > arb.k)
                        status = "unequal";
                    else
                        status = "unresolved";
                    break;
            }
            if (status == "violated")
                out.violated = true;
            flags[conjecture_name(c)] = status;
        }
        r["flags"] = flags;
        r["certificate"] = certificate;

        if (out.violated || (zeta.exact && zeta.upper == 4)) {
            start = Clock::now();
            auto check = recheck_record(r, options.budget);
            t["recheck_ms"] = ms_since(start);
            r["recheck"] = json{{"ok", check.ok}, {"detail", check.detail}};
        }
        return out;
    }

    auto recheck_record(const json & record, const Budget & budget) -> RecheckResult
    {
        auto fail = [](string why) { return RecheckResult{false, std::move(why)}; };
        try {
            auto g = parse_graph6(record.at("graph6").get<string>());
            if (g.n() != record.at("n").get<int>() || g.m() != record.at("m").get<int>())
                return fail("graph6 does not match the recorded n and m");
            auto & cert = record.at("certificate");

            int arb = record.at("arb").get<int>();
            ForestDecomposition forests{arb, cert.at("forests").get<vector<int>>()};
            if (! forests.is_valid(g))
                return fail("forest decomposition does not re-verify");
            if (g.m() > 0) {
                auto & d = cert.at("density");
                auto members = d.at("vertices").get<vector<Vertex>>();
                VertexSubsetView view(g, make_vertex_set(g.n(), members));
                Density density{view.induced_edge_count(), view.vertex_count() - 1};
                if (view.vertex_count() < 2 || density.num != d.at("edges").get<std::int64_t>()
                    || density.ceil() != arb)
                    return fail("density certificate does not re-verify");
            }

            int col = record.at("col").get<int>();
            auto ordering = cert.at("col_ordering").get<vector<Vertex>>();
            if (static_cast<int>(ordering.size()) != g.n() || (g.n() > 0 && max_back_degree(g, ordering) != col - 1))
                return fail("coloring-number ordering does not re-verify");

            auto [zeta_lower, zeta_upper] = value_bounds(record.at("zeta"));
            EdgeColoring zeta_coloring(cert.at("zeta_coloring").get<vector<Color>>());
            if (zeta_coloring.size() != g.m() || ! is_strongly_woody(g, zeta_coloring)
                || zeta_coloring.distinct_colors() != zeta_upper)
                return fail("zeta coloring does not re-verify");

            int trivial = g.m() == 0 ? 0 : std::max(arb, has_triangle(g) ? 3 : (is_forest(g) ? 1 : 2));
            if (zeta_lower > trivial) {
                auto below = strongly_woody_coloring_exists(g, zeta_lower - 1, budget, ZetaPruning::scratch);
                if (below.status == Feasibility::found)
                    return fail("independent search found a coloring below the recorded lower bound");
                if (below.status == Feasibility::exhausted)
                    return fail("independent lower-bound search ran out of budget");
            }

            if (cert.contains("chi_a_coloring") && ! record.at("chi_a").is_null()) {
                VertexColoring f(cert["chi_a_coloring"].get<vector<Color>>());
                auto [lo, hi] = value_bounds(record["chi_a"]);
                (void) lo;
                if (! is_acyclic_vertex(g, f) || f.distinct_colors() != hi)
                    return fail("acyclic vertex coloring does not re-verify");
                if (g.n() > 0 && ! is_strongly_woody(g, derived_coloring(g, f, std::max(1, f.palette_size()))))
                    return fail("derived coloring of the acyclic certificate is not strongly woody");
            }
            return {true, "all certificates re-verify"};
        }
        catch (const std::exception & e) {
            return fail(string("malformed record: ") + e.what());
        }
    }

    namespace
    {
        struct Accumulator
        {
            std::size_t graphs = 0, parse_errors = 0, zeta_exact = 0, zeta_inexact = 0;
            int max_zeta = 0;
            std::map<int, std::size_t> gap_histogram;
            std::size_t zeta4 = 0, zeta4_reverified = 0;
            vector<json> zeta4_witnesses;
            std::map<string, std::map<string, std::size_t>> flag_counts;
            struct GirthStats
            {
                std::size_t graphs = 0;
                std::optional<int> max_unequal_girth;
                std::optional<int> min_girth;
                bool unequal_forest = false;
            };
            std::map<int, GirthStats> girth_eq;

            void add(const json & r)
            {
                ++graphs;
                if (r.at("status") != "ok") {
                    ++parse_errors;
                    return;
                }
                for (auto & [name, status] : r.at("flags").items())
                    ++flag_counts[name][status.get<string>()];

                if (! r.at("zeta_exact").get<bool>()) {
                    ++zeta_inexact;
                    return;
                }
                ++zeta_exact;
                int zeta = r.at("zeta").get<int>();
                int arb = r.at("arb").get<int>();
                max_zeta = std::max(max_zeta, zeta);
                ++gap_histogram[zeta - arb];
                if (zeta == 4) {
                    ++zeta4;
                    bool ok = r.contains("recheck") && r["recheck"].at("ok").get<bool>();
                    if (ok)
                        ++zeta4_reverified;
                    if (zeta4_witnesses.size() < 100)
                        zeta4_witnesses.push_back(json{{"graph_id", r["graph_id"]}, {"graph6", r["graph6"]},
                            {"arb", arb}, {"zeta_coloring", r["certificate"]["zeta_coloring"]}, {"reverified", ok}});
                }

                if (r.at("flags").contains("girth-eq") && arb > 0) {
                    auto & s = girth_eq[arb];
                    ++s.graphs;
                    bool finite = r["girth"].is_number_integer();
                    if (finite) {
                        int gi = r["girth"].get<int>();
                        s.min_girth = s.min_girth ? std::min(*s.min_girth, gi) : gi;
                        if (zeta != arb)
                            s.max_unequal_girth = s.max_unequal_girth ? std::max(*s.max_unequal_girth, gi) : gi;
                    }
                    else if (zeta != arb)
                        s.unequal_forest = true;
                }
            }

            auto summary(const HuntOptions & options) const -> json
            {
                json s;
                s["graphs"] = graphs;
                s["parse_errors"] = parse_errors;
                s["zeta_exact"] = zeta_exact;
                s["zeta_unresolved"] = zeta_inexact;
                s["max_zeta"] = max_zeta;
                json hist = json::object();
                for (auto & [gap, count] : gap_histogram)
                    hist[std::to_string(gap)] = count;
                s["zeta_minus_arb_histogram"] = hist;
                s["zeta4_count"] = zeta4;
                s["zeta4_reverified"] = zeta4_reverified;
                s["zeta4_planar_witness_found"] = options.declared_class == "planar" && zeta4 > 0;
                s["zeta4_witnesses"] = zeta4_witnesses;
                json flags = json::object();
                for (auto & [name, counts] : flag_counts) {
                    json c = json::object();
                    for (auto & [status, k] : counts)
                        c[status] = k;
                    flags[name] = c;
                }
                s["flags"] = flags;
                if (options.conjectures.contains(Conjecture::girth_eq)) {
                    json ge = json::object();
                    for (auto & [arb, st] : girth_eq) {
                        json e;
                        e["graphs"] = st.graphs;
                        e["min_girth"] = st.min_girth ? json(*st.min_girth) : json(nullptr);
                        e["max_girth_with_zeta_above_arb"] = st.max_unequal_girth ? json(*st.max_unequal_girth) : json(nullptr);
                        // smallest girth from which every corpus graph with this arboricity has zeta = arb
                        if (st.unequal_forest)
                            e["empirical_threshold"] = nullptr;
                        else if (st.max_unequal_girth)
                            e["empirical_threshold"] = *st.max_unequal_girth + 1;
                        else
                            e["empirical_threshold"] = st.min_girth ? json(*st.min_girth) : json("inf");
                        ge[std::to_string(arb)] = e;
                    }
                    s["girth_eq"] = ge;
                }
                json conj = json::array();
                for (auto c : options.conjectures)
                    conj.push_back(conjecture_name(c));
                s["conjectures"] = conj;
                s["generator"] = options.generator;
                s["declared_class"] = options.declared_class;
                s["budget_nodes"] = options.budget.nodes ? json(*options.budget.nodes) : json(nullptr);
                s["budget_secs"] = options.budget.seconds ? json(*options.budget.seconds) : json(nullptr);
                return s;
            }
        };

        auto csv_row(const json & r) -> json
        {
            json row;
            row["graph_id"] = r["graph_id"];
            row["graph6"] = r["graph6"];
            bool ok = r["status"] == "ok";
            row["status"] = r["status"];
            for (auto key : {"n", "m", "girth", "arb", "col"})
                row[key] = ok ? r[key] : json(nullptr);
            for (auto key : {"chi", "chi_a", "zeta"}) {
                if (! ok || r[key].is_null()) {
                    row[string(key) + "_lower"] = nullptr;
                    row[string(key) + "_upper"] = nullptr;
                    continue;
                }
                auto [lo, hi] = value_bounds(r[key]);
                row[string(key) + "_lower"] = lo;
                row[string(key) + "_upper"] = hi;
            }
            for (auto name : {"planar4", "twoarb", "col", "girth-eq"})
                row[string("flag_") + name] = ok && r["flags"].contains(name) ? r["flags"][name] : json(nullptr);
            return row;
        }

        auto csv_cell(const json & v) -> string
        {
            if (v.is_null())
                return "";
            if (v.is_string())
                return v.get<string>();
            return v.dump();
        }
    }

    auto csv_header() -> string
    {
        return "graph_id,graph6,status,n,m,girth,arb,col,chi_lower,chi_upper,chi_a_lower,chi_a_upper,"
               "zeta_lower,zeta_upper,flag_planar4,flag_twoarb,flag_col,flag_girth-eq";
    }

    auto csv_line(const json & row) -> string
    {
        string out;
        bool first = true;
        for (auto & [key, v] : row.items()) {
            if (! first)
                out.push_back(',');
            first = false;
            auto cell = csv_cell(v);
            if (cell.find_first_of(",\"\n") != string::npos) {
                string quoted = "\"";
                for (char ch : cell) {
                    if (ch == '"')
                        quoted.push_back('"');
                    quoted.push_back(ch);
                }
                cell = quoted + "\"";
            }
            out += cell;
        }
        return out;
    }

    auto run_hunt(const vector<CorpusEntry> & corpus, const HuntOptions & options, std::ostream & report,
        std::ostream * timings) -> HuntOutcome
    {
        HuntOutcome outcome;
        Accumulator acc;

        std::mutex lock;
        std::condition_variable ready;
        std::deque<HuntRecord> channel;
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        int running = std::max(1, options.jobs);
        const int workers = running;

        auto worker = [&] {
            while (! stop) {
                std::size_t i = next++;
                if (i >= corpus.size())
                    break;
                HuntRecord rec;
                try {
                    rec = hunt_graph(corpus[i], i, options);
                }
                catch (const std::exception & e) {
                    rec.index = i;
                    rec.record = json{{"graph_id", corpus[i].id()}, {"graph6", corpus[i].graph6},
                        {"status", "internal_error"}, {"error", e.what()}};
                }
                std::lock_guard guard(lock);
                channel.push_back(std::move(rec));
                ready.notify_one();
            }
            std::lock_guard guard(lock);
            --running;
            ready.notify_one();
        };

        vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);

        // single writer: reorder into corpus order, then stream
        std::map<std::size_t, HuntRecord> pending;
        std::size_t expected = 0;
        bool halted = false;
        while (expected < corpus.size() && ! halted) {
            {
                std::unique_lock guard(lock);
                ready.wait(guard, [&] { return ! channel.empty() || running == 0; });
                while (! channel.empty()) {
                    auto rec = std::move(channel.front());
                    channel.pop_front();
                    pending.emplace(rec.index, std::move(rec));
                }
                if (channel.empty() && running == 0 && ! pending.contains(expected))
                    break;
            }
            while (! halted && pending.contains(expected)) {
                auto rec = std::move(pending[expected]);
                pending.erase(expected);
                ++expected;

                auto & r = rec.record;
                report << r.dump() << '\n';
                if (timings)
                    *timings << rec.timings.dump() << '\n';
                acc.add(r);
                outcome.csv_rows.push_back(csv_row(r));
                ++outcome.records;

                auto status = r.value("status", string("ok"));
                if (status == "internal_error") {
                    halted = true;
                    outcome.aborted = true;
                    outcome.abort_reason = r.value("error", string());
                }
                else if (options.strict && status != "ok") {
                    halted = true;
                    outcome.aborted = true;
                    outcome.abort_reason = "corpus error at " + r["graph_id"].get<string>() + ": " + r.value("error", string());
                }
                else if (options.strict && r.contains("flags")
                    && r["flags"].value("planar4", string()) == "corpus_error") {
                    halted = true;
                    outcome.aborted = true;
                    outcome.abort_reason = "graph " + r["graph_id"].get<string>() + " fails the Euler bound for planar graphs";
                }
                else if (rec.violated) {
                    halted = true;
                    outcome.violation = r;
                }
            }
        }
        stop = true;
        for (auto & t : pool)
            t.join();
        report.flush();

        outcome.summary = acc.summary(options);
        outcome.summary["halted_on_violation"] = outcome.violation.has_value();
        outcome.summary["aborted"] = outcome.aborted;
        if (outcome.violation)
            outcome.summary["violation_graph_id"] = (*outcome.violation)["graph_id"];
        return outcome;
    }
}
