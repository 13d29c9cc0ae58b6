// otd: exact computations around orientations and total domination.
//
// Subcommands: solve (gamma_t of one oriented graph), range (exact min/max
// over all valid orientations), recognize (family certificates), verify
// (exhaustive claim checks with reports), generate (family members with their
// extremal orientations). JSON is the stable output contract; the human
// format is a readable view of the same data. Exit codes: 0 success/verified,
// 1 mismatch or infeasible query, 2 usage error, 3 budget refusal.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "otd/verify.hpp"

using namespace otd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& g6, const std::string& edges_path) {
    if (!g6.empty() && !edges_path.empty())
        throw CLI::ValidationError("pass exactly one of --graph6 and --edges");
    if (!g6.empty()) return parse_graph6(g6);
    if (!edges_path.empty()) return parse_edge_list(slurp(edges_path));
    throw CLI::ValidationError("a graph is required: --graph6 or --edges");
}

std::vector<std::pair<int, int>> load_arcs(const std::string& spec) {
    std::string text = (!spec.empty() && spec[0] == '@') ? slurp(spec.substr(1)) : spec;
    return arcs_from_json(nlohmann::json::parse(text));
}

int default_workers() {
    if (const char* env = std::getenv("OTD_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct VerifyArgs {
    std::string theorem;
    std::string input;
    int max_n = 6;
    int trials = 100;
    int max_total_n = 10;
    std::uint64_t seed = 20240101;
    int k_min = 3, k_max = 6;
    bool no_fig8 = false;
    int workers = default_workers();
    std::string out;
    std::string format = "human";
};

int run_verify(const VerifyArgs& a) {
    if (a.theorem == "gap") {
        auto rows = gap_survey(a.k_min, a.k_max, !a.no_fig8);
        if (a.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows)
                j.push_back({{"name", r.name},
                             {"graph6", r.graph6},
                             {"n", r.n},
                             {"dom_t", r.dom_t},
                             {"DOM_t", r.domt}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "name,graph6,n,dom_t,DOM_t\n";
            for (const auto& r : rows)
                std::cout << r.name << "," << r.graph6 << "," << r.n << "," << r.dom_t << ","
                          << r.domt << "\n";
        }
        return 0;
    }

    std::vector<SourceGraph> source;
    if (!a.input.empty()) {
        source = source_from_file(a.input);
    } else {
        SourceFilter f = SourceFilter::connected_class_c;
        if (a.theorem == "result2") f = SourceFilter::all_class_c;
        if (a.theorem == "disconnected") f = SourceFilter::disconnected_class_c;
        source = source_builtin(a.max_n, f);
    }

    VerifyOptions opt{a.workers};
    VerificationRun run;
    if (a.theorem == "main")
        run = verify_theorem_main(source, opt);
    else if (a.theorem == "result1")
        run = verify_result1(source, opt);
    else if (a.theorem == "result2")
        run = verify_result2(source, opt);
    else if (a.theorem == "disconnected")
        run = verify_disconnected_main(source, opt);
    else if (a.theorem == "concomp")
        run = verify_concomp(a.trials, a.max_total_n, a.seed, opt);
    else
        throw CLI::ValidationError("unknown theorem id: " + a.theorem);

    if (!a.out.empty()) {
        std::ofstream jsonl(a.out + ".jsonl");
        if (!jsonl) throw std::runtime_error("cannot write " + a.out + ".jsonl");
        write_jsonl(run, jsonl);
        if (a.format == "csv") {
            std::ofstream csv(a.out + ".csv");
            write_csv(run, csv);
        }
    }

    if (a.format == "json") {
        std::cout << summary_json(run.report).dump(2) << "\n";
    } else if (a.format == "csv" && a.out.empty()) {
        write_csv(run, std::cout);
    } else {
        std::cout << run.report.theorem << ": " << run.report.graph_count << " graphs, "
                  << run.report.mismatches.size() << " mismatches, " << run.report.wall_ms
                  << " ms\n";
        for (const auto& rec : run.report.mismatches)
            std::cout << "MISMATCH " << to_json(rec).dump() << "\n";
    }
    return run.report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orientation / total domination toolkit"};
    app.require_subcommand(1);

    std::string g6, edges_path, orientation_spec, format = "human";

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph6", g6, "graph as a graph6 line");
        cmd->add_option("--edges", edges_path, "graph as an edge-list file (n, then u v pairs)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "json"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "gamma_t of one oriented graph");
    add_graph_opts(solve);
    solve->add_option("--orientation", orientation_spec,
                      "arc list as JSON [[tail,head],...] or @file")
        ->required();

    CLI::App* range = app.add_subcommand("range", "exact (dom_t, DOM_t) with witnesses");
    add_graph_opts(range);

    CLI::App* recognize = app.add_subcommand("recognize", "family certificates for one graph");
    add_graph_opts(recognize);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "exhaustive claim checks");
    verify->add_option("theorem", va.theorem, "claim to check")
        ->required()
        ->check(CLI::IsMember({"main", "result1", "result2", "concomp", "disconnected", "gap"}));
    verify->add_option("--input", va.input, "graph6 file (one graph per line)");
    verify->add_option("--max-n", va.max_n, "built-in enumeration bound (<= 7)");
    verify->add_option("--trials", va.trials, "random trials for concomp");
    verify->add_option("--max-total-n", va.max_total_n, "vertex budget per concomp union");
    verify->add_option("--seed", va.seed, "seed for randomized checks");
    verify->add_option("--kmin", va.k_min, "smallest chordal-path instance for gap");
    verify->add_option("--kmax", va.k_max, "largest chordal-path instance for gap");
    verify->add_flag("--no-fig8", va.no_fig8, "skip the 12-vertex hub instance in gap");
    verify->add_option("--workers", va.workers, "worker threads (env OTD_WORKERS)");
    verify->add_option("--out", va.out, "report file prefix (.jsonl, .csv)");
    verify->add_option("--format", va.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    std::string family, case_tag;
    F1Params fp;
    int e1 = -1, e2 = -1;
    CLI::App* generate =
        app.add_subcommand("generate", "family member + witness + extremal orientation");
    generate->add_option("family", family, "f1, f2, or f3")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3"}));
    generate->add_option("--k", fp.k, "path length (f1/f3)");
    generate->add_option("--cycles", fp.cycle_lengths, "cycle lengths")->delimiter(',');
    generate->add_option("--links", fp.links, "attachments per cycle")->delimiter(',');
    generate->add_option("--chords", fp.chords, "path chord indices (f1/f3)")->delimiter(',');
    generate->add_option("--case", case_tag, "f3 case tag, e.g. single-edge, dwk=3-via-xy");
    generate->add_option("--e1", e1, "first extra-edge endpoint (f3)");
    generate->add_option("--e2", e2, "second extra-edge endpoint (f3)");
    generate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            Graph g = load_graph(g6, edges_path);
            Orientation d = orientation_from_arcs(g, load_arcs(orientation_spec));
            if (!is_valid(d)) {
                std::cerr << "no total dominating set: some vertex has in-degree 0\n";
                return 1;
            }
            GammaT r = gamma_t(d);
            if (format == "json")
                std::cout << nlohmann::json{{"gamma_t", r.value}, {"witness", to_json(r.witness)}}
                                 .dump(2)
                          << "\n";
            else {
                std::cout << "gamma_t = " << r.value << "\nwitness =";
                for (int v : r.witness) std::cout << " " << v;
                std::cout << "\n";
            }
            return 0;
        }

        if (range->parsed()) {
            Graph g = load_graph(g6, edges_path);
            OrientationRange r = domt_range(g);
            if (format == "json")
                std::cout << nlohmann::json{{"dom_t", r.lower},
                                            {"DOM_t", r.upper},
                                            {"argmin", to_json(r.argmin)},
                                            {"argmax", to_json(r.argmax)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "dom_t = " << r.lower << "\nDOM_t = " << r.upper
                          << "\nargmin = " << to_json(r.argmin).dump()
                          << "\nargmax = " << to_json(r.argmax).dump() << "\n";
            return 0;
        }

        if (recognize->parsed()) {
            Graph g = load_graph(g6, edges_path);
            auto w = recognize_theorem_class(g);
            Result1Class r1 = recognize_result1_class(g);
            nlohmann::json j{{"family", w ? nlohmann::json(family_tag(*w)) : nlohmann::json(nullptr)},
                             {"witness", w ? to_json(*w) : nlohmann::json(nullptr)},
                             {"result1_class", r1.member},
                             {"result1_label", r1.member ? nlohmann::json(r1.label)
                                                         : nlohmann::json(nullptr)}};
            if (format == "json") {
                std::cout << j.dump(2) << "\n";
            } else if (w) {
                std::cout << family_tag(*w) << " " << to_json(*w).dump()
                          << (r1.member ? " (result1: " + r1.label + ")" : "") << "\n";
            } else {
                std::cout << "none" << (r1.member ? " (result1: " + r1.label + ")" : "") << "\n";
            }
            return 0;
        }

        if (verify->parsed()) return run_verify(va);

        if (generate->parsed()) {
            Graph g;
            FamilyWitness w;
            if (family == "f1") {
                GeneratedF1 r = generate_f1(fp);
                g = r.graph;
                w = r.witness;
            } else if (family == "f2") {
                GeneratedF2 r = generate_f2({fp.cycle_lengths, fp.links});
                g = r.graph;
                w = r.witness;
            } else {
                auto tag = f3_case_from_string(case_tag);
                if (!tag) throw CLI::ValidationError("f3 needs --case with a valid tag");
                F3Params p{fp, *tag, {}};
                if (e1 >= 0) p.endpoints.push_back(e1);
                if (e2 >= 0) p.endpoints.push_back(e2);
                GeneratedF3 r = generate_f3(p);
                g = r.graph;
                w = r.witness;
            }
            Orientation d = extremal_orientation_for(g, w);
            GammaT gt = gamma_t(d);
            if (gt.value != g.n - 1)
                throw std::logic_error("constructed orientation missed n-1");
            if (format == "json")
                std::cout << nlohmann::json{{"graph6", to_graph6(g)},
                                            {"witness", to_json(w)},
                                            {"extremal_orientation", to_json(d)},
                                            {"gamma_t", gt.value}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << to_graph6(g) << "\n"
                          << to_json(w).dump() << "\n"
                          << to_json(d).dump() << "\n";
            return 0;
        }
    } catch (const BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidOrientationError& e) {
        std::cerr << "no total dominating set: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
