// End-to-end checks of the command-line surface: output contents and, above
// all, the exit-code contract (0 verified, 1 mismatch/infeasible, 2 usage,
// 3 budget refusal). Takes the CLI binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "otd/graph6.hpp"
#include "otd/families.hpp"

namespace {

int failures = 0;
std::string cli;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed for: " << cmd << "\n";
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

void expect(bool ok, const std::string& what, const RunResult& r) {
    if (ok) {
        std::printf("ok   %s\n", what.c_str());
    } else {
        std::printf("FAIL %s (exit=%d)\n%s\n", what.c_str(), r.exit_code, r.output.c_str());
        ++failures;
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: otd_cli_test <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];

    {
        auto r = run("range --graph6 C~ --format json");
        expect(r.exit_code == 0 && contains(r.output, "\"dom_t\": 3") &&
                   contains(r.output, "\"DOM_t\": 3"),
               "range on K4 gives (3, 3)", r);
    }
    {
        auto r = run("range --graph6 " + otd::to_graph6(otd::fixture_cycle(7)));
        expect(r.exit_code == 0 && contains(r.output, "dom_t = 7") &&
                   contains(r.output, "DOM_t = 7"),
               "range on the 7-cycle gives (7, 7)", r);
    }
    {
        auto r = run("solve --graph6 " + otd::to_graph6(otd::fixture_cycle(5)) +
                     " --orientation '[[0,1],[1,2],[2,3],[3,4],[4,0]]'");
        expect(r.exit_code == 0 && contains(r.output, "gamma_t = 5"),
               "solve on a directed 5-cycle", r);
    }
    {
        // all arcs leave vertex 1 of the paw: vertex 1 keeps in-degree 0
        auto r = run("solve --graph6 " + otd::to_graph6(otd::fixture_paw()) +
                     " --orientation '[[1,0],[1,2],[1,3],[2,3]]'");
        expect(r.exit_code == 1 && contains(r.output, "no total dominating set"),
               "solve refuses an orientation without in-neighbors", r);
    }
    {
        otd::Graph k8(8);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) k8.add_edge(u, v);
        auto r = run("range --graph6 '" + otd::to_graph6(k8) + "'");
        expect(r.exit_code == 3 && contains(r.output, "refused"),
               "range refuses 28 edges instead of approximating", r);
    }
    {
        auto r = run("recognize --graph6 C~ --format json");
        expect(r.exit_code == 0 && contains(r.output, "\"family\": \"f2\"") &&
                   contains(r.output, "\"result1_class\": true"),
               "recognize K4 as a hub member and a minimum-side member", r);
    }
    {
        auto r = run("recognize --graph6 " + otd::to_graph6(otd::fixture_petersen()));
        expect(r.exit_code == 0 && contains(r.output, "none"), "recognize Petersen as none", r);
    }
    {
        auto r = run("verify main --max-n 6");
        expect(r.exit_code == 0 && contains(r.output, "0 mismatches"),
               "verify main up to 6 vertices", r);
    }
    {
        auto r = run("verify result2 --max-n 6");
        expect(r.exit_code == 0, "verify result2 up to 6 vertices", r);
    }
    {
        std::string path = "cli_doctored.g6";
        std::ofstream out(path);
        out << otd::to_graph6(otd::fixture_cycle(4)) << " f1\n";
        out.close();
        auto r = run("verify main --input " + path);
        std::remove(path.c_str());
        expect(r.exit_code == 1 && contains(r.output, "1 mismatches") &&
                   contains(r.output, "MISMATCH"),
               "doctored classification of the 4-cycle is caught with exit 1", r);
    }
    {
        auto r = run("verify concomp --trials 5 --max-total-n 8 --seed 99");
        expect(r.exit_code == 0 && contains(r.output, "5 graphs"),
               "verify concomp on five random unions", r);
    }
    {
        std::string saved = cli;
        cli = "OTD_WORKERS=3 " + cli;  // env var supplies the default worker count
        auto r = run("verify main --max-n 5");
        cli = saved;
        expect(r.exit_code == 0 && contains(r.output, "0 mismatches"),
               "worker count from the environment", r);
    }
    {
        auto r = run("verify gap --kmin 4 --kmax 5 --format json");
        expect(r.exit_code == 0 && contains(r.output, "\"dom_t\": 3") &&
                   contains(r.output, "fig8"),
               "gap survey covers the drawn instances", r);
    }
    {
        auto r = run("verify main --max-n 4 --out cli_report");
        std::ifstream jsonl("cli_report.jsonl");
        bool wrote = jsonl.good();
        std::string first;
        std::getline(jsonl, first);
        std::remove("cli_report.jsonl");
        expect(r.exit_code == 0 && wrote && contains(first, "\"graph6\""),
               "verify writes a jsonl report", r);
    }
    {
        auto r = run("verify result1 --max-n 4 --format csv");
        expect(r.exit_code == 0 && contains(r.output, "graph6,n,m,dom_t,DOM_t,family_tag") &&
                   contains(r.output, "C~,4,6,3,3,"),
               "csv format streams records to stdout", r);
    }
    {
        auto r = run("generate f2 --cycles 3 --links 3");
        expect(r.exit_code == 0 && contains(r.output, "C~"), "generate f2 emits K4", r);
    }
    {
        auto r = run("generate f1 --k 5 --chords 1,2,3 --format json");
        expect(r.exit_code == 0 && contains(r.output, "\"gamma_t\": 5"),
               "generate f1 reaches n-1 on the chordal path", r);
    }
    {
        auto r = run("generate f3 --k 2 --cycles 4 --links 1 --case dwk=2-via-wk --format json");
        expect(r.exit_code == 0 && contains(r.output, "\"family\": \"f3\""),
               "generate f3 with an explicit case", r);
    }
    {
        auto r = run("generate f1 --k 2");  // w_k would keep degree 1
        expect(r.exit_code == 2, "invalid generator parameters are a usage error", r);
    }
    {
        auto r = run("frobnicate");
        expect(r.exit_code == 2, "unknown subcommand is a usage error", r);
    }
    {
        auto r = run("verify main --max-n 9");
        expect(r.exit_code == 3, "enumeration beyond the built-in budget is refused", r);
    }

    if (failures) {
        std::printf("%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
