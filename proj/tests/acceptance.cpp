// Acceptance gate: one PASS/FAIL line per criterion, exit 1 on any FAIL.
// Usage: acceptance <path-to-tbetti> <path-to-golden-data-dir>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphbetti/betti.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/invariants.hpp"
#include "graphbetti/toric.hpp"
#include "graphbetti/verify.hpp"

using namespace gb;

namespace {

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    pclose(p);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

bool suites_pass(const std::vector<std::string>& suites, std::string& detail) {
    SuiteOptions opts;  // seed 1, suite-default sizes
    for (const std::string& s : suites)
        for (const CheckResult& r : run_suite(s, opts))
            if (!r.pass) {
                detail = s + "/" + r.name + ": " + r.detail;
                return false;
            }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <tbetti-binary> <golden-data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data = argv[2];

    // 1. Betti tables for path and cycle families, byte-identical to the
    //    checked-in golden files.
    {
        bool ok = true;
        std::string detail;
        for (const char* fam : {"path", "cycle"}) {
            std::string got = run_command(cli + " table --family " + fam +
                                          " --polytope cube --max-n 9");
            std::string want = read_file(data + "/table1_" + fam + ".txt");
            if (want.empty() || got != want) {
                ok = false;
                detail = std::string("mismatch for family ") + fam;
            }
        }
        report(1, "family tables byte-identical to golden files", ok, detail);
    }

    // 2. Closed forms vs the recursion engine, every degree.
    {
        bool ok = true;
        std::string detail;
        auto mismatch = [&](const std::string& d) {
            ok = false;
            if (detail.empty()) detail = d;
        };
        for (int n = 1; n <= 12 && ok; ++n) {
            BettiVector pc = betti_cube(path_graph(n));
            BettiVector cc = betti_cube(cycle_graph(n));
            BettiVector pa = betti_assoc(path_graph(n));
            BettiVector ca = betti_assoc(cycle_graph(n));
            for (int i = 0; i <= n + 1; ++i) {
                if (pc.at(i) != closed_form_cube(Family::path, n, i))
                    mismatch("path cube n=" + std::to_string(n));
                if (cc.at(i) != closed_form_cube(Family::cycle, n, i))
                    mismatch("cycle cube n=" + std::to_string(n));
            }
            for (int i = 0; 2 * i <= n; ++i) {
                if (pa.at(i) != closed_form_assoc(Family::path, n, i))
                    mismatch("path assoc n=" + std::to_string(n));
                if (ca.at(i) != closed_form_assoc(Family::cycle, n, i))
                    mismatch("cycle assoc n=" + std::to_string(n));
            }
        }
        for (int n = 1; n <= 9 && ok; ++n) {
            BettiVector kc = betti_cube(complete_graph(n));
            BettiVector ka = betti_assoc(complete_graph(n));
            for (int i = 0; i <= n + 1; ++i)
                if (kc.at(i) != closed_form_cube(Family::complete, n, i))
                    mismatch("complete cube n=" + std::to_string(n));
            for (int i = 0; 2 * i <= n; ++i)
                if (ka.at(i) != closed_form_assoc(Family::complete, n, i))
                    mismatch("complete assoc n=" + std::to_string(n));
        }
        for (int n = 1; n <= 10 && ok; ++n) {
            // star with n leaves (n+1 vertices) for the cube family; the assoc
            // closed form is parameterized by total vertex count
            BettiVector sc = betti_cube(star_graph(n));
            for (int i = 0; i <= n + 1; ++i)
                if (sc.at(i) != closed_form_cube(Family::star, n, i))
                    mismatch("star cube leaves=" + std::to_string(n));
            if (n >= 2) {
                BettiVector sa = betti_assoc(star_graph(n - 1));
                for (int i = 0; 2 * i <= n; ++i)
                    if (sa.at(i) != closed_form_assoc(Family::star, n, i))
                        mismatch("star assoc vertices=" + std::to_string(n));
            }
        }
        report(2, "closed-form Betti numbers equal engine output "
                  "(paths/cycles <=12, complete <=9, stars <=10)", ok, detail);
    }

    // 3. The homology oracle reproduces both subset-sum formulas.
    {
        bool ok = true;
        std::string detail;
        std::size_t cap = default_face_cap();
        for (int n = 1; n <= 5 && ok; ++n)
            for (const Graph& g : connected_graphs(n)) {
                if (betti_via_homology(g, PolytopeKind::cube, cap) != betti_cube(g) ||
                    betti_via_homology(g, PolytopeKind::assoc, cap) != betti_assoc(g)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " graph " + encode_graph6(g);
                    break;
                }
            }
        for (const Graph& g : {path_graph(6), cycle_graph(6), star_graph(5)})
            if (ok && betti_via_homology(g, PolytopeKind::cube, cap) != betti_cube(g)) {
                ok = false;
                detail = "6-vertex cube case " + encode_graph6(g);
            }
        report(3, "homology oracle equals graph-invariant Betti formulas "
                  "(all 31 connected graphs <=5 vertices, plus three 6-vertex cases)",
               ok, detail);
    }

    // 4. Worked-example regression on the 4-vertex path.
    {
        Graph p4 = path_graph(4);
        SubsetTable at = a_table(p4);
        SubsetTable bt = b_table(p4);
        bool ok = at[0] == 1 && bt[0] == 1;
        for (int v = 0; v < 4; ++v)
            ok = ok && at[Mask{1} << v] == 0 && bt[Mask{1} << v] == -1;
        for (Mask I : {Mask{0b0011}, Mask{0b0110}, Mask{0b1100}})
            ok = ok && at[I] == -1 && bt[I] == 0;  // adjacent pairs
        for (Mask I : {Mask{0b0101}, Mask{0b1001}, Mask{0b1010}})
            ok = ok && at[I] == 0 && bt[I] == 1;  // non-adjacent pairs
        for (Mask I : {Mask{0b0111}, Mask{0b1110}})
            ok = ok && at[I] == 0 && bt[I] == 1;  // induced 3-paths
        for (Mask I : {Mask{0b1011}, Mask{0b1101}})
            ok = ok && at[I] == 0 && bt[I] == 0;  // disconnected triples
        ok = ok && a_number(p4) == 2 && b_number(p4) == 0 && b_number(path_graph(3)) == 1;
        report(4, "worked-example a/b values on the 4-vertex path", ok);
    }

    // 5-10. Property suites (seeded, deterministic).
    struct SuiteCriterion {
        int criterion;
        std::vector<std::string> suites;
        std::string what;
    };
    const std::vector<SuiteCriterion> rest{
        {5, {"duality", "signs"}, "duality identities and sign law on 500 seeded random graphs"},
        {6, {"forest"}, "forest/line-graph Betti identity and spanning-subgraph sum"},
        {7, {"flags"}, "polytope structure: facet counts, h-vectors, integrality, "
                        "path and star correspondences, square-facet witnesses"},
        {8, {"oracle"}, "subcomplex homology properties, duality of odd/even subcomplexes, "
                         "torsion-freeness"},
        {9, {"dyck"}, "circular partial-word census matches cycle Betti numbers"},
        {10, {"typeB"}, "signed-subset poset witness: disconnected order complex"},
    };
    for (const SuiteCriterion& sc : rest) {
        std::string detail;
        bool ok = suites_pass(sc.suites, detail);
        if (sc.criterion == 10 && ok)
            ok = type_b_homology(star_graph(4)).reduced_betti(0) >= 1;
        report(sc.criterion, sc.what, ok, detail);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS\n"
                                : std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
