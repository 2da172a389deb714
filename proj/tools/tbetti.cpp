// tbetti: graph invariants, Betti numbers, h-vectors, cohomology profiles,
// and verification sweeps for the two polytope families.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphbetti/betti.hpp"
#include "graphbetti/errors.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/invariants.hpp"
#include "graphbetti/polytope.hpp"
#include "graphbetti/toric.hpp"
#include "graphbetti/verify.hpp"

namespace {

using gb::Int;
using json = nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitFalsified = 3;
constexpr int kExitCapacity = 4;

// Exact integers serialize as JSON numbers while they fit in 53 bits,
// as decimal strings beyond that.
json json_int(const Int& v) {
    static const Int kLimit = Int(1) << 53;
    if (v > -kLimit && v < kLimit) return static_cast<std::int64_t>(v);
    return v.str();
}

json json_ints(const std::vector<Int>& vs) {
    json a = json::array();
    for (const Int& v : vs) a.push_back(json_int(v));
    return a;
}

gb::Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw gb::ParseError("graph spec needs the form kind:value", 0);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 0) throw gb::ParseError("bad integer in graph spec", colon + 1);
        return v;
    };
    if (kind == "path") return gb::path_graph(parse_int(rest));
    if (kind == "cycle") return gb::cycle_graph(parse_int(rest));
    if (kind == "complete") return gb::complete_graph(parse_int(rest));
    // star:<n> = n leaves, n+1 vertices
    if (kind == "star") return gb::star_graph(parse_int(rest));
    if (kind == "octopus") {
        std::vector<int> arms;
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            arms.push_back(parse_int(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return gb::octopus_graph(arms);
    }
    if (kind == "g6") return gb::parse_graph6(rest);
    if (kind == "edges") return gb::parse_edge_list(rest);
    throw gb::ParseError("unknown graph spec kind: " + kind, 0);
}

json graph_json(const gb::Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u + 1, v + 1}));
    return json{{"n", g.n}, {"edges", edges}};
}

std::string join_ints(const std::vector<Int>& vs) {
    std::string out;
    for (const Int& v : vs) {
        if (!out.empty()) out += ' ';
        out += v.str();
    }
    return out;
}

struct Emitter {
    bool as_json = false;
    std::string command;
    json graph;
    json result = json::object();
    std::vector<std::string> lines;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void flush() {
        if (as_json) {
            json out;
            out["command"] = command;
            if (!graph.is_null()) out["graph"] = graph;
            out["result"] = result;
            out["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

gb::PolytopeKind parse_kind(const std::string& s) {
    return s == "cube" ? gb::PolytopeKind::cube : gb::PolytopeKind::assoc;
}

gb::BettiVector betti_of(const gb::Graph& g, gb::PolytopeKind kind) {
    return kind == gb::PolytopeKind::cube ? gb::betti_cube(g) : gb::betti_assoc(g);
}

std::string group_string(const Int& free, const Int& z2) {
    std::vector<std::string> parts;
    if (free == 1)
        parts.push_back("Z");
    else if (free > 1)
        parts.push_back("Z^" + free.str());
    if (z2 == 1)
        parts.push_back("Z2");
    else if (z2 > 1)
        parts.push_back("Z2^" + z2.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Betti numbers of real toric manifolds over graph polytopes"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report");

    std::string graph_spec, which = "both", polytope = "cube", family, suite = "all";
    bool verbose = false, with_oracle = false;
    int max_n = 0;
    unsigned seed = 1;

    auto* inv = app.add_subcommand("invariant", "a- and b-numbers of a graph");
    inv->add_option("--graph", graph_spec, "graph spec")->required();
    inv->add_option("--which", which, "a|b|both")->check(CLI::IsMember({"a", "b", "both"}));
    inv->add_flag("--verbose", verbose, "dump the full subset tables");

    auto* bet = app.add_subcommand("betti", "Betti numbers of the real toric manifold");
    bet->add_option("--graph", graph_spec, "graph spec")->required();
    bet->add_option("--polytope", polytope, "assoc|cube")
        ->check(CLI::IsMember({"assoc", "cube"}));
    bet->add_flag("--oracle", with_oracle, "cross-check against the homology sum");

    auto* tab = app.add_subcommand("table", "Betti triangles for a graph family");
    tab->add_option("--family", family, "path|cycle|complete|star")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "star"}));
    tab->add_option("--polytope", polytope, "assoc|cube")
        ->check(CLI::IsMember({"assoc", "cube"}));
    tab->add_option("--max-n", max_n, "largest row")->required()->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "property sweeps");
    ver->add_option("--suite", suite, "duality|signs|forest|flags|oracle|dyck|typeB|all")
        ->check(CLI::IsMember({"duality", "signs", "forest", "flags", "oracle", "dyck",
                               "typeB", "all"}));
    ver->add_option("--seed", seed, "random seed");
    ver->add_option("--max-n", max_n, "size override");

    auto* coh = app.add_subcommand("cohomology", "integral cohomology profile");
    coh->add_option("--graph", graph_spec, "graph spec")->required();
    coh->add_option("--polytope", polytope, "assoc|cube")
        ->check(CLI::IsMember({"assoc", "cube"}));

    auto* hv = app.add_subcommand("hvector", "h-vector of the polytope");
    hv->add_option("--graph", graph_spec, "graph spec")->required();
    hv->add_option("--polytope", polytope, "assoc|cube")
        ->check(CLI::IsMember({"assoc", "cube"}));

    CLI11_PARSE(app, argc, argv);

    Emitter em;
    em.as_json = as_json;

    if (inv->parsed()) {
        em.command = "invariant";
        gb::Graph g = parse_graph_spec(graph_spec);
        em.graph = graph_json(g);
        if (which != "b") {
            Int a = gb::a_number(g);
            em.result["a"] = json_int(a);
            em.lines.push_back("a(G) = " + a.str());
        }
        if (which != "a") {
            Int b = gb::b_number(g);
            em.result["b"] = json_int(b);
            em.lines.push_back("b(G) = " + b.str());
        }
        if (verbose) {
            if (which != "b") {
                auto t = gb::a_table(g);
                em.result["a_table"] = json_ints(t.values);
                em.lines.push_back("a-table: " + join_ints(t.values));
            }
            if (which != "a") {
                auto t = gb::b_table(g);
                em.result["b_table"] = json_ints(t.values);
                em.lines.push_back("b-table: " + join_ints(t.values));
            }
        }
    } else if (bet->parsed()) {
        em.command = "betti";
        gb::Graph g = parse_graph_spec(graph_spec);
        em.graph = graph_json(g);
        gb::PolytopeKind kind = parse_kind(polytope);
        gb::BettiVector b = betti_of(g, kind);
        em.result["polytope"] = polytope;
        em.result["betti"] = json_ints(b.beta);
        em.lines.push_back(join_ints(b.beta));
        if (with_oracle) {
            gb::BettiVector o = gb::betti_via_homology(g, kind, gb::default_face_cap());
            bool agree = o == b;
            em.result["oracle"] = json_ints(o.beta);
            em.result["agree"] = agree;
            em.lines.push_back("oracle: " + join_ints(o.beta));
            em.lines.push_back(agree ? "AGREE" : "DISAGREE");
            if (!agree) {
                em.flush();
                return kExitFalsified;
            }
        }
    } else if (tab->parsed()) {
        em.command = "table";
        gb::PolytopeKind kind = parse_kind(polytope);
        em.result["family"] = family;
        em.result["polytope"] = polytope;
        em.result["max_n"] = max_n;
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n) {
            gb::Graph g;
            if (family == "path")
                g = gb::path_graph(n);
            else if (family == "cycle")
                g = gb::cycle_graph(n);
            else if (family == "complete")
                g = gb::complete_graph(n);
            else
                g = gb::star_graph(n);  // n leaves
            gb::BettiVector b = betti_of(g, kind);
            rows.push_back(json_ints(b.beta));
            em.lines.push_back(std::to_string(n) + ": " + join_ints(b.beta));
        }
        em.result["rows"] = rows;
    } else if (ver->parsed()) {
        em.command = "verify";
        gb::SuiteOptions opts;
        opts.seed = seed;
        opts.max_n = max_n;
        auto checks = gb::run_suite(suite, opts);
        bool all_pass = true;
        json jc = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            jc.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            em.lines.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name +
                               (c.detail.empty() || c.pass ? "" : " (" + c.detail + ")"));
        }
        em.result["suite"] = suite;
        em.result["checks"] = jc;
        em.result["all_pass"] = all_pass;
        em.lines.push_back(all_pass ? "PASS" : "FAIL");
        em.flush();
        return all_pass ? 0 : kExitFalsified;
    } else if (coh->parsed()) {
        em.command = "cohomology";
        gb::Graph g = parse_graph_spec(graph_spec);
        em.graph = graph_json(g);
        gb::CohomologyProfile p =
            gb::cohomology_profile(g, parse_kind(polytope), gb::default_face_cap());
        em.result["polytope"] = polytope;
        em.result["free"] = json_ints(p.free_rank);
        em.result["z2"] = json_ints(p.z2_rank);
        json groups = json::array();
        for (std::size_t i = 0; i < p.free_rank.size(); ++i) {
            std::string s = group_string(p.free_rank[i], p.z2_rank[i]);
            groups.push_back(s);
            em.lines.push_back("H^" + std::to_string(i) + ": " + s);
        }
        em.result["groups"] = groups;
    } else if (hv->parsed()) {
        em.command = "hvector";
        gb::Graph g = parse_graph_spec(graph_spec);
        em.graph = graph_json(g);
        auto h = parse_kind(polytope) == gb::PolytopeKind::cube ? gb::h_vector_cube(g)
                                                                : gb::h_vector_assoc(g);
        em.result["polytope"] = polytope;
        em.result["h"] = json_ints(h);
        em.lines.push_back(join_ints(h));
    }
    em.flush();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gb::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gb::FalsificationError& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const gb::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
