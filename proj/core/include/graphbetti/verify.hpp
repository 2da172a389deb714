#ifndef GRAPHBETTI_VERIFY_HPP
#define GRAPHBETTI_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "graphbetti/graph.hpp"

namespace gb {

// Free (unrooted, unlabeled) trees on n vertices, one representative per
// isomorphism class.
std::vector<Graph> free_trees(int n);

// All forests with <= max_vertices vertices whose components all have an
// even vertex count, one per isomorphism class. Includes the null graph.
std::vector<Graph> even_forests_up_to(int max_vertices);

// Connected graphs on exactly n vertices up to isomorphism (brute-force
// canonicalization; intended for n <= 5).
std::vector<Graph> connected_graphs(int n);

// Erdos-Renyi-style graph on n vertices, each edge with probability 1/2.
Graph random_graph(int n, std::mt19937& rng);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or summary
};

struct SuiteOptions {
    unsigned seed = 1;
    int max_n = 0;  // 0 = suite default
};

// Known suite names: duality, signs, forest, flags, oracle, dyck, typeB.
std::vector<std::string> suite_names();

// Runs one suite (or "all"); throws std::invalid_argument for unknown
// names.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts);

}  // namespace gb

#endif
