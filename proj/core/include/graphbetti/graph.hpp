#ifndef GRAPHBETTI_GRAPH_HPP
#define GRAPHBETTI_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphbetti/errors.hpp"

namespace gb {

// Vertex subsets are bitmasks over the host graph's vertices.
using Mask = std::uint64_t;

// Hard cap on vertex count. Subset tables are O(2^n) and the inner
// recursions O(3^n), so anything past ~22 vertices is infeasible anyway.
inline constexpr int kMaxVertices = 24;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }

// Finite simple graph on vertices 0..n-1 with bitset adjacency rows.
// Immutable by convention once built; all operations below are pure.
struct Graph {
    int n = 0;
    std::vector<Mask> adj;  // adj[i] = neighbors of i

    Graph() = default;
    explicit Graph(int vertices);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    Mask vertex_mask() const { return n == 0 ? 0 : (Mask{1} << n) - 1; }
    int degree(int v) const { return popcount(adj[v]); }
    int edge_count() const;
    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

enum class Family { path, cycle, complete, star, octopus, spider };

struct FamilySpec {
    Family kind;
    int size = 0;            // vertex count (star: center + size-1 leaves)
    std::vector<int> arms;   // octopus/spider arm lengths, each >= 1
};

// Canonical labelings: path/cycle consecutive, star center last,
// octopus hub first with arms consecutive, spider = L(octopus).
// cycle with size 1 or 2 degenerates to K_1 / P_2.
Graph make_family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center = last vertex
Graph octopus_graph(const std::vector<int>& arms);
Graph spider_graph(const std::vector<int>& arms);

// `n=<int>;<u>-<v>[,<u>-<v>...]`, vertices 1-indexed. Duplicate edges
// collapse. Throws ParseError with a byte offset on malformed input.
Graph parse_edge_list(std::string_view text);

// graph6 interchange format, short form only (n < 63).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Subgraph induced by I, relabeled to 0..|I|-1 preserving order.
Graph induced(const Graph& g, Mask I);

// Vertex sets of the connected components, in order of lowest vertex.
std::vector<Mask> components(const Graph& g);
// Components of G[I], as masks in the host labeling.
std::vector<Mask> components_within(const Graph& g, Mask I);
int kappa(const Graph& g);
int kappa_within(const Graph& g, Mask I);

// True iff I is nonempty and G[I] is connected.
bool connected_in(const Graph& g, Mask I);
bool is_connected(const Graph& g);

// All nonempty I with G[I] connected, increasing popcount then numeric.
std::vector<Mask> connected_subsets(const Graph& g);

// Component-wise parity. The null graph is both even and odd.
bool is_even(const Graph& g);
bool is_odd(const Graph& g);
bool is_even_within(const Graph& g, Mask I);
bool is_odd_within(const Graph& g, Mask I);

// Vertices = edges of g in lexicographic order, adjacent iff they share
// an endpoint.
Graph line_graph(const Graph& g);

// Edge subsets (bitmasks over edges() order) covering every vertex.
std::vector<std::uint64_t> spanning_subgraphs_no_isolated(const Graph& g);

bool is_forest(const Graph& g);

}  // namespace gb

#endif
