#ifndef GRAPHBETTI_POLYTOPE_HPP
#define GRAPHBETTI_POLYTOPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "graphbetti/bigint.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/homology.hpp"

namespace gb {

// A facet of one of the two polytope families: a tube (vertex set whose
// induced subgraph is connected) or, for the cube-like family, a bar
// attached to a single vertex.
enum class FacetKind { assoc_tube, cube_tube, cube_bar };

struct Facet {
    FacetKind kind;
    Mask tube = 0;  // tube kinds
    int bar = -1;   // cube_bar

    std::string label(int n) const;  // e.g. "123" or "2~"
    bool operator==(const Facet&) const = default;
};

// Combinatorial model: facets, pairwise compatibility (two facets meet in
// a codimension-2 face), and primitive integer normals of length `dim`.
struct PolytopeModel {
    int dim = 0;
    Graph graph{0};
    std::vector<Facet> facets;
    std::vector<std::vector<char>> compat;         // symmetric, irreflexive
    std::vector<std::vector<long long>> normals;   // facet -> dim entries
};

// Simple polytope on n-1 dimensions whose facets are the proper connected
// induced subgraphs of a connected graph on n vertices. Normals are taken
// with the highest-labelled vertex distinguished and the (always-zero)
// last coordinate dropped.
PolytopeModel model_assoc(const Graph& g);

// n-dimensional polytope with facets {tubes of g} plus one bar per vertex.
// Works for disconnected g as well.
PolytopeModel model_cube(const Graph& g);

// Clique complex of the compatibility graph; its maximal faces are the
// polytope's vertices and must all have exactly `dim` elements.
// Throws FalsificationError otherwise.
SimplicialComplex dual_complex(const PolytopeModel& m);

// Face counts of the polytope, index i = number of i-dimensional faces,
// i = 0..dim-1 (vertices through facets).
std::vector<Int> f_vector(const PolytopeModel& m);

// h-vector via sum_i h_i t^i = sum_k f*_{k-1} (t-1)^{dim-k} over the dual
// complex face counts. Dehn-Sommerville symmetry is asserted.
std::vector<Int> h_vector(const PolytopeModel& m);

// h-vectors for arbitrary (possibly disconnected) graphs: product of the
// per-component h-polynomials for the assoc family; direct whole-graph
// model for the cube family.
std::vector<Int> h_vector_assoc(const Graph& g);
std::vector<Int> h_vector_cube(const Graph& g);

// Every vertex's facet normals form an integral basis (det = +-1).
bool delzant_check(const PolytopeModel& m);

// Facet bijection between the assoc model of a path on n+1 vertices and
// the cube model of a path on n vertices; verifies it transports the
// compatibility relation both ways. Throws FalsificationError on failure.
bool path_poset_iso(int n);

// Label bijection from the cube model of the complete graph K_n to the
// assoc model of the star with n leaves, upgraded to a unimodular matrix
// identifying the normal fans. Throws FalsificationError on failure.
bool star_fan_iso(int n);

// For a 3-dimensional model: all pairs of 4-vertex facets with opposite
// parallel normals. Throws std::invalid_argument unless dim == 3.
std::vector<std::pair<int, int>> square_facet_witness(const PolytopeModel& m);

}  // namespace gb

#endif
