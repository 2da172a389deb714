#ifndef GRAPHBETTI_HOMOLOGY_HPP
#define GRAPHBETTI_HOMOLOGY_HPP

#include <vector>

#include "graphbetti/bigint.hpp"
#include "graphbetti/invariants.hpp"

namespace gb {

// Finite abstract complex given by its maximal faces (strictly sorted
// vertex lists, antichain). Two degenerate values are distinct:
//   - the void complex (no faces at all): maximal_faces empty
//   - the (-1)-sphere {∅}: maximal_faces == {{}}
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> maximal_faces;

    static SimplicialComplex void_complex() { return {}; }
    static SimplicialComplex minus_one_sphere() { return {0, {{}}}; }
    bool is_void() const { return maximal_faces.empty(); }
    int dimension() const;  // -2 for void, -1 for {∅}

    bool operator==(const SimplicialComplex&) const = default;
};

struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> a;  // row-major
};

struct SnfResult {
    std::vector<Int> factors;  // d_1 | d_2 | ..., all > 0
    int rank = 0;
};

// Invariant factors and rank; pivots chosen by smallest nonzero entry.
SnfResult smith_normal_form(const IntegerMatrix& m);

// Reduced integral homology in degrees -1..dim. All results are REDUCED;
// the empty complex {∅} reports betti(-1) = 1.
struct HomologyGroups {
    int top_dim = -2;
    std::vector<Int> betti;                  // index q+1 = free rank of H~_q
    std::vector<std::vector<Int>> torsion;   // invariant factors > 1

    Int reduced_betti(int q) const;
    const std::vector<Int>& torsion_in(int q) const;
    bool torsion_free() const;
    bool trivial() const;  // all reduced homology zero
    bool operator==(const HomologyGroups&) const = default;
};

// Faces enumerated by downward closure; throws CapacityError past
// `face_cap` total faces (0 = unlimited).
HomologyGroups reduced_homology(const SimplicialComplex& k, std::size_t face_cap = 0);

// Z_2-Betti numbers (reduced), index q+1.
std::vector<Int> reduced_betti_gf2(const SimplicialComplex& k, std::size_t face_cap = 0);

// Vertices = proper-part elements of a bounded poset, faces = chains.
SimplicialComplex order_complex(const Poset& p);

// Reduced Euler characteristic: chi~({∅}) = -1, chi~(point) = 0,
// chi~(void) = 0.
Int euler_characteristic(const SimplicialComplex& k);

// All faces grouped by dimension (faces_by_dim[q] = q-faces), each face a
// sorted vertex list, deterministic order.
std::vector<std::vector<std::vector<int>>> enumerate_faces(const SimplicialComplex& k,
                                                           std::size_t face_cap = 0);

}  // namespace gb

#endif
