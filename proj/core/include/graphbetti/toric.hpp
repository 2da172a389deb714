#ifndef GRAPHBETTI_TORIC_HPP
#define GRAPHBETTI_TORIC_HPP

#include <cstddef>
#include <vector>

#include "graphbetti/betti.hpp"
#include "graphbetti/bigint.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/homology.hpp"
#include "graphbetti/polytope.hpp"

namespace gb {

enum class PolytopeKind { assoc, cube };

// Facet normals reduced mod 2: row k, column j = k-th coordinate of the
// j-th facet normal. Rows indexed by ambient dimension.
struct CharMatrix {
    int rows = 0;
    std::vector<Mask> columns;  // bit k of columns[j] = entry (k, j)
};

// One bit per facet: the union of the flagged facets is the subcomplex
// whose reduced homology feeds the Betti-number sum.
using OmegaVector = std::vector<char>;

// Per degree i: free rank and the number of order-2 summands.
struct CohomologyProfile {
    std::vector<Int> free_rank;
    std::vector<Int> z2_rank;
};

// Columns = normals mod 2. Throws FalsificationError on a zero column or
// if some vertex's columns are Z_2-dependent.
CharMatrix char_matrix(const PolytopeModel& m);

// Z_2 sum of the rows of `cm` indexed by S.
OmegaVector omega(const CharMatrix& cm, Mask S);

// Induced subcomplex of the dual complex on the flagged facet-vertices.
// No flagged facet yields the (-1)-sphere.
SimplicialComplex p_omega_complex(const PolytopeModel& m, const SimplicialComplex& dual,
                                  const OmegaVector& w);

// Direct construction of the odd subcomplex of the cube model's boundary
// sphere: tubes meeting S oddly plus the bars of S, with the cube
// compatibility relation. k_odd(g) uses S = V(g).
SimplicialComplex k_odd(const Graph& g, Mask S);
SimplicialComplex k_odd(const Graph& g);
// Complementary induced subcomplex (even tubes and the unselected bars)
// for an odd graph h with S = V(h).
SimplicialComplex k_even(const Graph& h);

// Sum over all row subsets S of the reduced Betti numbers of the omega
// subcomplexes; the homology-based oracle for both Betti formulas. The
// assoc kind runs per component and multiplies Betti polynomials.
BettiVector betti_via_homology(const Graph& g, PolytopeKind kind, std::size_t face_cap = 0);

// Free ranks from the oracle plus Z_2 ranks h_i - beta^i; requires every
// omega subcomplex torsion-free (throws FalsificationError otherwise).
CohomologyProfile cohomology_profile(const Graph& g, PolytopeKind kind,
                                     std::size_t face_cap = 0);

// The face cap honored by the command-line tools: 200000 unless the
// TBETTI_FACE_CAP environment variable overrides it.
std::size_t default_face_cap();

// Reduced homology of k_odd(g, S) matches that of k_odd on the induced
// subgraph g[S] with everything selected, torsion included.
bool restriction_check(const Graph& g, Mask S);
// k_odd of a connected even graph has trivial reduced homology.
bool even_trivial_check(const Graph& g);
// For odd g: beta~_q(k_odd(g)) = beta~_{n-q-2}(k_even(g)) in every degree.
bool alexander_check(const Graph& g);

// Poset of signed vertex subsets (disjoint positive and negative parts)
// inducing even subgraphs, ordered by containment, with bounds adjoined.
Poset type_b_poset(const Graph& g);
// Reduced homology of its proper-part order complex.
HomologyGroups type_b_homology(const Graph& g);

}  // namespace gb

#endif
