#ifndef GRAPHBETTI_BETTI_HPP
#define GRAPHBETTI_BETTI_HPP

#include <string>
#include <vector>

#include "graphbetti/bigint.hpp"
#include "graphbetti/graph.hpp"

namespace gb {

// Per-degree free ranks, index i = beta^i. Trailing zeros trimmed;
// beta^0 = 1 for every graph (null-subgraph term).
struct BettiVector {
    std::vector<Int> beta;

    Int at(int i) const { return i >= 0 && i < static_cast<int>(beta.size()) ? beta[i] : Int(0); }
    void trim();
    bool operator==(const BettiVector&) const = default;
};

// beta^i = sum over |I| = 2i of |a(G[I])|.
BettiVector betti_assoc(const Graph& g);
// beta^i = sum over |I| + kappa(G[I]) = 2i of |b(G[I])|.
BettiVector betti_cube(const Graph& g);

Int euler_char(const BettiVector& v);
Int euler_char_assoc(const Graph& g);
Int euler_char_cube(const Graph& g);

// Exact integer sequences. euler_zigzag uses the boustrophedon
// (Entringer) recurrence; euler_zigzag(-2) = 0 by convention.
Int binomial(long long n, long long k);
Int catalan(int k);
Int narayana(int n, int k);  // (1/n) C(n,k) C(n,k-1), 1 <= k <= n
Int euler_zigzag(int k);
Int central_binomial(int k);  // C(2k, k)

// Closed forms for beta^i of the associahedron-type manifold; `vertices`
// is the graph's vertex count (the formulas are usually quoted for n+1
// vertices -- pass the count itself, the shift is handled here).
// family in {complete, path, cycle, star}; star means K_{1,vertices-1}.
// Valid for 0 <= i <= floor(vertices/2); throws otherwise.
Int closed_form_assoc(Family family, int vertices, int i);

// Closed forms for beta^i of the cubeahedron-type manifold. `n` follows
// each formula's own parameterization: path/cycle/complete on n vertices,
// star = K_{1,n} with n leaves. Returns 0 outside each formula's support.
Int closed_form_cube(Family family, int n, int i);

// Signed b-numbers for odd n: complete/path/cycle on n vertices,
// star = K_{1,n-1} (n vertices total). Throws for even n.
Int b_closed_form(Family family, int n);

// Combined identity check for a forest: betti_assoc(g) vs
// betti_cube(line_graph(g)), plus the spanning-subgraph identity
// a(G) = sum_{H in S(G)} b(L(H)) (signed and absolute) when g is even.
struct ForestLineReport {
    BettiVector assoc;
    BettiVector cube_of_line;
    bool betti_equal = false;
    bool even_forest = false;  // spanning identity only applies then
    Int a_value;
    Int signed_sum;
    Int abs_sum;
    bool signed_identity = false;
    bool abs_identity = false;
};
ForestLineReport forest_line_identity(const Graph& g);

// Explicit enumeration of partial Dyck words on Z_n with i left
// parentheses, grouped by the positions of their outermost parentheses.
struct DyckCensus {
    Int count;                                  // |D_i|
    std::vector<Int> class_sizes;               // one per equivalence class
    std::vector<Int> class_b_values;            // |b(H_f)| per class
    bool count_is_binomial = false;             // |D_i| == C(n,i)
    bool classes_match_b = false;               // |[f]| == |b(H_f)| classwise
    Int class_total;                            // sum of class sizes
};
DyckCensus partial_dyck_census(int n, int i);

}  // namespace gb

#endif
