#ifndef GRAPHBETTI_INVARIANTS_HPP
#define GRAPHBETTI_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "graphbetti/bigint.hpp"
#include "graphbetti/graph.hpp"

namespace gb {

// values[I] = a(G[I]) (or b(G[I])) for every vertex subset I of the host.
struct SubsetTable {
    Graph host;
    std::vector<Int> values;  // length 2^n

    const Int& operator[](Mask I) const { return values[I]; }
};

// Subset recursion in increasing mask order; the proper-subgraph sum is a
// direct submask enumeration (O(3^n) total). Subsets of the wrong parity
// short-circuit to 0.
SubsetTable a_table(const Graph& g);
SubsetTable b_table(const Graph& g);
Int a_number(const Graph& g);
Int b_number(const Graph& g);

// Each invariant computed from the *other* one's table only:
//   b(G) = (-1)^|V| sum_{H <= G} a(H),   a(G) = sum_{H <= G} b(H).
Int b_via_a(const Graph& g);
Int a_via_b(const Graph& g);

// Bounded poset. Element 0 is the bottom, the last element the top;
// labels are opaque to the poset machinery.
struct Poset {
    std::vector<std::uint64_t> labels;
    std::vector<std::vector<char>> less;  // strict order, less[i][j] == i < j

    int size() const { return static_cast<int>(labels.size()); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
};

// Proper nonempty subsets I with G[I] even (resp. odd), ordered by
// inclusion, with artificial bounds adjoined. Labels are subset masks;
// the bounds carry sentinel labels.
Poset even_poset(const Graph& g);
Poset odd_poset(const Graph& g);

// mu(0,1) by the standard recursion, memoized bottom-up.
Int mobius_invariant(const Poset& p);

// Predicted sign of a(g)/b(g): for even g, (-1)^{|V|/2}; for odd g,
// (-1)^{(|V|+kappa)/2}; 0 when the parity does not apply. The prediction
// is only meaningful when the computed value is nonzero.
int sign_of_a(const Graph& g);
int sign_of_b(const Graph& g);

// Parity/component data for every subset of the host, one O(2^n) pass.
struct SubsetParity {
    std::vector<std::uint8_t> even, odd;  // indexed by mask
    std::vector<std::uint8_t> kappa;
};
SubsetParity subset_parity(const Graph& g);

}  // namespace gb

#endif
