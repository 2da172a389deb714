#include "graphbetti/invariants.hpp"

#include <algorithm>

namespace gb {

SubsetParity subset_parity(const Graph& g) {
    const std::size_t size = std::size_t{1} << g.n;
    SubsetParity p;
    p.even.resize(size);
    p.odd.resize(size);
    p.kappa.resize(size);
    p.even[0] = p.odd[0] = 1;  // null graph is both
    p.kappa[0] = 0;
    for (Mask I = 1; I < size; ++I) {
        // Peel the component of the lowest vertex; the remainder is a
        // smaller mask already computed.
        Mask comp = I & -I;
        for (;;) {
            Mask grown = comp;
            for (Mask m = comp; m; m &= m - 1) grown |= g.adj[lowest_bit(m)] & I;
            if (grown == comp) break;
            comp = grown;
        }
        Mask rest = I & ~comp;
        bool comp_even = popcount(comp) % 2 == 0;
        p.even[I] = comp_even && p.even[rest];
        p.odd[I] = !comp_even && p.odd[rest];
        p.kappa[I] = static_cast<std::uint8_t>(1 + p.kappa[rest]);
    }
    return p;
}

namespace {

SubsetTable recursion_table(const Graph& g, const std::vector<std::uint8_t>& admissible) {
    SubsetTable t;
    t.host = g;
    t.values.assign(std::size_t{1} << g.n, Int(0));
    t.values[0] = 1;
    for (Mask I = 1; I < t.values.size(); ++I) {
        if (!admissible[I]) continue;
        Int sum = t.values[0];
        for (Mask J = (I - 1) & I; J; J = (J - 1) & I) sum += t.values[J];
        t.values[I] = -sum;
    }
    return t;
}

}  // namespace

SubsetTable a_table(const Graph& g) { return recursion_table(g, subset_parity(g).even); }
SubsetTable b_table(const Graph& g) { return recursion_table(g, subset_parity(g).odd); }

Int a_number(const Graph& g) { return a_table(g).values[g.vertex_mask()]; }
Int b_number(const Graph& g) { return b_table(g).values[g.vertex_mask()]; }

Int b_via_a(const Graph& g) {
    SubsetTable t = a_table(g);
    Int sum = 0;
    for (const Int& v : t.values) sum += v;
    return g.n % 2 == 0 ? sum : -sum;
}

Int a_via_b(const Graph& g) {
    SubsetTable t = b_table(g);
    Int sum = 0;
    for (const Int& v : t.values) sum += v;
    return sum;
}

namespace {

constexpr std::uint64_t kBottomLabel = ~std::uint64_t{0};
constexpr std::uint64_t kTopLabel = ~std::uint64_t{0} - 1;

Poset parity_poset(const Graph& g, bool even) {
    SubsetParity parity = subset_parity(g);
    std::vector<Mask> proper;
    const Mask full = g.vertex_mask();
    for (Mask I = 1; I < (std::size_t{1} << g.n); ++I) {
        if (I == full) continue;
        if (even ? parity.even[I] : parity.odd[I]) proper.push_back(I);
    }
    std::stable_sort(proper.begin(), proper.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    Poset p;
    p.labels.push_back(kBottomLabel);
    for (Mask I : proper) p.labels.push_back(I);
    p.labels.push_back(kTopLabel);
    const int m = p.size();
    p.less.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
        p.less[0][i] = (i != 0);
        p.less[i][m - 1] = (i != m - 1);
    }
    for (std::size_t a = 0; a < proper.size(); ++a)
        for (std::size_t b = 0; b < proper.size(); ++b)
            if (a != b && (proper[a] & proper[b]) == proper[a] && proper[a] != proper[b])
                p.less[a + 1][b + 1] = 1;
    return p;
}

}  // namespace

Poset even_poset(const Graph& g) { return parity_poset(g, true); }
Poset odd_poset(const Graph& g) { return parity_poset(g, false); }

Int mobius_invariant(const Poset& p) {
    const int m = p.size();
    std::vector<Int> mu(m, 0);
    mu[p.bottom()] = 1;
    // Accumulate in an order compatible with the relation: process t once
    // all r < t are done. Elements sorted by number of predecessors works
    // for any finite poset.
    std::vector<int> below(m, 0);
    for (int t = 0; t < m; ++t)
        for (int r = 0; r < m; ++r)
            if (p.less[r][t]) ++below[t];
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    for (int t : order) {
        if (t == p.bottom()) continue;
        Int sum = 0;
        for (int r = 0; r < m; ++r)
            if (r == p.bottom() || p.less[r][t]) sum += mu[r];
        mu[t] = -sum;
    }
    return mu[p.top()];
}

int sign_of_a(const Graph& g) {
    if (!is_even(g)) return 0;
    return (g.n / 2) % 2 == 0 ? 1 : -1;
}

int sign_of_b(const Graph& g) {
    if (!is_odd(g)) return 0;
    return ((g.n + kappa(g)) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace gb
