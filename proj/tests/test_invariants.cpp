#include <doctest.h>

#include "graphbetti/graph.hpp"
#include "graphbetti/homology.hpp"
#include "graphbetti/invariants.hpp"

using namespace gb;

TEST_CASE("a/b values on the four-vertex path, all subsets") {
    Graph p4 = path_graph(4);
    SubsetTable at = a_table(p4);
    SubsetTable bt = b_table(p4);

    CHECK(at[0] == 1);  // null graph
    CHECK(bt[0] == 1);
    for (int v = 0; v < 4; ++v) {
        CHECK(at[Mask{1} << v] == 0);
        CHECK(bt[Mask{1} << v] == -1);
    }
    // adjacent pairs 12, 23, 34
    for (Mask I : {Mask{0b0011}, Mask{0b0110}, Mask{0b1100}}) {
        CHECK(at[I] == -1);
        CHECK(bt[I] == 0);
    }
    // non-adjacent pairs 13, 14, 24
    for (Mask I : {Mask{0b0101}, Mask{0b1001}, Mask{0b1010}}) {
        CHECK(at[I] == 0);
        CHECK(bt[I] == 1);
    }
    // connected triples 123, 234 induce paths
    for (Mask I : {Mask{0b0111}, Mask{0b1110}}) {
        CHECK(at[I] == 0);
        CHECK(bt[I] == 1);
    }
    // disconnected triples 124, 134
    for (Mask I : {Mask{0b1011}, Mask{0b1101}}) {
        CHECK(at[I] == 0);
        CHECK(bt[I] == 0);
    }
    CHECK(at[0b1111] == 2);
    CHECK(bt[0b1111] == 0);

    CHECK(a_number(p4) == 2);
    CHECK(b_number(p4) == 0);
    CHECK(b_number(path_graph(3)) == 1);
}

TEST_CASE("parity short-circuit") {
    CHECK(a_number(path_graph(5)) == 0);   // odd graph
    CHECK(b_number(path_graph(4)) == 0);   // even graph, but via recursion
    CHECK(b_number(complete_graph(4)) == 0);
    CHECK(a_number(complete_graph(4)) == 5);  // zigzag A_4, positive sign
}

TEST_CASE("frozen small values") {
    CHECK(a_number(cycle_graph(4)) == 3);
    CHECK(a_number(cycle_graph(6)) == -10);
    CHECK(b_number(cycle_graph(5)) == -6);
    CHECK(b_number(complete_graph(5)) == -16);
    CHECK(b_number(path_graph(5)) == -2);
    CHECK(b_number(star_graph(4)) == -5);  // K_{1,4}
}

TEST_CASE("cross-table duality identities") {
    for (const Graph& g : {path_graph(4), path_graph(5), cycle_graph(5), cycle_graph(6),
                           complete_graph(4), star_graph(4), parse_edge_list("n=5;1-2,3-4")}) {
        CHECK(a_number(g) == a_via_b(g));
        CHECK(b_number(g) == b_via_a(g));
    }
}

TEST_CASE("sign law on nonzero values") {
    for (const Graph& g : {path_graph(4), path_graph(6), cycle_graph(4), cycle_graph(6),
                           complete_graph(6)}) {
        Int a = a_number(g);
        if (a != 0) CHECK((a > 0 ? 1 : -1) == sign_of_a(g));
    }
    for (const Graph& g : {path_graph(3), path_graph(5), cycle_graph(5), complete_graph(5),
                           star_graph(4)}) {
        Int b = b_number(g);
        if (b != 0) CHECK((b > 0 ? 1 : -1) == sign_of_b(g));
    }
}

TEST_CASE("subset posets and Mobius values") {
    Graph p2 = path_graph(2);
    Poset even = even_poset(p2);
    CHECK(even.size() == 2);  // no proper nonempty even subsets
    CHECK(mobius_invariant(even) == a_number(p2));
    CHECK(a_number(p2) == -1);

    Graph p3 = path_graph(3);
    Poset odd = odd_poset(p3);
    CHECK(odd.size() == 6);  // bounds + three singletons + {1,3}
    CHECK(mobius_invariant(odd) == b_number(p3));

    Graph p4 = path_graph(4);
    CHECK(mobius_invariant(even_poset(p4)) == a_number(p4));
}

TEST_CASE("Mobius equals reduced Euler characteristic of the order complex") {
    for (const Graph& g : {path_graph(4), cycle_graph(4), complete_graph(4)}) {
        Poset p = even_poset(g);
        CHECK(mobius_invariant(p) == euler_characteristic(order_complex(p)));
        Poset q = odd_poset(g);
        CHECK(mobius_invariant(q) == euler_characteristic(order_complex(q)));
    }
}

TEST_CASE("subset parity table") {
    Graph g = parse_edge_list("n=4;1-2,3-4");
    SubsetParity sp = subset_parity(g);
    CHECK(sp.even[0] == 1);
    CHECK(sp.odd[0] == 1);
    CHECK(sp.even[0b0011] == 1);
    CHECK(sp.odd[0b0011] == 0);
    CHECK(sp.odd[0b0101] == 1);
    CHECK(sp.kappa[0b1111] == 2);
    CHECK(sp.kappa[0b0101] == 2);
}
