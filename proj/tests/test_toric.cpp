#include <doctest.h>

#include <set>

#include "graphbetti/betti.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/toric.hpp"

using namespace gb;

TEST_CASE("characteristic matrices are nondegenerate") {
    for (const Graph& g : {path_graph(3), path_graph(4), cycle_graph(4), complete_graph(4)}) {
        PolytopeModel mc = model_cube(g);
        CharMatrix cm = char_matrix(mc);
        CHECK(cm.rows == mc.dim);
        CHECK(cm.columns.size() == mc.facets.size());
        CHECK_NOTHROW(char_matrix(model_assoc(g)));
    }
}

TEST_CASE("row-sum vectors") {
    PolytopeModel m = model_cube(path_graph(2));
    CharMatrix cm = char_matrix(m);
    OmegaVector w0 = omega(cm, 0);
    for (char c : w0) CHECK(c == 0);
    OmegaVector wall = omega(cm, (Mask{1} << cm.rows) - 1);
    CHECK(static_cast<int>(wall.size()) == static_cast<int>(m.facets.size()));
}

TEST_CASE("homology oracle matches the subset-sum formulas") {
    for (const Graph& g : {path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5),
                           star_graph(3), parse_edge_list("n=4;1-2,3-4")}) {
        CHECK(betti_via_homology(g, PolytopeKind::cube) == betti_cube(g));
    }
    for (const Graph& g : {path_graph(3), path_graph(4), cycle_graph(4), complete_graph(4)}) {
        CHECK(betti_via_homology(g, PolytopeKind::assoc) == betti_assoc(g));
    }
}

TEST_CASE("pentagon cohomology profile") {
    CohomologyProfile p = cohomology_profile(path_graph(3), PolytopeKind::assoc);
    REQUIRE(p.free_rank.size() == 3);
    CHECK(p.free_rank[0] == 1);
    CHECK(p.free_rank[1] == 2);
    CHECK(p.free_rank[2] == 0);
    CHECK(p.z2_rank[0] == 0);
    CHECK(p.z2_rank[1] == 1);
    CHECK(p.z2_rank[2] == 1);

    CohomologyProfile q = cohomology_profile(path_graph(2), PolytopeKind::cube);
    CHECK(q.free_rank == p.free_rank);
    CHECK(q.z2_rank == p.z2_rank);
}

TEST_CASE("odd subcomplex of a wheel-like graph with two selected vertices") {
    Graph g = parse_edge_list("n=4;1-2,1-3,2-3,2-4,3-4");
    Mask S = 0b0110;  // vertices 2 and 3
    SimplicialComplex k = k_odd(g, S);
    std::set<int> used;
    for (const auto& f : k.maximal_faces)
        for (int v : f) used.insert(v);
    CHECK(used.size() == 10);  // 2 bars + 4 odd singleton/pair tubes... 10 facets flagged
    CHECK(!k.is_void());
    // selecting nothing gives the (-1)-sphere
    CHECK(k_odd(g, 0) == SimplicialComplex::minus_one_sphere());
}

TEST_CASE("odd subcomplex homology properties") {
    // connected even graphs: trivial reduced homology
    for (const Graph& g : {path_graph(2), path_graph(4), cycle_graph(4), complete_graph(4)})
        CHECK(even_trivial_check(g));
    // restriction property on all subsets of small graphs
    for (const Graph& g : {path_graph(3), cycle_graph(4)})
        for (Mask S = 0; S <= g.vertex_mask(); ++S) CHECK(restriction_check(g, S));
    // duality between the odd and even subcomplexes for odd graphs
    for (const Graph& g : {path_graph(3), path_graph(5), complete_graph(3), star_graph(2)})
        CHECK(alexander_check(g));
    CHECK_THROWS_AS(k_even(path_graph(4)), std::invalid_argument);
}

TEST_CASE("signed-subset poset") {
    // K_1: no proper nonempty even signed subsets at all
    HomologyGroups h1 = type_b_homology(Graph(1));
    CHECK(h1.reduced_betti(-1) == 1);

    // K_2: signed pairs {+1+2, +1-2, -1+2, -1-2} are isolated points
    Poset p2 = type_b_poset(complete_graph(2));
    CHECK(p2.size() == 6);
    HomologyGroups h2 = type_b_homology(complete_graph(2));
    CHECK(h2.top_dim == 0);
    CHECK(h2.reduced_betti(0) == 3);

    // star with four leaves: the complex is disconnected
    CHECK(type_b_homology(star_graph(4)).reduced_betti(0) >= 1);

    // Euler characteristic agrees with the poset Mobius value
    for (const Graph& g : {complete_graph(2), path_graph(3), complete_graph(3)}) {
        Poset p = type_b_poset(g);
        HomologyGroups h = type_b_homology(g);
        Int chi = 0;
        for (int q = -1; q <= h.top_dim; ++q)
            chi += (q % 2 == 0 ? 1 : -1) * h.reduced_betti(q);
        CHECK(chi == mobius_invariant(p));
    }
}

TEST_CASE("face cap default") {
    CHECK(default_face_cap() == 200000);
}
