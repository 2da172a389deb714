#include <doctest.h>

#include "graphbetti/graph.hpp"
#include "graphbetti/homology.hpp"
#include "graphbetti/invariants.hpp"

using namespace gb;

namespace {
IntegerMatrix mat(int rows, int cols, std::vector<long long> entries) {
    IntegerMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.a[i][j] = entries[i * cols + j];
    return m;
}

const SimplicialComplex kProjectivePlane{
    6,
    {{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
     {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}}};
}  // namespace

TEST_CASE("Smith normal form") {
    SnfResult r = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
    CHECK(r.rank == 2);
    CHECK(r.factors == std::vector<Int>{1, 6});

    r = smith_normal_form(mat(2, 3, {1, 2, 3, 2, 4, 6}));
    CHECK(r.rank == 1);
    CHECK(r.factors == std::vector<Int>{1});

    r = smith_normal_form(mat(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16}));
    CHECK(r.rank == 3);
    CHECK(r.factors == std::vector<Int>{2, 6, 12});

    // zero and empty matrices
    CHECK(smith_normal_form(mat(2, 2, {0, 0, 0, 0})).rank == 0);
    CHECK(smith_normal_form(IntegerMatrix{}).rank == 0);
}

TEST_CASE("Smith normal form survives int64 overflow") {
    long long big = (1LL << 62);
    SnfResult r = smith_normal_form(mat(2, 2, {big, 1, 1, 1}));
    CHECK(r.rank == 2);
    CHECK(r.factors == std::vector<Int>{1, Int(big) - 1});
}

TEST_CASE("spheres and disks") {
    // boundary of a triangle = S^1
    SimplicialComplex s1{3, {{0, 1}, {1, 2}, {0, 2}}};
    HomologyGroups h = reduced_homology(s1);
    CHECK(h.reduced_betti(0) == 0);
    CHECK(h.reduced_betti(1) == 1);
    CHECK(h.torsion_free());

    // boundary of a tetrahedron = S^2
    SimplicialComplex s2{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    h = reduced_homology(s2);
    CHECK(h.reduced_betti(1) == 0);
    CHECK(h.reduced_betti(2) == 1);

    // solid triangle is contractible
    SimplicialComplex disk{3, {{0, 1, 2}}};
    CHECK(reduced_homology(disk).trivial());

    // two points
    SimplicialComplex pts{2, {{0}, {1}}};
    CHECK(reduced_homology(pts).reduced_betti(0) == 1);

    // the empty complex is the (-1)-sphere
    h = reduced_homology(SimplicialComplex::minus_one_sphere());
    CHECK(h.reduced_betti(-1) == 1);
    CHECK(reduced_homology(SimplicialComplex::void_complex()).trivial());
}

TEST_CASE("torsion of the projective plane") {
    HomologyGroups h = reduced_homology(kProjectivePlane);
    CHECK(h.reduced_betti(0) == 0);
    CHECK(h.reduced_betti(1) == 0);
    CHECK(h.reduced_betti(2) == 0);
    CHECK(h.torsion_in(1) == std::vector<Int>{2});
    CHECK(!h.torsion_free());
    CHECK(!h.trivial());

    std::vector<Int> gf2 = reduced_betti_gf2(kProjectivePlane);
    // index q+1 holds beta~_q over Z_2
    REQUIRE(gf2.size() == 4);
    CHECK(gf2[1] == 0);
    CHECK(gf2[2] == 1);
    CHECK(gf2[3] == 1);
}

TEST_CASE("face enumeration and Euler characteristics") {
    SimplicialComplex s1{3, {{0, 1}, {1, 2}, {0, 2}}};
    auto faces = enumerate_faces(s1);
    REQUIRE(faces.size() == 2);  // dims 0 and 1
    CHECK(faces[0].size() == 3);
    CHECK(faces[1].size() == 3);
    CHECK(euler_characteristic(s1) == -1);  // reduced: beta~_0 - beta~_1
    CHECK(euler_characteristic(kProjectivePlane) == 0);
    CHECK(euler_characteristic(SimplicialComplex::minus_one_sphere()) == -1);
    CHECK(euler_characteristic(SimplicialComplex{1, {{0}}}) == 0);
}

TEST_CASE("face cap enforcement") {
    CHECK_THROWS_AS(reduced_homology(kProjectivePlane, 5), CapacityError);
    CHECK_NOTHROW(reduced_homology(kProjectivePlane, 100));
}

TEST_CASE("order complex of a subset poset") {
    // proper odd subsets of P_3: three singletons and {1,3}; chains give a
    // path-shaped nerve whose Euler characteristic matches the Mobius value
    Poset p = odd_poset(path_graph(3));
    SimplicialComplex oc = order_complex(p);
    CHECK(oc.vertex_count == 4);
    CHECK(euler_characteristic(oc) == mobius_invariant(p));
    HomologyGroups h = reduced_homology(oc);
    CHECK(h.torsion_free());
}
