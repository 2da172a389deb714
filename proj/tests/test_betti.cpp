#include <doctest.h>

#include "graphbetti/betti.hpp"
#include "graphbetti/graph.hpp"

using namespace gb;

namespace {
BettiVector bv(std::vector<long long> v) {
    BettiVector out;
    for (long long x : v) out.beta.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("Betti vectors of small graphs") {
    CHECK(betti_assoc(path_graph(3)) == bv({1, 2}));
    CHECK(betti_assoc(path_graph(4)) == bv({1, 3, 2}));
    CHECK(betti_cube(path_graph(3)) == bv({1, 3, 2}));
    CHECK(betti_cube(path_graph(4)) == bv({1, 4, 5}));
    CHECK(betti_cube(cycle_graph(5)) == bv({1, 5, 10, 6}));
    CHECK(betti_cube(cycle_graph(4)) == bv({1, 4, 6}));
    CHECK(betti_assoc(Graph(0)) == bv({1}));
    CHECK(betti_cube(Graph(0)) == bv({1}));
    CHECK(betti_assoc(Graph(1)) == bv({1}));
    CHECK(betti_cube(Graph(1)) == bv({1, 1}));
}

TEST_CASE("Euler characteristics") {
    CHECK(euler_char_assoc(path_graph(4)) == 0);
    CHECK(euler_char_cube(cycle_graph(4)) == 3);
    CHECK(euler_char(bv({1, 5, 10, 6})) == 0);
}

TEST_CASE("integer sequences") {
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(narayana(4, 2) == 6);
    CHECK(narayana(8, 4) == 490);
    CHECK(central_binomial(3) == 20);
    std::vector<long long> zigzag{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
    for (int k = 0; k < 10; ++k) CHECK(euler_zigzag(k) == zigzag[k]);
    CHECK(euler_zigzag(-2) == 0);
    CHECK_THROWS_AS(narayana(3, 0), std::out_of_range);
}

TEST_CASE("closed forms agree with the recursion engine") {
    for (int n = 1; n <= 8; ++n) {
        BettiVector p = betti_cube(path_graph(n));
        BettiVector c = betti_cube(cycle_graph(n));
        for (int i = 0; i <= n; ++i) {
            CHECK(p.at(i) == closed_form_cube(Family::path, n, i));
            CHECK(c.at(i) == closed_form_cube(Family::cycle, n, i));
        }
        BettiVector pa = betti_assoc(path_graph(n));
        for (int i = 0; 2 * i <= n; ++i) CHECK(pa.at(i) == closed_form_assoc(Family::path, n, i));
    }
    for (int n = 1; n <= 7; ++n) {
        BettiVector k = betti_cube(complete_graph(n));
        BettiVector s = betti_cube(star_graph(n));
        for (int i = 0; i <= n + 1; ++i) {
            CHECK(k.at(i) == closed_form_cube(Family::complete, n, i));
            CHECK(s.at(i) == closed_form_cube(Family::star, n, i));
        }
    }
}

TEST_CASE("signed closed forms for odd vertex counts") {
    CHECK(b_closed_form(Family::path, 5) == -2);
    CHECK(b_closed_form(Family::cycle, 5) == -6);
    CHECK(b_closed_form(Family::cycle, 7) == 20);
    CHECK(b_closed_form(Family::cycle, 9) == -70);
    CHECK(b_closed_form(Family::complete, 5) == -16);
    CHECK(b_closed_form(Family::star, 5) == -5);
    CHECK_THROWS_AS(b_closed_form(Family::path, 4), std::invalid_argument);
}

TEST_CASE("forest/line-graph identity for a small tree") {
    ForestLineReport r = forest_line_identity(path_graph(4));
    CHECK(r.betti_equal);
    CHECK(r.even_forest);
    CHECK(r.a_value == 2);
    CHECK(r.signed_identity);
    CHECK(r.abs_identity);
    CHECK(betti_assoc(path_graph(4)) == betti_cube(path_graph(3)));
    // the identity is specific to forests
    CHECK(betti_assoc(cycle_graph(5)) != betti_cube(cycle_graph(5)));
    CHECK_THROWS_AS(forest_line_identity(cycle_graph(3)), std::invalid_argument);
}

TEST_CASE("circular partial words, exhaustive census") {
    for (int n = 3; n <= 7; ++n)
        for (int i = 0; 2 * i <= n; ++i) {
            DyckCensus c = partial_dyck_census(n, i);
            CHECK(c.count_is_binomial);
            CHECK(c.classes_match_b);
            CHECK(c.class_total == c.count);
            CHECK(c.count == betti_cube(cycle_graph(n)).at(i));
        }
    CHECK(partial_dyck_census(6, 3).count == central_binomial(3));
}
