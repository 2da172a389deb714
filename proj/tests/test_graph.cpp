#include <doctest.h>

#include "graphbetti/graph.hpp"

using namespace gb;

TEST_CASE("family constructions") {
    Graph p4 = path_graph(4);
    CHECK(p4.n == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(2, 3));
    CHECK(!p4.has_edge(0, 3));

    Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(0, 4));

    CHECK(cycle_graph(1) == path_graph(1));
    CHECK(cycle_graph(2) == path_graph(2));

    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);

    Graph s3 = star_graph(3);  // center is the last vertex
    CHECK(s3.n == 4);
    CHECK(s3.degree(3) == 3);
    CHECK(s3.degree(0) == 1);

    Graph oct = octopus_graph({2, 1});
    CHECK(oct.n == 4);
    CHECK(oct.degree(0) == 2);  // hub
    CHECK(line_graph(oct) == spider_graph({2, 1}));
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("n=4;1-2,2-3,3-4");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list("n=0;").n == 0);
    CHECK_THROWS_AS(parse_edge_list("n=2;1-3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4;1-2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("n=2;1-1"), ParseError);
    try {
        parse_edge_list("n=2;xx");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("graph6 round trip") {
    CHECK(parse_graph6("Ch") == path_graph(4));
    for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(4), star_graph(4)})
        CHECK(parse_graph6(encode_graph6(g)) == g);
    CHECK_THROWS_AS(parse_graph6("C!"), ParseError);
}

TEST_CASE("components and connectivity") {
    Graph g = parse_edge_list("n=5;1-2,4-5");
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == 0b00011);
    CHECK(comps[1] == 0b00100);
    CHECK(comps[2] == 0b11000);
    CHECK(kappa(g) == 3);
    CHECK(kappa_within(g, 0b11011) == 2);
    CHECK(!is_connected(g));
    CHECK(connected_in(g, 0b11000));
    CHECK(!connected_in(g, 0b01100));
    CHECK(is_connected(path_graph(1)));
}

TEST_CASE("connected subsets of a path") {
    // intervals only: 4 + 3 + 2 + 1
    CHECK(connected_subsets(path_graph(4)).size() == 10);
    CHECK(connected_subsets(complete_graph(3)).size() == 7);
}

TEST_CASE("parity conventions") {
    CHECK(is_even(Graph(0)));
    CHECK(is_odd(Graph(0)));
    CHECK(is_even(path_graph(2)));
    CHECK(!is_odd(path_graph(2)));
    CHECK(is_odd(parse_edge_list("n=4;1-2,2-3")));  // P_3 + isolated vertex
    CHECK(!is_even(parse_edge_list("n=3;1-2")));
}

TEST_CASE("line graph and spanning subgraphs") {
    CHECK(line_graph(path_graph(4)) == path_graph(3));
    CHECK(line_graph(star_graph(3)) == complete_graph(3));
    // P_3: both edges needed to avoid isolating an endpoint
    CHECK(spanning_subgraphs_no_isolated(path_graph(3)).size() == 1);
    // P_4: edge sets {12,34}, {12,23,34}
    CHECK(spanning_subgraphs_no_isolated(path_graph(4)).size() == 2);
    CHECK(is_forest(path_graph(6)));
    CHECK(!is_forest(cycle_graph(3)));
}

TEST_CASE("vertex capacity") {
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), CapacityError);
}
