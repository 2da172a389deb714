#include <doctest.h>

#include "graphbetti/verify.hpp"

using namespace gb;

TEST_CASE("free tree generator counts") {
    std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) CHECK(free_trees(n).size() == expected[n - 1]);
}

TEST_CASE("even forest generator") {
    std::vector<Graph> forests = even_forests_up_to(6);
    CHECK(!forests.empty());
    CHECK(forests.front().n == 0);  // includes the null graph
    for (const Graph& f : forests) {
        CHECK(is_forest(f));
        CHECK(is_even(f));
        CHECK(f.n <= 6);
    }
}

TEST_CASE("connected graph enumeration up to isomorphism") {
    CHECK(connected_graphs(1).size() == 1);
    CHECK(connected_graphs(2).size() == 1);
    CHECK(connected_graphs(3).size() == 2);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
}

TEST_CASE("random graphs are reproducible") {
    std::mt19937 r1(7), r2(7);
    CHECK(random_graph(8, r1) == random_graph(8, r2));
}

TEST_CASE("suite registry") {
    std::vector<std::string> names = suite_names();
    CHECK(names.size() == 7);
}

TEST_CASE("fast suites pass") {
    SuiteOptions opts;
    opts.max_n = 6;  // shrink the randomized suites for unit-test speed
    for (const std::string& s : {std::string("signs"), std::string("forest"),
                                 std::string("typeB")}) {
        for (const CheckResult& r : run_suite(s, opts)) {
            INFO(s, "/", r.name, ": ", r.detail);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
}
