#include <doctest.h>

#include "jpavnf/exact.hpp"
#include "jpavnf/greedy.hpp"
#include "jpavnf/reductions.hpp"
#include "../support/brute.hpp"
#include "../support/fixtures.hpp"

using namespace jpavnf;

namespace {

SetCoverInstance example_cover() {
    return build_set_cover(3, {{1, 2}, {1}, {1, 2}, {1, 3}, {3}, {2}});
}

}  // namespace

TEST_CASE("set-cover validation") {
    CHECK_THROWS_AS(build_set_cover(0, {}), ValidationError);
    CHECK_THROWS_AS(build_set_cover(2, {{1}}), ValidationError);       // 2 uncovered
    CHECK_THROWS_AS(build_set_cover(2, {{1, 3}, {2}}), ValidationError);  // 3 out of range
    CHECK_NOTHROW(build_set_cover(2, {{1, 2}, {}}));  // empty subsets are harmless
}

TEST_CASE("reduction builds the complete-graph embedding") {
    ProblemInstance reduced = reduce_set_cover(example_cover(), 10);
    CHECK(reduced.node_count() == 6);
    CHECK(reduced.graph.edges.size() == 15);  // complete graph
    REQUIRE(reduced.flow_count() == 3);
    CHECK(reduced.flows[0].id == "f1");
    CHECK(reduced.flows[0].rate == Rational(10, 3));
    CHECK(reduced.flows[0].path == std::vector<int>{0, 1, 2, 3});
    CHECK(reduced.flows[1].path == std::vector<int>{0, 2, 5});
    CHECK(reduced.flows[2].path == std::vector<int>{3, 4});
}

TEST_CASE("single subset covering a single element") {
    ProblemInstance reduced = reduce_set_cover(build_set_cover(1, {{1}}), Rational(7, 2));
    CHECK(reduced.node_count() == 1);
    CHECK(reduced.graph.edges.empty());
    REQUIRE(reduced.flow_count() == 1);
    CHECK(reduced.flows[0].rate == Rational(7, 2));
    CHECK(reduced.flows[0].path == std::vector<int>{0});
}

TEST_CASE("reduced optimum equals the minimum cover size, independent of R") {
    SetCoverInstance sc = example_cover();
    auto min_cover = brute::brute_min_cover(sc.universe_size, sc.subsets);
    CHECK(min_cover == 2);
    for (const Rational& capacity : {Rational(1), Rational(10), Rational(7, 3)}) {
        ExactResult result = solve_exact(reduce_set_cover(sc, capacity));
        REQUIRE(result.proven_optimal);
        CHECK(result.optimum == static_cast<std::int64_t>(min_cover));
    }
}

TEST_CASE("greedy set cover follows the largest-gain smallest-index rule") {
    CHECK(greedy_set_cover(example_cover()) == std::vector<int>{0, 3});
    CHECK(greedy_set_cover(build_set_cover(1, {{1}})) == std::vector<int>{0});
    CHECK(greedy_set_cover(build_set_cover(3, {{1}, {2}, {3}})) ==
          std::vector<int>{0, 1, 2});
}

TEST_CASE("flow-number greedy mirrors greedy set cover on reduced instances") {
    SetCoverInstance sc = example_cover();
    auto cover = greedy_set_cover(sc);
    GreedyResult greedy = solve_fng(reduce_set_cover(sc, 10));
    REQUIRE(greedy.trace.size() == cover.size());
    for (std::size_t i = 0; i < cover.size(); ++i) {
        CHECK(greedy.trace[i].chosen_node == cover[i]);
        CHECK(greedy.trace[i].instances_placed == 1);
    }
}

TEST_CASE("small-rate transform flattens every positive rate") {
    ProblemInstance transformed = small_rate_transform(testfix::six_node());
    for (const auto& flow : transformed.flows)
        CHECK(flow.rate == Rational(10, 3));  // min(5, 10/3)

    GreedyResult greedy = solve_fng(transformed);
    for (const auto& [node, count] : greedy.solution.placements) CHECK(count == 1);
}

TEST_CASE("small-rate transform keeps tiny rates and zero rates alone") {
    Graph graph;
    graph.labels = {"a", "b"};
    graph.edges = {{0, 1}};
    ProblemInstance instance =
        build_instance(graph, {{"f1", 2, {0}}, {"f2", 0, {0, 1}}}, 10);
    ProblemInstance transformed = small_rate_transform(instance);
    CHECK(transformed.flows[0].rate == Rational(2));  // min(2, 10/2) = 2
    CHECK(transformed.flows[1].rate == Rational(0));

    ProblemInstance all_zero = build_instance(graph, {{"f1", 0, {0}}}, 10);
    CHECK_THROWS_AS(small_rate_transform(all_zero), ValidationError);
}

TEST_CASE("after the transform no solver stacks instances") {
    for (const auto& instance : {testfix::six_node(), testfix::two_node_a()}) {
        ProblemInstance transformed = small_rate_transform(instance);
        for (const auto& solution :
             {solve_fng(transformed).solution, solve_frg(transformed).solution,
              solve_exact(transformed).solution}) {
            CHECK(check_feasible(transformed, solution).feasible);
            for (const auto& [node, count] : solution.placements) CHECK(count <= 1);
        }
    }
}
