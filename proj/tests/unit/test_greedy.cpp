#include <doctest.h>

#include "jpavnf/greedy.hpp"
#include "../support/fixtures.hpp"

using namespace jpavnf;

TEST_CASE("flow-number greedy on the six-node fixture") {
    GreedyResult result = solve_fng(testfix::six_node());

    REQUIRE(result.trace.size() == 2);
    // v3 and v4 both carry two flows; the tie goes to the smaller index
    CHECK(result.trace[0].chosen_node == 2);
    CHECK(result.trace[0].processed_flows == std::vector<std::string>{"f1", "f2"});
    CHECK(result.trace[0].instances_placed == 3);  // ceil(22/10)
    CHECK(result.trace[1].chosen_node == 3);
    CHECK(result.trace[1].processed_flows == std::vector<std::string>{"f3"});
    CHECK(result.trace[1].instances_placed == 1);

    CHECK(total_instances(result.solution) == 4);
    CHECK(result.solution.placements == std::map<int, std::int64_t>{{2, 3}, {3, 1}});
    CHECK(check_feasible(testfix::six_node(), result.solution).feasible);
}

TEST_CASE("flow-rate greedy on the six-node fixture") {
    GreedyResult result = solve_frg(testfix::six_node());

    REQUIRE(result.trace.size() == 2);
    CHECK(result.trace[0].chosen_node == 2);  // 22 units beats everything
    CHECK(result.trace[1].chosen_node == 3);  // 5-vs-5 tie against v5, smaller index
    CHECK(total_instances(result.solution) == 4);
    CHECK(result.solution.placements == std::map<int, std::int64_t>{{2, 3}, {3, 1}});
    CHECK(check_feasible(testfix::six_node(), result.solution).feasible);
}

TEST_CASE("the two-node fixtures pull the greedies apart both ways") {
    ProblemInstance a = testfix::two_node_a();
    CHECK(solve_fng(a).solution.placements == std::map<int, std::int64_t>{{0, 3}, {1, 3}});
    CHECK(solve_frg(a).solution.placements == std::map<int, std::int64_t>{{0, 2}, {1, 3}});

    ProblemInstance b = testfix::two_node_b();
    CHECK(solve_fng(b).solution.placements == std::map<int, std::int64_t>{{0, 1}, {1, 1}});
    CHECK(solve_frg(b).solution.placements == std::map<int, std::int64_t>{{0, 1}, {1, 2}});
}

TEST_CASE("every flow is processed at exactly one node, at full rate") {
    for (const auto& instance : {testfix::six_node(), testfix::two_node_a(),
                                 testfix::two_node_b(), testfix::example_tree()}) {
        for (auto solve : {solve_fng, solve_frg}) {
            GreedyResult result = solve(instance);
            std::map<std::string, int> seen;
            for (const auto& [key, amount] : result.solution.allocations) {
                ++seen[key.first];
                const Flow* flow = nullptr;
                for (const auto& f : instance.flows)
                    if (f.id == key.first) flow = &f;
                REQUIRE(flow != nullptr);
                CHECK(amount == flow->rate);
            }
            for (const auto& flow : instance.flows)
                CHECK(seen[flow.id] == (flow.rate.is_zero() ? 0 : 1));
        }
    }
}

TEST_CASE("zero-rate flows never attract an instance") {
    Graph graph;
    graph.labels = {"a", "b", "c"};
    graph.edges = {{0, 1}, {1, 2}};
    // f1 passes everything at rate 0; only f2 on node c has real demand
    ProblemInstance instance =
        build_instance(graph, {{"f1", 0, {0, 1, 2}}, {"f2", 3, {2}}}, 10);

    for (auto solve : {solve_fng, solve_frg}) {
        GreedyResult result = solve(instance);
        CHECK(result.solution.placements == std::map<int, std::int64_t>{{2, 1}});
        CHECK(result.trace.size() == 1);
    }
}

TEST_CASE("all-zero instance solves to the empty solution") {
    Graph graph;
    graph.labels = {"a"};
    ProblemInstance instance = build_instance(graph, {{"f1", 0, {0}}}, 10);
    CHECK(solve_fng(instance).solution.placements.empty());
    CHECK(solve_frg(instance).solution.placements.empty());
}

TEST_CASE("batch instance counts follow the ceiling") {
    // two flows of 10/3 over one shared node: together they need one instance
    Graph graph;
    graph.labels = {"a", "b"};
    graph.edges = {{0, 1}};
    ProblemInstance instance = build_instance(
        graph, {{"f1", Rational(10, 3), {0}}, {"f2", Rational(10, 3), {0, 1}}}, 10);
    GreedyResult result = solve_fng(instance);
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0].instances_placed == 1);
    CHECK(result.trace[0].allocations.size() == 2);
}
