#include <doctest.h>

#include <cstdlib>

#include "jpavnf/exact.hpp"
#include "jpavnf/greedy.hpp"
#include "jpavnf/generators.hpp"
#include "../support/brute.hpp"
#include "../support/fixtures.hpp"

using namespace jpavnf;

TEST_CASE("allocation feasibility on the six-node fixture") {
    ProblemInstance instance = testfix::six_node();
    CHECK(allocation_feasible(instance, {0, 0, 1, 2, 0, 0}));
    CHECK(!allocation_feasible(instance, {0, 0, 1, 1, 0, 0}));  // 20 < 27 demanded
    CHECK(!allocation_feasible(instance, {0, 0, 0, 0, 0, 0}));
    CHECK(allocation_feasible(instance, {1, 2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(allocation_feasible(instance, {1, 2}), ValidationError);
    CHECK_THROWS_AS(allocation_feasible(instance, {0, 0, -1, 0, 0, 0}), ValidationError);
}

TEST_CASE("zero flows are always satisfiable") {
    Graph graph;
    graph.labels = {"a", "b"};
    graph.edges = {{0, 1}};
    ProblemInstance instance = build_instance(graph, {}, 10);
    CHECK(allocation_feasible(instance, {0, 0}));
    CHECK(solve_exact(instance).optimum == 0);
}

TEST_CASE("feasibility is monotone in the placement vector") {
    ProblemInstance instance = testfix::six_node();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        PlacementVector x(6);
        for (auto& v : x) v = static_cast<std::int64_t>(detail::bounded(rng, 4));
        if (!allocation_feasible(instance, x)) continue;
        PlacementVector y = x;
        y[detail::bounded(rng, 6)] += 1 + static_cast<std::int64_t>(detail::bounded(rng, 5));
        CHECK(allocation_feasible(instance, y));
    }
}

TEST_CASE("extract_allocation returns an exact witness") {
    ProblemInstance instance = testfix::six_node();
    Solution solution = extract_allocation(instance, {0, 0, 1, 2, 0, 0});
    CHECK(check_feasible(instance, solution).feasible);
    CHECK(total_instances(solution) == 3);

    Rational f1_total;
    for (const auto& [key, amount] : solution.allocations)
        if (key.first == "f1") f1_total += amount;
    CHECK(f1_total == Rational(16));  // exactly the rate, never more

    CHECK_THROWS_AS(extract_allocation(instance, {0, 0, 1, 1, 0, 0}), Error);
}

TEST_CASE("extract_allocation on the two-node fixture") {
    ProblemInstance instance = testfix::two_node_a();
    Solution solution = extract_allocation(instance, {2, 3});
    CHECK(check_feasible(instance, solution).feasible);
    for (const auto& flow : instance.flows) {
        Rational got;
        for (const auto& [key, amount] : solution.allocations)
            if (key.first == flow.id) got += amount;
        CHECK(got == flow.rate);
    }
}

TEST_CASE("single-node single-flow witness") {
    Graph graph;
    graph.labels = {"a"};
    ProblemInstance instance = build_instance(graph, {{"f1", 4, {0}}}, 10);
    Solution solution = extract_allocation(instance, {1});
    CHECK(solution.allocations.at({"f1", 0}) == Rational(4));
}

TEST_CASE("exact solver beats both greedies on the six-node fixture") {
    ExactResult result = solve_exact(testfix::six_node());
    CHECK(result.optimum == 3);
    CHECK(result.proven_optimal);
    CHECK(total_instances(result.solution) == 3);
    CHECK(check_feasible(testfix::six_node(), result.solution).feasible);
}

TEST_CASE("disjoint single-node flows cannot share instances") {
    Graph graph;
    graph.labels = {"a", "b"};
    graph.edges = {{0, 1}};
    ProblemInstance instance =
        build_instance(graph, {{"f1", 1, {0}}, {"f2", 1, {1}}}, 10);
    CHECK(solve_exact(instance).optimum == 2);
}

TEST_CASE("fractional capacities stay exact") {
    Graph graph;
    graph.labels = {"a", "b"};
    graph.edges = {{0, 1}};
    // three flows of 7/3 against capacity 7/2: demand 7, two instances barely fit
    std::vector<Flow> flows = {{"f1", Rational(7, 3), {0, 1}},
                               {"f2", Rational(7, 3), {0}},
                               {"f3", Rational(7, 3), {1}}};
    ProblemInstance instance = build_instance(graph, flows, Rational(7, 2));
    ExactResult result = solve_exact(instance);
    CHECK(result.optimum == 2);
    CHECK(check_feasible(instance, result.solution).feasible);
}

TEST_CASE("budget exhaustion degrades to the greedy warm start") {
    ProblemInstance instance = testfix::six_node();
    ExactResult result = solve_exact(instance, 0);
    CHECK(!result.proven_optimal);
    CHECK(result.optimum == 4);  // min(FNG, FRG)
    CHECK(check_feasible(instance, result.solution).feasible);
    CHECK(result.nodes_explored == 0);
}

TEST_CASE("optimum is sandwiched between the bound and the greedies") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph graph = gen_random_topology(5, 6, {rng()});
        auto flows = gen_flows(graph, 4, PathClass::Long,
                               {trial % 2 ? RateTag::Large : RateTag::Small, 10}, {rng()});
        ProblemInstance instance = build_instance(graph, flows, 10);
        ExactResult result = solve_exact(instance);
        REQUIRE(result.proven_optimal);
        CHECK(result.optimum >= demand_lower_bound(instance));
        CHECK(result.optimum <= total_instances(solve_fng(instance).solution));
        CHECK(result.optimum <= total_instances(solve_frg(instance).solution));
        CHECK(check_feasible(instance, result.solution).feasible);
    }
}

TEST_CASE("branch and bound agrees with exhaustive enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(detail::bounded(rng, 4));
        int max_edges = n * (n - 1) / 2;
        int edges = n - 1 + static_cast<int>(detail::bounded(rng, max_edges - n + 2));
        Graph graph = gen_random_topology(n, edges, {rng()});
        int m = 1 + static_cast<int>(detail::bounded(rng, 4));
        auto flows = gen_flows(graph, m, PathClass::Long, {RateTag::Small, 10}, {rng()});
        for (auto& flow : flows)  // moderate integral rates keep the oracle cheap
            flow.rate = Rational(static_cast<std::int64_t>(detail::bounded(rng, 21)), 2);
        ProblemInstance instance = build_instance(graph, flows, 10);
        ExactResult result = solve_exact(instance);
        REQUIRE(result.proven_optimal);
        CHECK(result.optimum == brute::brute_optimum(instance));
    }
}

TEST_CASE("size cap comes from the environment") {
    unsetenv("JPAVNF_EXACT_CAP");
    ExactCap cap = exact_solver_cap();
    CHECK(cap.max_nodes == 15);
    CHECK(cap.max_flows == 12);

    setenv("JPAVNF_EXACT_CAP", "20", 1);
    cap = exact_solver_cap();
    CHECK(cap.max_nodes == 20);
    CHECK(cap.max_flows == 12);

    setenv("JPAVNF_EXACT_CAP", "9,5", 1);
    cap = exact_solver_cap();
    CHECK(cap.max_nodes == 9);
    CHECK(cap.max_flows == 5);

    setenv("JPAVNF_EXACT_CAP", "bogus", 1);
    CHECK_THROWS_AS(exact_solver_cap(), ValidationError);
    setenv("JPAVNF_EXACT_CAP", "4,", 1);
    CHECK_THROWS_AS(exact_solver_cap(), ValidationError);
    setenv("JPAVNF_EXACT_CAP", "0", 1);
    CHECK_THROWS_AS(exact_solver_cap(), ValidationError);
    unsetenv("JPAVNF_EXACT_CAP");
}
