#pragma once

// In-code copies of the shipped fixture instances so unit tests don't
// depend on the filesystem layout.

#include "jpavnf/model.hpp"

namespace testfix {

inline jpavnf::ProblemInstance six_node() {
    jpavnf::Graph graph;
    graph.labels = {"v1", "v2", "v3", "v4", "v5", "v6"};
    graph.edges = {{0, 2}, {0, 5}, {1, 2}, {2, 3}, {3, 4}};
    std::vector<jpavnf::Flow> flows = {
        {"f1", 16, {1, 2, 3}},
        {"f2", 6, {5, 0, 2}},
        {"f3", 5, {4, 3}},
    };
    return jpavnf::build_instance(std::move(graph), std::move(flows), 10);
}

inline jpavnf::Solution six_node_solution_a() {
    jpavnf::Solution s;
    s.placements = {{0, 1}, {1, 2}, {3, 1}};
    s.allocations[{"f1", 1}] = 16;
    s.allocations[{"f2", 0}] = 6;
    s.allocations[{"f3", 3}] = 5;
    return s;
}

inline jpavnf::Solution six_node_solution_b() {
    jpavnf::Solution s;
    s.placements = {{2, 1}, {3, 2}};
    s.allocations[{"f1", 2}] = 4;
    s.allocations[{"f1", 3}] = 12;
    s.allocations[{"f2", 2}] = 6;
    s.allocations[{"f3", 3}] = 5;
    return s;
}

inline jpavnf::ProblemInstance two_node_a() {
    jpavnf::Graph graph;
    graph.labels = {"v1", "v2"};
    graph.edges = {{0, 1}};
    std::vector<jpavnf::Flow> flows = {
        {"f1", 10, {0}},
        {"f2", 10, {0}},
        {"f3", 4, {0, 1}},
        {"f4", 26, {1}},
    };
    return jpavnf::build_instance(std::move(graph), std::move(flows), 10);
}

inline jpavnf::ProblemInstance two_node_b() {
    jpavnf::Graph graph;
    graph.labels = {"v1", "v2"};
    graph.edges = {{0, 1}};
    std::vector<jpavnf::Flow> flows = {
        {"f1", 3, {0}},
        {"f2", 1, {0}},
        {"f3", 6, {0, 1}},
        {"f4", 10, {1}},
    };
    return jpavnf::build_instance(std::move(graph), std::move(flows), 10);
}

inline jpavnf::ProblemInstance example_tree() {  // root is node 0
    jpavnf::Graph graph;
    graph.labels = {"v11", "v21", "v22", "v31", "v41", "v51", "v61", "v62"};
    graph.edges = {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}};
    std::vector<jpavnf::Flow> flows = {
        {"f1", 3, {4, 3}},
        {"f2", 3, {6, 5}},
        {"f3", 2, {5, 4, 3, 1, 0}},
        {"f4", 3, {7}},
        {"f5", 12, {7, 5, 4}},
        {"f6", 8, {2}},
    };
    return jpavnf::build_instance(std::move(graph), std::move(flows), 10);
}

}  // namespace testfix
