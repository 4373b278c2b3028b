#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jpavnf/rational.hpp"

namespace jpavnf {

/// Undirected, connected network graph. Nodes are dense 0-based indices;
/// labels exist only for the I/O boundary. Edges are stored normalized
/// (first < second) and sorted.
struct Graph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;

    int node_count() const { return static_cast<int>(labels.size()); }
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// A data flow with a fixed, loop-free path. Rate 0 is legal and means the
/// flow imposes no processing demand.
struct Flow {
    std::string id;
    Rational rate;
    std::vector<int> path;

    friend bool operator==(const Flow&, const Flow&) = default;
};

struct ProblemInstance {
    Graph graph;
    std::vector<Flow> flows;
    Rational capacity;  // per-instance processing capacity, > 0

    int node_count() const { return graph.node_count(); }
    int flow_count() const { return static_cast<int>(flows.size()); }

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Instance counts per node plus the per-(flow, node) resource split.
/// Placements hold only nodes with at least one instance.
struct Solution {
    std::map<int, std::int64_t> placements;
    std::map<std::pair<std::string, int>, Rational> allocations;

    friend bool operator==(const Solution&, const Solution&) = default;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<std::pair<std::string, Rational>> flow_violations;  // flow id -> shortfall
    std::vector<std::pair<int, Rational>> node_violations;          // node -> excess
};

/// Validates the (graph, flows, capacity) triple and returns it as an
/// instance. Each violated invariant gets its own diagnostic: disconnected
/// graph, self-loop, duplicate edge, label problems, repeated path node,
/// missing path edge, duplicate flow id, non-positive capacity.
ProblemInstance build_instance(Graph graph, std::vector<Flow> flows, Rational capacity);

/// Per node, the ids of flows whose path contains it.
std::vector<std::set<std::string>> passing_sets(const ProblemInstance& instance);

/// Checks the two constraint families exactly: every flow gets at least its
/// rate over its path, and no node's allocations exceed its placed capacity.
/// An allocation keyed to a node outside the flow's path (or to an unknown
/// flow or node) is a structural error, not a violation entry.
FeasibilityReport check_feasible(const ProblemInstance& instance, const Solution& solution);

std::int64_t total_instances(const Solution& solution);

/// Number of nodes hosting at least one instance.
std::int64_t hosting_nodes(const Solution& solution);

/// Average instances per hosting node; empty for the empty solution.
std::optional<Rational> density(const Solution& solution);

/// A/(A-1) for A > 1; empty for A == 1; domain error for A < 1.
std::optional<Rational> density_ratio_bound(const Rational& average_density);

/// ceil(total demand / capacity): a lower bound on any feasible solution.
std::int64_t demand_lower_bound(const ProblemInstance& instance);

/// Sum of all flow rates.
Rational total_demand(const ProblemInstance& instance);

}  // namespace jpavnf
