#include "jpavnf/model.hpp"

#include <algorithm>
#include <queue>

namespace jpavnf {

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(labels.size());
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

namespace {

void validate_graph(Graph& graph) {
    const int n = graph.node_count();
    if (n < 1) {
        throw ValidationError("graph has no nodes");
    }
    {
        std::set<std::string> seen;
        for (const auto& label : graph.labels) {
            if (label.empty()) throw ValidationError("empty node label");
            if (!seen.insert(label).second) {
                throw ValidationError("duplicate node label '" + label + "'");
            }
        }
    }
    for (auto& [a, b] : graph.edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ValidationError("edge endpoint out of range");
        }
        if (a == b) {
            throw ValidationError("self-loop at node " + graph.labels[a]);
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    if (std::adjacent_find(graph.edges.begin(), graph.edges.end()) != graph.edges.end()) {
        throw ValidationError("duplicate edge");
    }

    // connectivity
    std::vector<char> seen(n, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    auto adj = graph.adjacency();
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    if (reached != n) {
        throw ValidationError("graph is not connected");
    }
}

void validate_flow(const Flow& flow, const Graph& graph) {
    if (flow.id.empty()) {
        throw ValidationError("flow with empty id");
    }
    if (flow.rate.sign() < 0) {
        throw ValidationError("flow '" + flow.id + "' has negative rate");
    }
    if (flow.path.empty()) {
        throw ValidationError("flow '" + flow.id + "' has empty path");
    }
    std::set<int> seen;
    for (int v : flow.path) {
        if (v < 0 || v >= graph.node_count()) {
            throw ValidationError("flow '" + flow.id + "' path node out of range");
        }
        if (!seen.insert(v).second) {
            throw ValidationError("flow '" + flow.id + "' repeats node " + graph.labels[v]);
        }
    }
    for (std::size_t k = 0; k + 1 < flow.path.size(); ++k) {
        if (!graph.has_edge(flow.path[k], flow.path[k + 1])) {
            throw ValidationError("flow '" + flow.id + "' uses missing edge " +
                                  graph.labels[flow.path[k]] + "-" +
                                  graph.labels[flow.path[k + 1]]);
        }
    }
}

}  // namespace

ProblemInstance build_instance(Graph graph, std::vector<Flow> flows, Rational capacity) {
    validate_graph(graph);
    if (capacity.sign() <= 0) {
        throw ValidationError("capacity must be positive");
    }
    std::set<std::string> ids;
    for (const auto& flow : flows) {
        validate_flow(flow, graph);
        if (!ids.insert(flow.id).second) {
            throw ValidationError("duplicate flow id '" + flow.id + "'");
        }
    }
    return ProblemInstance{std::move(graph), std::move(flows), std::move(capacity)};
}

std::vector<std::set<std::string>> passing_sets(const ProblemInstance& instance) {
    std::vector<std::set<std::string>> sets(instance.node_count());
    for (const auto& flow : instance.flows) {
        for (int v : flow.path) {
            sets[v].insert(flow.id);
        }
    }
    return sets;
}

FeasibilityReport check_feasible(const ProblemInstance& instance, const Solution& solution) {
    std::map<std::string, const Flow*> by_id;
    for (const auto& flow : instance.flows) {
        by_id[flow.id] = &flow;
    }
    for (const auto& [node, count] : solution.placements) {
        if (node < 0 || node >= instance.node_count()) {
            throw ValidationError("placement on unknown node index " + std::to_string(node));
        }
        if (count < 0) {
            throw ValidationError("negative instance count at node " + std::to_string(node));
        }
    }

    std::map<std::string, Rational> received;
    std::map<int, Rational> used;
    for (const auto& [key, amount] : solution.allocations) {
        const auto& [flow_id, node] = key;
        auto it = by_id.find(flow_id);
        if (it == by_id.end()) {
            throw ValidationError("allocation for unknown flow '" + flow_id + "'");
        }
        const Flow& flow = *it->second;
        if (std::find(flow.path.begin(), flow.path.end(), node) == flow.path.end()) {
            throw ValidationError("allocation for flow '" + flow_id + "' on node " +
                                  std::to_string(node) + " outside its path");
        }
        if (amount.sign() < 0) {
            throw ValidationError("negative allocation for flow '" + flow_id + "'");
        }
        received[flow_id] += amount;
        used[node] += amount;
    }

    FeasibilityReport report;
    for (const auto& flow : instance.flows) {
        Rational got;
        if (auto it = received.find(flow.id); it != received.end()) got = it->second;
        if (got < flow.rate) {
            report.flow_violations.emplace_back(flow.id, flow.rate - got);
        }
    }
    for (const auto& [node, amount] : used) {
        Rational cap;
        if (auto it = solution.placements.find(node); it != solution.placements.end()) {
            cap = instance.capacity * Rational(it->second);
        }
        if (amount > cap) {
            report.node_violations.emplace_back(node, amount - cap);
        }
    }
    report.feasible = report.flow_violations.empty() && report.node_violations.empty();
    return report;
}

std::int64_t total_instances(const Solution& solution) {
    std::int64_t total = 0;
    for (const auto& [node, count] : solution.placements) total += count;
    return total;
}

std::int64_t hosting_nodes(const Solution& solution) {
    std::int64_t hosts = 0;
    for (const auto& [node, count] : solution.placements) {
        if (count >= 1) ++hosts;
    }
    return hosts;
}

std::optional<Rational> density(const Solution& solution) {
    std::int64_t hosts = hosting_nodes(solution);
    if (hosts == 0) return std::nullopt;
    return Rational(total_instances(solution)) / Rational(hosts);
}

std::optional<Rational> density_ratio_bound(const Rational& average_density) {
    if (average_density < Rational(1)) {
        throw Error("density ratio bound needs density >= 1");
    }
    if (average_density == Rational(1)) return std::nullopt;
    return average_density / (average_density - Rational(1));
}

Rational total_demand(const ProblemInstance& instance) {
    Rational total;
    for (const auto& flow : instance.flows) total += flow.rate;
    return total;
}

std::int64_t demand_lower_bound(const ProblemInstance& instance) {
    return ceil_div(total_demand(instance), instance.capacity);
}

}  // namespace jpavnf
