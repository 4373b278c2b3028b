#include "jpavnf/tree.hpp"

#include <algorithm>
#include <queue>

namespace jpavnf {

namespace {

bool is_upward_chain(const std::vector<int>& path, const std::vector<int>& parent) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (parent[path[k]] != path[k + 1]) return false;
    return true;
}

BreakingPointReport breaking_points_core(const ProblemInstance& instance,
                                         const Solution& solution) {
    FeasibilityReport feas = check_feasible(instance, solution);
    if (!feas.feasible)
        throw ValidationError("breaking-point analysis requires a feasible solution");

    std::vector<Rational> used(instance.node_count());
    for (const auto& [key, amount] : solution.allocations) used[key.second] += amount;

    BreakingPointReport report;
    for (const auto& [node, count] : solution.placements) {
        if (count < 1) continue;
        Rational capacity = instance.capacity * Rational(count);
        if (used[node] < capacity) {
            report.breaking_points.insert(node);
            if (capacity - used[node] >= instance.capacity) report.conservative = false;
        }
    }
    return report;
}

}  // namespace

TreeInstance validate_tree_instance(const ProblemInstance& instance, int root) {
    const int n = instance.node_count();
    if (root < 0 || root >= n)
        throw ValidationError("root index " + std::to_string(root) + " out of range");
    if (static_cast<int>(instance.graph.edges.size()) != n - 1)
        throw ValidationError("graph is not a tree: " +
                              std::to_string(instance.graph.edges.size()) + " edges for " +
                              std::to_string(n) + " nodes");

    TreeInstance tree;
    tree.instance = instance;
    tree.root = root;
    tree.level.assign(n, 0);
    tree.parent.assign(n, -1);
    const auto adjacency = instance.graph.adjacency();
    std::queue<int> frontier;
    frontier.push(root);
    tree.level[root] = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adjacency[u])
            if (tree.level[v] == 0 && v != root) {
                tree.level[v] = tree.level[u] + 1;
                tree.parent[v] = u;
                frontier.push(v);
            }
    }

    tree.order_in_level.assign(n, 0);
    std::map<int, int> seen_in_level;
    for (int i = 0; i < n; ++i) tree.order_in_level[i] = ++seen_in_level[tree.level[i]];

    for (Flow& flow : tree.instance.flows) {
        if (is_upward_chain(flow.path, tree.parent)) continue;
        std::vector<int> reversed(flow.path.rbegin(), flow.path.rend());
        if (is_upward_chain(reversed, tree.parent)) {
            flow.path = std::move(reversed);
            continue;
        }
        throw ValidationError("flow '" + flow.id +
                              "' is not an upstream flow: its path changes direction");
    }
    return tree;
}

GftResult solve_gft(const TreeInstance& tree, WaitingOrder order) {
    const ProblemInstance& instance = tree.instance;
    const int n = instance.node_count();
    const int m = instance.flow_count();

    std::vector<int> visit(n);
    for (int i = 0; i < n; ++i) visit[i] = i;
    std::sort(visit.begin(), visit.end(), [&](int a, int b) {
        if (tree.level[a] != tree.level[b]) return tree.level[a] > tree.level[b];
        return tree.order_in_level[a] < tree.order_in_level[b];
    });

    std::vector<Rational> remaining(m);
    std::vector<int> exit_node(m, -1);
    std::vector<std::vector<int>> passing(n);
    for (int j = 0; j < m; ++j) {
        const Flow& flow = instance.flows[j];
        if (flow.rate.is_zero()) continue;
        remaining[j] = flow.rate;
        exit_node[j] = flow.path.back();
        for (int v : flow.path) passing[v].push_back(j);
    }

    GftResult result;
    for (int u : visit) {
        Rational leaving_demand;
        std::vector<int> leavers;
        for (int j : passing[u])
            if (exit_node[j] == u && !remaining[j].is_zero()) {
                leavers.push_back(j);
                leaving_demand += remaining[j];
            }
        if (leaving_demand.is_zero()) continue;

        GftStepEvent event;
        event.node = u;
        event.leaving_demand = leaving_demand;
        event.instances_placed = ceil_div(leaving_demand, instance.capacity);
        Rational leftover =
            instance.capacity * Rational(event.instances_placed) - leaving_demand;

        for (int j : leavers) {
            event.leaving.emplace_back(instance.flows[j].id, remaining[j]);
            result.solution.allocations[{instance.flows[j].id, u}] += remaining[j];
            remaining[j] = Rational();
        }
        std::sort(event.leaving.begin(), event.leaving.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<int> waiting;
        for (int j : passing[u])
            if (!remaining[j].is_zero()) waiting.push_back(j);
        std::sort(waiting.begin(), waiting.end(), [&](int a, int b) {
            int la = tree.level[exit_node[a]];
            int lb = tree.level[exit_node[b]];
            if (la != lb)
                return order == WaitingOrder::DeepestExitFirst ? la > lb : la < lb;
            return instance.flows[a].id < instance.flows[b].id;
        });
        for (int j : waiting) {
            if (leftover.is_zero()) break;
            Rational poured = std::min(remaining[j], leftover);
            event.waiting.emplace_back(instance.flows[j].id, poured);
            result.solution.allocations[{instance.flows[j].id, u}] += poured;
            remaining[j] -= poured;
            leftover -= poured;
        }

        result.solution.placements[u] = event.instances_placed;
        result.steps.push_back(std::move(event));
    }
    return result;
}

BreakingPointReport find_breaking_points(const ProblemInstance& instance,
                                         const Solution& solution) {
    return breaking_points_core(instance, solution);
}

BreakingPointReport find_breaking_points(const TreeInstance& tree, const Solution& solution) {
    BreakingPointReport report = breaking_points_core(tree.instance, solution);

    // in_subtree(x, u) via ancestor chains; fine at these sizes.
    const int n = tree.instance.node_count();
    auto in_subtree = [&](int x, int u) {
        for (int w = x; w != -1; w = tree.parent[w])
            if (w == u) return true;
        return false;
    };
    for (int u = 0; u < n; ++u) {
        std::set<std::string> external;
        for (const Flow& flow : tree.instance.flows) {
            bool start_in = in_subtree(flow.path.front(), u);
            bool end_in = in_subtree(flow.path.back(), u);
            if (start_in != end_in) external.insert(flow.id);
        }
        if (!external.empty()) report.external_flows[u] = std::move(external);
    }
    return report;
}

}  // namespace jpavnf
