#include "jpavnf/greedy.hpp"

#include <algorithm>

namespace jpavnf {

namespace {

enum class Rule { FlowCount, FlowRate };

// Zero-rate flows are treated as processed from the start so a node is never
// chosen just to cover zero demand.
GreedyResult run_greedy(const ProblemInstance& instance, Rule rule) {
    const int n = instance.node_count();
    const int m = instance.flow_count();

    std::vector<std::vector<int>> passing(n);  // unprocessed positive-rate flows only
    std::vector<char> processed(m, 0);
    std::vector<std::int64_t> count(n, 0);
    std::vector<Rational> rate_sum(n);
    std::int64_t unprocessed = 0;
    for (int j = 0; j < m; ++j) {
        const Flow& flow = instance.flows[j];
        if (flow.rate.is_zero()) {
            processed[j] = 1;
            continue;
        }
        ++unprocessed;
        for (int v : flow.path) {
            passing[v].push_back(j);
            ++count[v];
            rate_sum[v] += flow.rate;
        }
    }

    GreedyResult result;
    std::int64_t iteration = 0;
    while (unprocessed > 0) {
        int best = 0;
        for (int i = 1; i < n; ++i) {
            bool better = rule == Rule::FlowCount ? count[i] > count[best]
                                                  : rate_sum[i] > rate_sum[best];
            if (better) best = i;
        }

        GreedyTraceEvent event;
        event.iteration = ++iteration;
        event.chosen_node = best;
        Rational batch_rate;
        std::vector<int> batch;
        for (int j : passing[best]) {
            if (processed[j]) continue;
            batch.push_back(j);
            batch_rate += instance.flows[j].rate;
        }
        event.instances_placed = ceil_div(batch_rate, instance.capacity);
        for (int j : batch) {
            const Flow& flow = instance.flows[j];
            event.processed_flows.push_back(flow.id);
            event.allocations.emplace_back(flow.id, flow.rate);
            result.solution.allocations[{flow.id, best}] = flow.rate;
            processed[j] = 1;
            --unprocessed;
            for (int v : flow.path) {
                --count[v];
                rate_sum[v] -= flow.rate;
            }
        }
        std::sort(event.processed_flows.begin(), event.processed_flows.end());
        std::sort(event.allocations.begin(), event.allocations.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        result.solution.placements[best] = event.instances_placed;
        result.trace.push_back(std::move(event));
    }
    return result;
}

}  // namespace

GreedyResult solve_fng(const ProblemInstance& instance) {
    return run_greedy(instance, Rule::FlowCount);
}

GreedyResult solve_frg(const ProblemInstance& instance) {
    return run_greedy(instance, Rule::FlowRate);
}

}  // namespace jpavnf
