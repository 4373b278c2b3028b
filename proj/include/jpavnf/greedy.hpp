#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jpavnf/model.hpp"

namespace jpavnf {

/// One greedy iteration: the chosen node, the flows fully processed there,
/// and the instances that placement required.
struct GreedyTraceEvent {
    std::int64_t iteration = 0;  // 1-based
    int chosen_node = -1;
    std::vector<std::string> processed_flows;  // sorted ids
    std::int64_t instances_placed = 0;
    std::vector<std::pair<std::string, Rational>> allocations;  // flow -> full rate

    friend bool operator==(const GreedyTraceEvent&, const GreedyTraceEvent&) = default;
};

struct GreedyResult {
    Solution solution;
    std::vector<GreedyTraceEvent> trace;
};

/// Flow-number greedy: repeatedly pick the node passed by the most
/// unprocessed flows (smallest index on ties) and process all of them there.
GreedyResult solve_fng(const ProblemInstance& instance);

/// Flow-rate greedy: same loop, but the node score is the total unprocessed
/// rate passing it.
GreedyResult solve_frg(const ProblemInstance& instance);

}  // namespace jpavnf
