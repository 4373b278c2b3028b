#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jpavnf/model.hpp"

namespace jpavnf {

/// A rooted tree view of an instance. Levels are 1-based with the root at
/// level 1; order within a level follows node index. Every flow path is an
/// upward chain after ingestion (downward paths are reversed on the way in).
struct TreeInstance {
    ProblemInstance instance;
    int root = 0;
    std::vector<int> level;
    std::vector<int> order_in_level;
    std::vector<int> parent;  // -1 at the root
};

/// Checks tree shape and flow direction. Throws ValidationError if the graph
/// is not a tree, the root is out of range, or a flow's path is neither an
/// upward nor a downward chain (the error names the flow).
TreeInstance validate_tree_instance(const ProblemInstance& instance, int root);

/// Which waiting flow drinks leftover capacity first: the one exiting
/// deepest in the tree (largest level, the default) or shallowest.
enum class WaitingOrder { DeepestExitFirst, ShallowestExitFirst };

/// One solver step at a node with positive leaving demand.
struct GftStepEvent {
    int node = -1;
    std::vector<std::pair<std::string, Rational>> leaving;  // flow -> full remaining rate
    Rational leaving_demand;
    std::int64_t instances_placed = 0;
    std::vector<std::pair<std::string, Rational>> waiting;  // leftover pours, in order

    friend bool operator==(const GftStepEvent&, const GftStepEvent&) = default;
};

struct GftResult {
    Solution solution;
    std::vector<GftStepEvent> steps;
};

/// Bottom-up tree solver: visits nodes deepest level first, places
/// ceil(leaving demand / R) instances where flows exit, fully serves the
/// leavers, then pours the leftover capacity into flows still passing
/// through, ordered by their exit level. Optimal on trees.
GftResult solve_gft(const TreeInstance& tree,
                    WaitingOrder order = WaitingOrder::DeepestExitFirst);

/// Nodes whose placed capacity is not fully used by a feasible solution.
/// Conservative means no breaking point wastes a full instance or more.
/// external_flows is only filled by the tree-aware overload: per node, the
/// flows with exactly one path end inside that node's subtree.
struct BreakingPointReport {
    std::set<int> breaking_points;
    bool conservative = true;
    std::map<int, std::set<std::string>> external_flows;
};

BreakingPointReport find_breaking_points(const ProblemInstance& instance,
                                         const Solution& solution);
BreakingPointReport find_breaking_points(const TreeInstance& tree, const Solution& solution);

}  // namespace jpavnf
