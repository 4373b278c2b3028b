#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jpavnf/model.hpp"

namespace jpavnf {

/// Candidate instance counts per node, indexed like the node list.
using PlacementVector = std::vector<std::int64_t>;

struct ExactResult {
    Solution solution;
    std::int64_t optimum = 0;
    std::int64_t nodes_explored = 0;
    bool proven_optimal = true;
};

/// True iff some fractional allocation serves every flow's full rate within
/// the capacity x[i] * R at each node. Decided by an exact bipartite max-flow
/// (rates scaled to integers by the common denominator): feasible iff the
/// max flow saturates the total demand.
bool allocation_feasible(const ProblemInstance& instance, const PlacementVector& x);

/// Materializes a witness allocation for a feasible x by reading the
/// per-edge flows off the saturating max-flow. Throws Error if x is
/// infeasible.
Solution extract_allocation(const ProblemInstance& instance, const PlacementVector& x);

/// Minimizes the total instance count by depth-first branch and bound over
/// per-node counts. Nodes are ordered by descending passing demand and values
/// explored high-to-low; the incumbent starts from the better of the two
/// greedy solvers. If node_budget assignments are exhausted the best solution
/// so far is returned with proven_optimal = false.
ExactResult solve_exact(const ProblemInstance& instance,
                        std::optional<std::int64_t> node_budget = std::nullopt);

/// Instance-size cap for the exact solver as enforced by the bench harness
/// (override with JPAVNF_EXACT_CAP="N" or "N,M").
struct ExactCap {
    int max_nodes = 15;
    int max_flows = 12;
};
ExactCap exact_solver_cap();

}  // namespace jpavnf
