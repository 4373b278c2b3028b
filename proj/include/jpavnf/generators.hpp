#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "jpavnf/model.hpp"
#include "jpavnf/tree.hpp"

namespace jpavnf {

/// Same seed + same parameters -> bit-identical output, always.
struct Seed {
    std::uint64_t value = 0;
};

/// Path-length regimes. The hop ceiling is floor(n/10), floor(n/4) or
/// floor(n/2), clamped to at least 1; a k-hop path visits k+1 nodes.
enum class PathClass { Short, Medium, Long };
std::pair<int, int> hop_range(PathClass cls, int n);

/// Rate regimes relative to the instance capacity R: small draws from
/// [0, R/m] on a 1/(1000m) grid, large from [0, 10R] on a 1/1000 grid.
enum class RateTag { Small, Large };
struct RateClass {
    RateTag tag = RateTag::Small;
    Rational capacity = Rational(10);
};

/// Connected random graph: a random spanning tree plus uniformly chosen
/// extra edges. edge_count must lie in [n-1, n(n-1)/2].
Graph gen_random_topology(int n, int edge_count, Seed seed);

/// Random rooted tree (root is node 0) where no node exceeds max_children.
std::pair<Graph, int> gen_tree(int n, int max_children, Seed seed);

/// Random flows: per flow a target hop count uniform in the class range and
/// a self-avoiding random walk from a uniform start, truncated if it
/// dead-ends early. Rates drawn uniformly from the rate-class grid.
std::vector<Flow> gen_flows(const Graph& graph, int m, PathClass path_class,
                            RateClass rate_class, Seed seed);

/// Random upstream flows on a tree: uniform start node, uniform ancestor
/// (possibly the start itself) as exit, path along the upward chain.
std::vector<Flow> gen_upstream_tree_flows(const TreeInstance& tree, int m,
                                          RateClass rate_class, Seed seed);

namespace detail {
/// Unbiased uniform draw from [0, bound), bound >= 1. Hand-rolled because
/// the standard distributions are implementation-defined and would break
/// the cross-platform determinism contract.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);
}  // namespace detail

}  // namespace jpavnf
