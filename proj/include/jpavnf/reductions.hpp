#pragma once

#include <set>
#include <vector>

#include "jpavnf/model.hpp"

namespace jpavnf {

/// Set-cover input: elements 1..universe_size, one candidate subset per
/// entry. Every element must be covered by at least one subset.
struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::set<int>> subsets;

    friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

/// Validates and returns the set-cover instance: positive universe,
/// elements in range, union of subsets covering everything.
SetCoverInstance build_set_cover(int universe_size, std::vector<std::set<int>> subsets);

/// Embeds set cover into instance placement: one node per subset on a
/// complete graph, one flow per element with rate R/m whose path visits
/// exactly the nodes of the subsets containing it (ascending node index).
/// Minimum total instances = minimum cover size, for any R > 0.
ProblemInstance reduce_set_cover(const SetCoverInstance& sc, const Rational& capacity);

/// Classic greedy cover: repeatedly take the subset covering the most
/// uncovered elements, smallest index on ties. Returns 0-based subset
/// indices in choice order.
std::vector<int> greedy_set_cover(const SetCoverInstance& sc);

/// Replaces every positive rate by min(smallest positive rate, R/m), where
/// m is the flow count; zero rates stay zero. Afterwards any feasible
/// solver places at most one instance per node. Throws if no flow has a
/// positive rate.
ProblemInstance small_rate_transform(const ProblemInstance& instance);

}  // namespace jpavnf
