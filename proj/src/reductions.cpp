#include "jpavnf/reductions.hpp"

#include <algorithm>
#include <string>

namespace jpavnf {

SetCoverInstance build_set_cover(int universe_size, std::vector<std::set<int>> subsets) {
    if (universe_size < 1) throw ValidationError("set-cover universe must be non-empty");
    std::vector<char> covered(universe_size + 1, 0);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (int e : subsets[i]) {
            if (e < 1 || e > universe_size)
                throw ValidationError("subset " + std::to_string(i + 1) + " contains element " +
                                      std::to_string(e) + " outside 1.." +
                                      std::to_string(universe_size));
            covered[e] = 1;
        }
    for (int e = 1; e <= universe_size; ++e)
        if (!covered[e])
            throw ValidationError("element " + std::to_string(e) + " is covered by no subset");
    return {universe_size, std::move(subsets)};
}

ProblemInstance reduce_set_cover(const SetCoverInstance& sc, const Rational& capacity) {
    const int n = static_cast<int>(sc.subsets.size());
    const int m = sc.universe_size;

    Graph graph;
    for (int i = 0; i < n; ++i) graph.labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) graph.edges.emplace_back(i, j);

    const Rational rate = capacity / Rational(m);
    std::vector<Flow> flows;
    for (int e = 1; e <= m; ++e) {
        Flow flow;
        flow.id = "f" + std::to_string(e);
        flow.rate = rate;
        for (int i = 0; i < n; ++i)
            if (sc.subsets[i].count(e)) flow.path.push_back(i);
        flows.push_back(std::move(flow));
    }
    return build_instance(std::move(graph), std::move(flows), capacity);
}

std::vector<int> greedy_set_cover(const SetCoverInstance& sc) {
    std::set<int> uncovered;
    for (int e = 1; e <= sc.universe_size; ++e) uncovered.insert(e);

    std::vector<int> chosen;
    while (!uncovered.empty()) {
        int best = -1;
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < sc.subsets.size(); ++i) {
            std::size_t gain = 0;
            for (int e : sc.subsets[i]) gain += uncovered.count(e);
            if (gain > best_gain) {
                best = static_cast<int>(i);
                best_gain = gain;
            }
        }
        for (int e : sc.subsets[best]) uncovered.erase(e);
        chosen.push_back(best);
    }
    return chosen;
}

ProblemInstance small_rate_transform(const ProblemInstance& instance) {
    Rational min_positive;
    bool found = false;
    for (const Flow& flow : instance.flows)
        if (!flow.rate.is_zero() && (!found || flow.rate < min_positive)) {
            min_positive = flow.rate;
            found = true;
        }
    if (!found) throw ValidationError("small-rate transform needs a flow with positive rate");

    Rational target = std::min(min_positive,
                               instance.capacity / Rational(instance.flow_count()));
    ProblemInstance out = instance;
    for (Flow& flow : out.flows)
        if (!flow.rate.is_zero()) flow.rate = target;
    return out;
}

}  // namespace jpavnf
