#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jpavnf/generators.hpp"
#include "jpavnf/json_io.hpp"
#include "jpavnf/model.hpp"

namespace jpavnf {

/// One experiment cell: a topology source, a flow workload, and the
/// algorithms to compare. Every repetition r derives its instance from
/// base_seed + r, so a config file pins the whole experiment.
struct ScenarioConfig {
    enum class Topology { Generated, Tree, File };

    std::string id;
    Topology topology = Topology::Generated;
    int n = 0;              // Generated/Tree
    int edge_count = 0;     // Generated
    int max_children = 2;   // Tree
    std::string file;       // File (instance JSON; root honored if present)
    int m = 0;
    PathClass path_class = PathClass::Short;
    RateTag rate_tag = RateTag::Small;
    Rational capacity = Rational(10);
    std::vector<std::string> algorithms;  // subset of fng|frg|gft|exact
    int repetitions = 1;
    std::uint64_t base_seed = 0;
};

struct ResultRow {
    std::string scenario;
    int instance = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::int64_t total_vnf = 0;
    std::int64_t hosting_nodes = 0;
    std::int64_t lower_bound = 0;
    Rational ratio_to_lb;
    std::int64_t runtime_us = 0;
};

/// Rejects unknown algorithms, gft on non-tree topologies, and exact
/// requests beyond the size cap (see exact_solver_cap).
void validate_scenario(const ScenarioConfig& config);

/// Runs every algorithm on every repetition's instance. Each solution is
/// feasibility-checked before its row is emitted; an infeasible solver
/// output is a hard error, never data. Rows come back sorted by
/// (scenario, instance, algorithm). Runtimes are recorded only when
/// timings is set, so default output is byte-reproducible.
std::vector<ResultRow> run_scenario(const ScenarioConfig& config, bool timings = false);

std::vector<ScenarioConfig> scenarios_from_json(const Json& doc);
Json scenarios_to_json(const std::vector<ScenarioConfig>& configs);

/// Header: scenario,instance,seed,algorithm,total_vnf,hosting_nodes,
/// lower_bound,ratio_to_lb,runtime_us. Rows are written in sorted order.
std::string results_to_csv(std::vector<ResultRow> rows);

}  // namespace jpavnf
