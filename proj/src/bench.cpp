#include "jpavnf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "jpavnf/exact.hpp"
#include "jpavnf/greedy.hpp"
#include "jpavnf/tree.hpp"

namespace jpavnf {

namespace {

// splitmix-style mixer: decorrelates the per-purpose generator streams
// that share one instance seed
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

const std::vector<std::string> kKnownAlgorithms = {"exact", "fng", "frg", "gft"};

bool wants(const ScenarioConfig& config, const std::string& algorithm) {
    return std::find(config.algorithms.begin(), config.algorithms.end(), algorithm) !=
           config.algorithms.end();
}

struct PreparedInstance {
    ProblemInstance instance;
    std::optional<int> root;
};

PreparedInstance prepare(const ScenarioConfig& config, std::uint64_t seed) {
    switch (config.topology) {
        case ScenarioConfig::Topology::Generated: {
            Graph graph = gen_random_topology(config.n, config.edge_count, {mix(seed, 1)});
            auto flows = gen_flows(graph, config.m, config.path_class,
                                   {config.rate_tag, config.capacity}, {mix(seed, 2)});
            return {build_instance(std::move(graph), std::move(flows), config.capacity),
                    std::nullopt};
        }
        case ScenarioConfig::Topology::Tree: {
            auto [graph, root] = gen_tree(config.n, config.max_children, {mix(seed, 1)});
            TreeInstance skeleton =
                validate_tree_instance(build_instance(graph, {}, config.capacity), root);
            auto flows = gen_upstream_tree_flows(skeleton, config.m,
                                                 {config.rate_tag, config.capacity},
                                                 {mix(seed, 2)});
            return {build_instance(std::move(graph), std::move(flows), config.capacity), root};
        }
        case ScenarioConfig::Topology::File: {
            Json doc = load_json_file(config.file);
            ProblemInstance base = instance_from_json(doc);
            std::optional<int> root = root_from_json(doc);
            std::vector<Flow> flows;
            if (root) {
                TreeInstance skeleton = validate_tree_instance(
                    build_instance(base.graph, {}, config.capacity), *root);
                flows = gen_upstream_tree_flows(skeleton, config.m,
                                                {config.rate_tag, config.capacity},
                                                {mix(seed, 2)});
            } else {
                flows = gen_flows(base.graph, config.m, config.path_class,
                                  {config.rate_tag, config.capacity}, {mix(seed, 2)});
            }
            return {build_instance(std::move(base.graph), std::move(flows), config.capacity),
                    root};
        }
    }
    throw Error("unreachable topology kind");
}

Solution solve_with(const std::string& algorithm, const ProblemInstance& instance,
                    const std::optional<int>& root) {
    if (algorithm == "fng") return solve_fng(instance).solution;
    if (algorithm == "frg") return solve_frg(instance).solution;
    if (algorithm == "exact") return solve_exact(instance).solution;
    if (algorithm == "gft") {
        if (!root)
            throw ValidationError("scenario requests gft but the topology has no root");
        return solve_gft(validate_tree_instance(instance, *root)).solution;
    }
    throw ValidationError("unknown algorithm '" + algorithm + "'");
}

}  // namespace

void validate_scenario(const ScenarioConfig& config) {
    if (config.id.empty()) throw ValidationError("scenario needs a non-empty id");
    if (config.m < 1) throw ValidationError("scenario '" + config.id + "': flow count must be positive");
    if (config.repetitions < 0)
        throw ValidationError("scenario '" + config.id + "': negative repetitions");
    if (config.algorithms.empty())
        throw ValidationError("scenario '" + config.id + "': no algorithms requested");
    for (const auto& algorithm : config.algorithms)
        if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), algorithm) ==
            kKnownAlgorithms.end())
            throw ValidationError("scenario '" + config.id + "': unknown algorithm '" +
                                  algorithm + "'");
    if (config.topology != ScenarioConfig::Topology::File && config.n < 1)
        throw ValidationError("scenario '" + config.id + "': node count must be positive");
    if (wants(config, "gft") && config.topology == ScenarioConfig::Topology::Generated)
        throw ValidationError("scenario '" + config.id +
                              "': gft requires a tree topology or a rooted instance file");
    if (wants(config, "exact")) {
        ExactCap cap = exact_solver_cap();
        if (config.topology != ScenarioConfig::Topology::File && config.n > cap.max_nodes)
            throw ValidationError("scenario '" + config.id + "': exact solver capped at " +
                                  std::to_string(cap.max_nodes) + " nodes, got " +
                                  std::to_string(config.n));
        if (config.m > cap.max_flows)
            throw ValidationError("scenario '" + config.id + "': exact solver capped at " +
                                  std::to_string(cap.max_flows) + " flows, got " +
                                  std::to_string(config.m));
    }
}

std::vector<ResultRow> run_scenario(const ScenarioConfig& config, bool timings) {
    validate_scenario(config);
    const ExactCap cap = exact_solver_cap();

    std::vector<ResultRow> rows;
    for (int r = 0; r < config.repetitions; ++r) {
        const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(r);
        PreparedInstance prepared = prepare(config, seed);
        if (wants(config, "exact") && prepared.instance.node_count() > cap.max_nodes)
            throw ValidationError("scenario '" + config.id + "': exact solver capped at " +
                                  std::to_string(cap.max_nodes) + " nodes, instance file has " +
                                  std::to_string(prepared.instance.node_count()));
        if (wants(config, "gft") && !prepared.root)
            throw ValidationError("scenario '" + config.id +
                                  "': gft requires a rooted instance file");

        const std::int64_t lb = demand_lower_bound(prepared.instance);
        for (const auto& algorithm : config.algorithms) {
            auto start = std::chrono::steady_clock::now();
            Solution solution = solve_with(algorithm, prepared.instance, prepared.root);
            auto stop = std::chrono::steady_clock::now();

            FeasibilityReport feas = check_feasible(prepared.instance, solution);
            if (!feas.feasible)
                throw Error("solver '" + algorithm + "' produced an infeasible solution in "
                            "scenario '" + config.id + "', repetition " + std::to_string(r));

            ResultRow row;
            row.scenario = config.id;
            row.instance = r;
            row.seed = seed;
            row.algorithm = algorithm;
            row.total_vnf = total_instances(solution);
            row.hosting_nodes = hosting_nodes(solution);
            row.lower_bound = lb;
            row.ratio_to_lb =
                lb > 0 ? Rational(row.total_vnf) / Rational(lb) : Rational(1);
            if (timings)
                row.runtime_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                     stop - start)
                                     .count();
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.scenario, a.instance, a.algorithm) <
               std::tie(b.scenario, b.instance, b.algorithm);
    });
    return rows;
}

std::vector<ScenarioConfig> scenarios_from_json(const Json& doc) {
    if (!doc.is_array()) throw ValidationError("scenario config must be a JSON array");
    std::vector<ScenarioConfig> configs;
    for (const auto& entry : doc) {
        ScenarioConfig config;
        config.id = entry.at("id").get<std::string>();
        const Json& topo = entry.at("topology");
        std::string kind = topo.at("kind").get<std::string>();
        if (kind == "generated") {
            config.topology = ScenarioConfig::Topology::Generated;
            config.n = topo.at("n").get<int>();
            config.edge_count = topo.at("edges").get<int>();
        } else if (kind == "tree") {
            config.topology = ScenarioConfig::Topology::Tree;
            config.n = topo.at("n").get<int>();
            config.max_children = topo.value("max_children", 2);
        } else if (kind == "file") {
            config.topology = ScenarioConfig::Topology::File;
            config.file = topo.at("path").get<std::string>();
        } else {
            throw ValidationError("unknown topology kind '" + kind + "'");
        }
        config.m = entry.at("flows").get<int>();
        if (entry.contains("path_class")) {
            std::string cls = entry.at("path_class").get<std::string>();
            if (cls == "short") config.path_class = PathClass::Short;
            else if (cls == "medium") config.path_class = PathClass::Medium;
            else if (cls == "long") config.path_class = PathClass::Long;
            else throw ValidationError("unknown path class '" + cls + "'");
        }
        if (entry.contains("rate_class")) {
            std::string cls = entry.at("rate_class").get<std::string>();
            if (cls == "small") config.rate_tag = RateTag::Small;
            else if (cls == "large") config.rate_tag = RateTag::Large;
            else throw ValidationError("unknown rate class '" + cls + "'");
        }
        if (entry.contains("capacity"))
            config.capacity = rational_from_json(entry.at("capacity"));
        config.algorithms = entry.at("algorithms").get<std::vector<std::string>>();
        config.repetitions = entry.value("repetitions", 1);
        config.base_seed = entry.value("base_seed", std::uint64_t(0));
        validate_scenario(config);
        configs.push_back(std::move(config));
    }
    return configs;
}

Json scenarios_to_json(const std::vector<ScenarioConfig>& configs) {
    Json out = Json::array();
    for (const auto& config : configs) {
        Json topo;
        switch (config.topology) {
            case ScenarioConfig::Topology::Generated:
                topo = {{"kind", "generated"}, {"n", config.n}, {"edges", config.edge_count}};
                break;
            case ScenarioConfig::Topology::Tree:
                topo = {{"kind", "tree"}, {"n", config.n},
                        {"max_children", config.max_children}};
                break;
            case ScenarioConfig::Topology::File:
                topo = {{"kind", "file"}, {"path", config.file}};
                break;
        }
        Json entry = {
            {"id", config.id},
            {"topology", std::move(topo)},
            {"flows", config.m},
            {"path_class", config.path_class == PathClass::Short    ? "short"
                           : config.path_class == PathClass::Medium ? "medium"
                                                                    : "long"},
            {"rate_class", config.rate_tag == RateTag::Small ? "small" : "large"},
            {"capacity", rational_to_json(config.capacity)},
            {"algorithms", config.algorithms},
            {"repetitions", config.repetitions},
            {"base_seed", config.base_seed},
        };
        out.push_back(std::move(entry));
    }
    return out;
}

std::string results_to_csv(std::vector<ResultRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.scenario, a.instance, a.algorithm) <
               std::tie(b.scenario, b.instance, b.algorithm);
    });
    std::ostringstream out;
    out << "scenario,instance,seed,algorithm,total_vnf,hosting_nodes,lower_bound,"
           "ratio_to_lb,runtime_us\n";
    for (const ResultRow& row : rows) {
        out << row.scenario << ',' << row.instance << ',' << row.seed << ','
            << row.algorithm << ',' << row.total_vnf << ',' << row.hosting_nodes << ','
            << row.lower_bound << ',' << row.ratio_to_lb.decimal(4) << ','
            << row.runtime_us << '\n';
    }
    return out.str();
}

}  // namespace jpavnf
