// jpavnf: solve, verify, generate, reduce, and benchmark VNF placement
// instances from the command line. Exit codes: 0 success, 1 invalid input
// or infeasible result, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jpavnf/bench.hpp"
#include "jpavnf/exact.hpp"
#include "jpavnf/greedy.hpp"
#include "jpavnf/json_io.hpp"
#include "jpavnf/reductions.hpp"
#include "jpavnf/tree.hpp"

namespace {

using namespace jpavnf;

Json greedy_trace_to_json(const std::vector<GreedyTraceEvent>& trace) {
    Json out = Json::array();
    for (const auto& event : trace) {
        Json allocations = Json::array();
        for (const auto& [flow, amount] : event.allocations)
            allocations.push_back({{"flow", flow}, {"amount", rational_to_json(amount)}});
        out.push_back({{"iteration", event.iteration},
                       {"node", event.chosen_node},
                       {"processed", event.processed_flows},
                       {"instances", event.instances_placed},
                       {"allocations", std::move(allocations)}});
    }
    return out;
}

Json gft_steps_to_json(const std::vector<GftStepEvent>& steps) {
    Json out = Json::array();
    for (const auto& step : steps) {
        Json leaving = Json::array();
        for (const auto& [flow, amount] : step.leaving)
            leaving.push_back({{"flow", flow}, {"amount", rational_to_json(amount)}});
        Json waiting = Json::array();
        for (const auto& [flow, amount] : step.waiting)
            waiting.push_back({{"flow", flow}, {"amount", rational_to_json(amount)}});
        out.push_back({{"node", step.node},
                       {"leaving", std::move(leaving)},
                       {"leaving_demand", rational_to_json(step.leaving_demand)},
                       {"instances", step.instances_placed},
                       {"waiting", std::move(waiting)}});
    }
    return out;
}

struct SolveOptions {
    std::string instance_file;
    std::string algorithm;
    std::optional<int> root;
    std::string waiting_order = "deepest";
    std::optional<std::int64_t> budget;
    bool trace = false;
    std::string out_file;
};

int run_solve(const SolveOptions& opt) {
    Json doc = load_json_file(opt.instance_file);
    ProblemInstance instance = instance_from_json(doc);

    Solution solution;
    Json extra;
    std::string note;
    if (opt.algorithm == "fng" || opt.algorithm == "frg") {
        GreedyResult result =
            opt.algorithm == "fng" ? solve_fng(instance) : solve_frg(instance);
        solution = std::move(result.solution);
        if (opt.trace) extra["trace"] = greedy_trace_to_json(result.trace);
    } else if (opt.algorithm == "gft") {
        std::optional<int> root = opt.root ? opt.root : root_from_json(doc);
        if (!root)
            throw ValidationError("gft needs a rooted tree: pass --root or add "
                                  "\"root\" to the instance file");
        TreeInstance tree = validate_tree_instance(instance, *root);
        WaitingOrder order = opt.waiting_order == "shallowest"
                                 ? WaitingOrder::ShallowestExitFirst
                                 : WaitingOrder::DeepestExitFirst;
        GftResult result = solve_gft(tree, order);
        solution = std::move(result.solution);
        if (opt.trace) extra["steps"] = gft_steps_to_json(result.steps);
    } else {  // exact, enforced by CLI choices
        ExactResult result = solve_exact(instance, opt.budget);
        solution = std::move(result.solution);
        note = " proven_optimal=" + std::string(result.proven_optimal ? "true" : "false") +
               " nodes_explored=" + std::to_string(result.nodes_explored);
    }

    FeasibilityReport feas = check_feasible(instance, solution);
    if (!feas.feasible) throw Error("internal error: solver emitted an infeasible solution");

    std::string summary = "algorithm=" + opt.algorithm +
                          " total_vnf=" + std::to_string(total_instances(solution)) +
                          " hosting_nodes=" + std::to_string(hosting_nodes(solution)) +
                          " lower_bound=" + std::to_string(demand_lower_bound(instance)) +
                          note;
    Json out = solution_to_json(solution);
    for (auto& [key, value] : extra.items()) out[key] = std::move(value);

    if (opt.out_file.empty()) {
        std::cout << out.dump(2) << "\n";
        std::cerr << summary << "\n";
    } else {
        write_json_file(opt.out_file, out);
        std::cout << summary << "\n";
    }
    return 0;
}

int run_verify(const std::string& instance_file, const std::string& solution_file) {
    ProblemInstance instance = instance_from_json(load_json_file(instance_file));
    Solution solution = solution_from_json(load_json_file(solution_file));
    FeasibilityReport report = check_feasible(instance, solution);
    if (report.feasible) {
        std::cout << "feasible: total_vnf=" << total_instances(solution)
                  << " hosting_nodes=" << hosting_nodes(solution) << "\n";
        return 0;
    }
    for (const auto& [flow, shortfall] : report.flow_violations)
        std::cerr << "flow " << flow << " short by " << shortfall.str() << "\n";
    for (const auto& [node, excess] : report.node_violations)
        std::cerr << "node " << node << " over capacity by " << excess.str() << "\n";
    return 1;
}

int run_smoke(const std::filesystem::path& fixtures) {
    int failures = 0;
    auto expect = [&](bool ok, const std::string& name, const std::string& detail) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
        if (!ok) ++failures;
    };

    {
        Json doc = load_json_file(fixtures / "six_node.json");
        ProblemInstance instance = instance_from_json(doc);
        auto fng = solve_fng(instance).solution;
        auto frg = solve_frg(instance).solution;
        auto exact = solve_exact(instance);
        expect(total_instances(fng) == 4 && total_instances(frg) == 4 &&
               exact.optimum == 3 && exact.proven_optimal,
               "six_node", "fng=4 frg=4 exact=3");
        auto a = solution_from_json(load_json_file(fixtures / "six_node_solution_a.json"));
        auto b = solution_from_json(load_json_file(fixtures / "six_node_solution_b.json"));
        expect(check_feasible(instance, a).feasible && total_instances(a) == 4 &&
               check_feasible(instance, b).feasible && total_instances(b) == 3,
               "six_node_solutions", "shipped solutions verify (4 and 3 instances)");
    }
    {
        ProblemInstance a = instance_from_json(load_json_file(fixtures / "two_node_a.json"));
        ProblemInstance b = instance_from_json(load_json_file(fixtures / "two_node_b.json"));
        expect(total_instances(solve_fng(a).solution) == 6 &&
               total_instances(solve_frg(a).solution) == 5 &&
               total_instances(solve_fng(b).solution) == 2 &&
               total_instances(solve_frg(b).solution) == 3,
               "two_node", "fng/frg pull apart in both directions (6/5 and 2/3)");
    }
    {
        Json doc = load_json_file(fixtures / "example_tree.json");
        ProblemInstance instance = instance_from_json(doc);
        TreeInstance tree = validate_tree_instance(instance, root_from_json(doc).value());
        GftResult result = solve_gft(tree);
        expect(total_instances(result.solution) == 4 && result.steps.size() == 4,
               "example_tree", "gft places 4 instances in 4 steps");
    }
    {
        SetCoverInstance sc = set_cover_from_json(load_json_file(fixtures / "setcover_example.json"));
        ProblemInstance reduced = reduce_set_cover(sc, Rational(10));
        auto cover = greedy_set_cover(sc);
        auto trace = solve_fng(reduced).trace;
        bool sequences_match = cover.size() == trace.size();
        for (std::size_t i = 0; sequences_match && i < cover.size(); ++i)
            sequences_match = cover[i] == trace[i].chosen_node;
        expect(sequences_match && solve_exact(reduced).optimum == 2,
               "setcover_example", "greedy sequences agree, reduced optimum 2");
    }
    {
        Json doc = load_json_file(fixtures / "internetmci.json");
        ProblemInstance base = instance_from_json(doc);
        auto flows = gen_flows(base.graph, 20, PathClass::Medium,
                               {RateTag::Small, base.capacity}, {1});
        ProblemInstance instance =
            build_instance(base.graph, std::move(flows), base.capacity);
        auto fng = solve_fng(instance).solution;
        auto frg = solve_frg(instance).solution;
        expect(check_feasible(instance, fng).feasible &&
               check_feasible(instance, frg).feasible,
               "internetmci", "topology validates, greedy solutions feasible");
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"VNF placement toolkit: greedy, tree-optimal, and exact solvers"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--instance", solve_opt.instance_file, "Instance JSON")
        ->required()
        ->check(CLI::ExistingFile);
    solve->add_option("--algorithm", solve_opt.algorithm, "Solver")
        ->required()
        ->check(CLI::IsMember({"fng", "frg", "gft", "exact"}));
    std::int64_t budget_arg = -1;
    int root_arg = -1;
    solve->add_option("--root", root_arg, "Tree root override (gft)");
    solve->add_option("--waiting-order", solve_opt.waiting_order,
                      "gft leftover order: deepest|shallowest")
        ->check(CLI::IsMember({"deepest", "shallowest"}));
    solve->add_option("--budget", budget_arg, "Search-node budget (exact)");
    solve->add_flag("--trace", solve_opt.trace, "Include the per-step trace in the output");
    solve->add_option("--out", solve_opt.out_file, "Write the solution here (atomic)");

    std::string verify_instance, verify_solution;
    auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
    verify->add_option("--instance", verify_instance)->required()->check(CLI::ExistingFile);
    verify->add_option("--solution", verify_solution)->required()->check(CLI::ExistingFile);

    int gen_nodes = 0, gen_edges = 0, gen_children = 2, gen_flow_count = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out, gen_capacity = "10", gen_path_class = "short",
                gen_rate_class = "small", gen_instance;

    auto* gen_topology = app.add_subcommand("gen-topology", "Random connected topology");
    gen_topology->add_option("--nodes", gen_nodes)->required();
    gen_topology->add_option("--edges", gen_edges)->required();
    gen_topology->add_option("--seed", gen_seed);
    gen_topology->add_option("--capacity", gen_capacity, "Per-instance capacity p/q");
    gen_topology->add_option("--out", gen_out)->required();

    auto* gen_tree_cmd = app.add_subcommand("gen-tree", "Random rooted tree topology");
    gen_tree_cmd->add_option("--nodes", gen_nodes)->required();
    gen_tree_cmd->add_option("--max-children", gen_children);
    gen_tree_cmd->add_option("--seed", gen_seed);
    gen_tree_cmd->add_option("--capacity", gen_capacity, "Per-instance capacity p/q");
    gen_tree_cmd->add_option("--out", gen_out)->required();

    auto* gen_flows_cmd =
        app.add_subcommand("gen-flows", "Replace an instance's flows with random ones");
    gen_flows_cmd->add_option("--instance", gen_instance)->required()->check(CLI::ExistingFile);
    gen_flows_cmd->add_option("--flows", gen_flow_count)->required();
    gen_flows_cmd->add_option("--path-class", gen_path_class)
        ->check(CLI::IsMember({"short", "medium", "long"}));
    gen_flows_cmd->add_option("--rate-class", gen_rate_class)
        ->check(CLI::IsMember({"small", "large"}));
    gen_flows_cmd->add_option("--seed", gen_seed);
    gen_flows_cmd->add_option("--out", gen_out)->required();

    std::string reduce_file, reduce_capacity = "10";
    auto* reduce = app.add_subcommand("reduce-setcover",
                                      "Embed a set-cover instance into placement form");
    reduce->add_option("--setcover", reduce_file)->required()->check(CLI::ExistingFile);
    reduce->add_option("--capacity", reduce_capacity, "Per-instance capacity p/q");
    reduce->add_option("--out", gen_out)->required();

    std::string bench_config, bench_csv;
    bool bench_timings = false;
    auto* bench = app.add_subcommand("bench", "Run scenario grids and write a CSV");
    bench->add_option("--config", bench_config)->required()->check(CLI::ExistingFile);
    bench->add_option("--out-csv", bench_csv)->required();
    bench->add_flag("--timings", bench_timings,
                    "Record real runtimes (breaks byte-reproducibility)");

    std::string smoke_fixtures = "fixtures";
    auto* smoke = app.add_subcommand("smoke", "Run the shipped fixtures end to end");
    smoke->add_option("--fixtures", smoke_fixtures, "Fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed()) {
            if (root_arg >= 0) solve_opt.root = root_arg;
            if (budget_arg >= 0) solve_opt.budget = budget_arg;
            return run_solve(solve_opt);
        }
        if (verify->parsed()) return run_verify(verify_instance, verify_solution);
        if (gen_topology->parsed()) {
            Graph graph = gen_random_topology(gen_nodes, gen_edges, {gen_seed});
            ProblemInstance instance =
                build_instance(std::move(graph), {}, Rational::parse(gen_capacity));
            write_json_file(gen_out, instance_to_json(instance));
            std::cout << "wrote " << gen_out << "\n";
            return 0;
        }
        if (gen_tree_cmd->parsed()) {
            auto [graph, root] = gen_tree(gen_nodes, gen_children, {gen_seed});
            ProblemInstance instance =
                build_instance(std::move(graph), {}, Rational::parse(gen_capacity));
            write_json_file(gen_out, instance_to_json(instance, root));
            std::cout << "wrote " << gen_out << "\n";
            return 0;
        }
        if (gen_flows_cmd->parsed()) {
            Json doc = load_json_file(gen_instance);
            ProblemInstance base = instance_from_json(doc);
            std::optional<int> root = root_from_json(doc);
            PathClass path_class = gen_path_class == "short"    ? PathClass::Short
                                   : gen_path_class == "medium" ? PathClass::Medium
                                                                : PathClass::Long;
            RateClass rate_class{gen_rate_class == "small" ? RateTag::Small : RateTag::Large,
                                 base.capacity};
            std::vector<Flow> flows;
            if (root) {
                TreeInstance skeleton = validate_tree_instance(
                    build_instance(base.graph, {}, base.capacity), *root);
                flows = gen_upstream_tree_flows(skeleton, gen_flow_count, rate_class,
                                                {gen_seed});
            } else {
                flows = gen_flows(base.graph, gen_flow_count, path_class, rate_class,
                                  {gen_seed});
            }
            ProblemInstance instance =
                build_instance(std::move(base.graph), std::move(flows), base.capacity);
            write_json_file(gen_out, instance_to_json(instance, root));
            std::cout << "wrote " << gen_out << "\n";
            return 0;
        }
        if (reduce->parsed()) {
            SetCoverInstance sc = set_cover_from_json(load_json_file(reduce_file));
            ProblemInstance instance = reduce_set_cover(sc, Rational::parse(reduce_capacity));
            write_json_file(gen_out, instance_to_json(instance));
            std::cout << "wrote " << gen_out << "\n";
            return 0;
        }
        if (bench->parsed()) {
            auto configs = scenarios_from_json(load_json_file(bench_config));
            std::vector<ResultRow> rows;
            for (const auto& config : configs) {
                auto scenario_rows = run_scenario(config, bench_timings);
                rows.insert(rows.end(), scenario_rows.begin(), scenario_rows.end());
            }
            write_file_atomic(bench_csv, results_to_csv(rows));
            std::cout << "wrote " << rows.size() << " rows to " << bench_csv << "\n";
            return 0;
        }
        if (smoke->parsed()) return run_smoke(smoke_fixtures);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
