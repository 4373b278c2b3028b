#include "jpavnf/json_io.hpp"

#include <fstream>
#include <random>

namespace jpavnf {

namespace {

const Json& require(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ValidationError(std::string("missing field '") + key + "'");
    }
    return *it;
}

}  // namespace

Json rational_to_json(const Rational& value) {
    return Json{{"num", value.num()}, {"den", value.den()}};
}

Rational rational_from_json(const Json& value) {
    if (!value.is_object()) {
        throw ValidationError("rational must be an object with num/den");
    }
    std::int64_t num = require(value, "num").get<std::int64_t>();
    std::int64_t den = require(value, "den").get<std::int64_t>();
    return Rational(num, den);
}

Json instance_to_json(const ProblemInstance& instance, std::optional<int> root) {
    Json doc;
    doc["capacity"] = rational_to_json(instance.capacity);
    doc["nodes"] = instance.graph.labels;
    Json edges = Json::array();
    for (const auto& [a, b] : instance.graph.edges) {
        edges.push_back(Json::array({a, b}));
    }
    doc["edges"] = std::move(edges);
    Json flows = Json::array();
    for (const auto& flow : instance.flows) {
        flows.push_back(Json{{"id", flow.id},
                             {"rate", rational_to_json(flow.rate)},
                             {"path", flow.path}});
    }
    doc["flows"] = std::move(flows);
    if (root) {
        doc["root"] = *root;
    }
    return doc;
}

ProblemInstance instance_from_json(const Json& doc) {
    Graph graph;
    graph.labels = require(doc, "nodes").get<std::vector<std::string>>();
    for (const auto& edge : require(doc, "edges")) {
        if (!edge.is_array() || edge.size() != 2) {
            throw ValidationError("edge must be a pair of node indices");
        }
        graph.edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    std::vector<Flow> flows;
    for (const auto& entry : require(doc, "flows")) {
        Flow flow;
        flow.id = require(entry, "id").get<std::string>();
        flow.rate = rational_from_json(require(entry, "rate"));
        flow.path = require(entry, "path").get<std::vector<int>>();
        flows.push_back(std::move(flow));
    }
    Rational capacity = rational_from_json(require(doc, "capacity"));
    return build_instance(std::move(graph), std::move(flows), std::move(capacity));
}

std::optional<int> root_from_json(const Json& doc) {
    if (auto it = doc.find("root"); it != doc.end()) {
        return it->get<int>();
    }
    return std::nullopt;
}

Json solution_to_json(const Solution& solution) {
    Json placements = Json::object();
    for (const auto& [node, count] : solution.placements) {
        placements[std::to_string(node)] = count;
    }
    Json allocations = Json::array();
    for (const auto& [key, amount] : solution.allocations) {
        allocations.push_back(Json{{"flow", key.first},
                                   {"node", key.second},
                                   {"amount", rational_to_json(amount)}});
    }
    return Json{{"placements", std::move(placements)},
                {"allocations", std::move(allocations)}};
}

Solution solution_from_json(const Json& doc) {
    Solution solution;
    for (const auto& [key, count] : require(doc, "placements").items()) {
        int node = 0;
        try {
            node = std::stoi(key);
        } catch (const std::exception&) {
            throw ValidationError("placement key '" + key + "' is not a node index");
        }
        std::int64_t value = count.get<std::int64_t>();
        if (value < 0) {
            throw ValidationError("negative instance count at node " + key);
        }
        if (value > 0) {
            solution.placements[node] = value;
        }
    }
    for (const auto& entry : require(doc, "allocations")) {
        std::string flow = require(entry, "flow").get<std::string>();
        int node = require(entry, "node").get<int>();
        Rational amount = rational_from_json(require(entry, "amount"));
        if (amount.sign() < 0) {
            throw ValidationError("negative allocation for flow '" + flow + "'");
        }
        solution.allocations[{flow, node}] += amount;
    }
    return solution;
}

Json set_cover_to_json(const SetCoverInstance& sc) {
    Json subsets = Json::array();
    for (const auto& subset : sc.subsets) {
        subsets.push_back(std::vector<int>(subset.begin(), subset.end()));
    }
    return Json{{"universe", sc.universe_size}, {"subsets", std::move(subsets)}};
}

SetCoverInstance set_cover_from_json(const Json& doc) {
    int universe = require(doc, "universe").get<int>();
    std::vector<std::set<int>> subsets;
    for (const auto& entry : require(doc, "subsets")) {
        auto elements = entry.get<std::vector<int>>();
        subsets.emplace_back(elements.begin(), elements.end());
    }
    return build_set_cover(universe, std::move(subsets));
}

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return doc;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto dir = path.parent_path();
    std::random_device rd;
    auto tmp = (dir.empty() ? std::filesystem::path(".") : dir) /
               (path.filename().string() + ".tmp" + std::to_string(rd() % 1000000));
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + tmp.string());
        }
        out << content;
        if (!out.flush()) {
            throw Error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
    write_file_atomic(path, doc.dump(2) + "\n");
}

}  // namespace jpavnf
