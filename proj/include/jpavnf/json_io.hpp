#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "jpavnf/model.hpp"
#include "jpavnf/reductions.hpp"

namespace jpavnf {

using Json = nlohmann::json;

// Instance files:
//   {"capacity": {"num", "den"}, "nodes": [...], "edges": [[i,j]...],
//    "flows": [{"id", "rate": {"num","den"}, "path": [...]}, ...]}
// plus an optional "root" for tree instances. Solution files:
//   {"placements": {"<node>": count, ...},
//    "allocations": [{"flow", "node", "amount": {"num","den"}}, ...]}

Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value);

Json instance_to_json(const ProblemInstance& instance, std::optional<int> root = std::nullopt);
ProblemInstance instance_from_json(const Json& doc);
/// Root index, if the document marks the instance as a rooted tree.
std::optional<int> root_from_json(const Json& doc);

Json solution_to_json(const Solution& solution);
Solution solution_from_json(const Json& doc);

/// Set-cover files: {"universe": int, "subsets": [[elements...], ...]},
/// elements 1-based.
Json set_cover_to_json(const SetCoverInstance& sc);
SetCoverInstance set_cover_from_json(const Json& doc);

Json load_json_file(const std::filesystem::path& path);
/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
void write_json_file(const std::filesystem::path& path, const Json& doc);

}  // namespace jpavnf
