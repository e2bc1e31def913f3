#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nst/construct.hpp"
#include "nst/finite_graph.hpp"
#include "nst/separators.hpp"
#include "nst/tree.hpp"
#include "nst/witness.hpp"

namespace nst::io {

using nlohmann::json;

/// Reads a whole file; throws DomainError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Parses text as JSON, turning parse errors into DomainError.
json parse_json(const std::string& text, const std::string& what);

/// { "vertices": [ids], "edges": [[u, v], ...] }
FiniteGraph graph_from_json(const json& j);
json graph_to_json(const FiniteGraph& g);
FiniteGraph load_graph(const std::filesystem::path& path);

/// { "root": id, "parents": { "v": parent, ... } }
RootedTree tree_from_json(const json& j);
json tree_to_json(const RootedTree& t);
RootedTree load_tree(const std::filesystem::path& path);

/// { "levels": { "v": level, ... } }
std::map<VertexId, std::uint64_t> cover_table_from_json(const json& j);

json event_to_json(const StepEvent& e);
/// One compact JSON object per line.
std::string event_log(const std::vector<StepEvent>& events);
std::vector<StepEvent> parse_event_log(const std::string& text);

json separation_to_json(const SeparationResult& r);
json witness_to_json(const WitnessBundle& b);

/// Tree edges solid, other graph edges among the drawn vertices dashed. For a
/// lazy host only the tree vertices are drawn.
std::string tree_dot(const Graph& g, const RootedTree& t);

/// Separator vertices boxed, edges on the disjoint paths drawn bold.
std::string separation_dot(const FiniteGraph& g, const SeparationResult& r);
/// The snapshot tree with the chain, ray prefix, branch vertices and
/// subdivision paths highlighted.
std::string witness_dot(const WitnessBundle& b);

}  // namespace nst::io
