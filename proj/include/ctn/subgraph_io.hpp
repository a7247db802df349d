#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctn/transposition_graph.hpp"

namespace ctn {

using Json = nlohmann::ordered_json;

/// {"n": 4, "edges": [["1234","2134"], ...]}, edges in EdgeId order, even endpoint first.
Json subgraph_to_json(const TranspositionGraph& g, const SubgraphMask& mask);

/// Degree recorded in a subgraph document; throws std::invalid_argument if absent.
int subgraph_json_degree(const Json& doc);

/// Validates the degree, the permutation strings and the adjacency of every
/// pair; throws std::invalid_argument on the first violation.
SubgraphMask subgraph_from_json(const TranspositionGraph& g, const Json& doc);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "rank,permutation,degree" rows with a header.
std::string degree_csv(const TranspositionGraph& g, const SubgraphMask& mask);

/// One-line strings of the given vertices.
Json vertices_to_json(const TranspositionGraph& g, const std::vector<VertexId>& vertices);

} // namespace ctn
