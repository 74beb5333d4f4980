#pragma once

#include "sft/graph.hpp"
#include "sft/resolving.hpp"
#include "sft/shift_space.hpp"

#include <string>

namespace sft {

/// {"vertices":["1","2"],"edges":[{"id":"a","from":"1","to":"1"},...]}
Graph parse_graph_json(const std::string& text);
Graph load_graph_json(const std::string& path);
std::string graph_to_json(const Graph& g);

/// {"left_cycle":["a"],"core":[],"right_cycle":["a"],"core_start":0}
ShiftPoint parse_point_json(const Graph& g, const std::string& text);
ShiftPoint load_point_json(const Graph& g, const std::string& path);
std::string point_to_json(const Graph& g, const ShiftPoint& z);

/// {"domain":"g1.json","codomain":"g2.json","edge_map":{"(a,a)":"a",...}}
/// Graph paths are resolved relative to the code file's directory.
OneBlockCode load_code_json(const std::string& path);

} // namespace sft
