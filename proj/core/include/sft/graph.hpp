#pragma once

#include "sft/errors.hpp"
#include "sft/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace sft {

using VertexIndex = int;
using EdgeIndex = int;

struct Edge {
    std::string id;
    VertexIndex from = -1;
    VertexIndex to = -1;
};

/// Raw edge description prior to validation.
struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
};

/// Directed multigraph with labeled edges. Vertices and edges are held in
/// lexicographic id order and all matrices are indexed by that order. Every
/// vertex must have in-degree >= 1 and out-degree >= 1, so the edge shift is
/// nonempty and shift-invariant.
class Graph {
public:
    int vertex_count() const noexcept { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
    const Edge& edge(EdgeIndex e) const { return edges_[e]; }

    VertexIndex vertex_index(const std::string& id) const;
    EdgeIndex edge_index(const std::string& id) const;
    std::optional<VertexIndex> find_vertex(const std::string& id) const;
    std::optional<EdgeIndex> find_edge(const std::string& id) const;

    const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_[v]; }
    const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_[v]; }

    VertexIndex source(EdgeIndex e) const { return edges_[e].from; }
    VertexIndex target(EdgeIndex e) const { return edges_[e].to; }

    bool is_path(std::span<const EdgeIndex> word) const;

    /// Edge-id rendering of a word joined by `sep`.
    std::string word_string(std::span<const EdgeIndex> word, char sep = ',') const;

    std::vector<EdgeIndex> word_from_ids(const std::vector<std::string>& ids) const;

    friend Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::vector<std::vector<EdgeIndex>> in_;
};

/// Validates and builds a graph; rejects duplicate ids, dangling endpoints
/// and vertices of zero in- or out-degree (sinks/sources).
Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

IntMatrix adjacency_matrix(const Graph& g);

/// Entry (i,j) is the exact number of length-n edge paths from vertex i to
/// vertex j.
IntMatrix adjacency_power(const Graph& g, std::int64_t n);

/// Irreducibility, period and cyclic classes. For a reducible graph only
/// `irreducible` is meaningful (period 0, no classes).
struct SpectralDecomposition {
    bool irreducible = false;
    int period = 0;
    std::vector<std::vector<VertexIndex>> cyclic_classes;
    std::vector<int> class_of;
};

SpectralDecomposition structure_analysis(const Graph& g);

/// Graph of length-I paths that start (hence end) in cyclic class
/// `class_index`; its edge shift realizes that component of the I-th power
/// system, and is mixing. Recoded edge ids join the constituent edge ids
/// with '.'.
Graph power_recode(const Graph& g, int period, int class_index);

/// Standard 2-block presentation: one vertex per edge of g, one edge "(e,f)"
/// per length-2 path ef.
Graph higher_block_graph(const Graph& g);

} // namespace sft
