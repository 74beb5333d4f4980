#include "sft/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sft {

VertexIndex Graph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw validation_error("unknown vertex id: " + id);
    return it->second;
}

EdgeIndex Graph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) throw validation_error("unknown edge id: " + id);
    return it->second;
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

bool Graph::is_path(std::span<const EdgeIndex> word) const {
    for (std::size_t t = 0; t + 1 < word.size(); ++t)
        if (edges_[word[t]].to != edges_[word[t + 1]].from) return false;
    return true;
}

std::string Graph::word_string(std::span<const EdgeIndex> word, char sep) const {
    std::string out;
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) out += sep;
        out += edges_[word[t]].id;
    }
    return out;
}

std::vector<EdgeIndex> Graph::word_from_ids(const std::vector<std::string>& ids) const {
    std::vector<EdgeIndex> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(edge_index(id));
    return out;
}

Graph make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    if (vertices.empty()) throw validation_error("graph has no vertices");

    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw validation_error("duplicate vertex id: " + vertices[i]);
    g.vertex_ids_ = std::move(vertices);
    for (int i = 0; i < g.vertex_count(); ++i) g.vertex_lookup_[g.vertex_ids_[i]] = i;

    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i].id == edges[i + 1].id)
            throw validation_error("duplicate edge id: " + edges[i].id);

    g.out_.resize(g.vertex_count());
    g.in_.resize(g.vertex_count());
    for (const auto& spec : edges) {
        auto from = g.find_vertex(spec.from);
        auto to = g.find_vertex(spec.to);
        if (!from || !to)
            throw validation_error("edge " + spec.id + " references unknown vertex");
        const EdgeIndex e = static_cast<EdgeIndex>(g.edges_.size());
        g.edges_.push_back(Edge{spec.id, *from, *to});
        g.edge_lookup_[spec.id] = e;
        g.out_[*from].push_back(e);
        g.in_[*to].push_back(e);
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.out_[v].empty())
            throw validation_error("vertex " + g.vertex_ids_[v] + " has out-degree 0");
        if (g.in_[v].empty())
            throw validation_error("vertex " + g.vertex_ids_[v] + " has in-degree 0");
    }
    return g;
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) a.at(g.source(e), g.target(e)) += 1;
    return a;
}

IntMatrix adjacency_power(const Graph& g, std::int64_t n) {
    if (n < 0) throw validation_error("adjacency_power: negative exponent");
    return adjacency_matrix(g).pow(n);
}

namespace {

// BFS reachability along out- or in-edges.
int reachable_count(const Graph& g, VertexIndex start, bool forward) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexIndex> q;
    q.push(start);
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        const VertexIndex v = q.front();
        q.pop();
        const auto& edges = forward ? g.out_edges(v) : g.in_edges(v);
        for (EdgeIndex e : edges) {
            const VertexIndex w = forward ? g.target(e) : g.source(e);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count;
}

} // namespace

SpectralDecomposition structure_analysis(const Graph& g) {
    SpectralDecomposition d;
    const int n = g.vertex_count();
    d.irreducible =
        reachable_count(g, 0, true) == n && reachable_count(g, 0, false) == n;
    if (!d.irreducible) return d;

    // BFS layering from the canonical root; the period is the gcd of
    // (level(u) + 1 - level(v)) over all edges u -> v.
    std::vector<std::int64_t> level(n, -1);
    std::queue<VertexIndex> q;
    q.push(0);
    level[0] = 0;
    while (!q.empty()) {
        const VertexIndex v = q.front();
        q.pop();
        for (EdgeIndex e : g.out_edges(v)) {
            const VertexIndex w = g.target(e);
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            }
        }
    }
    std::int64_t period = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        period = std::gcd(period, level[g.source(e)] + 1 - level[g.target(e)]);
    d.period = static_cast<int>(period);

    d.class_of.resize(n);
    d.cyclic_classes.assign(d.period, {});
    for (int v = 0; v < n; ++v) {
        const int c = static_cast<int>(((level[v] % d.period) + d.period) % d.period);
        d.class_of[v] = c;
        d.cyclic_classes[c].push_back(v);
    }
    return d;
}

Graph power_recode(const Graph& g, int period, int class_index) {
    const SpectralDecomposition d = structure_analysis(g);
    if (!d.irreducible) throw validation_error("power_recode: graph is not irreducible");
    if (d.period != period)
        throw validation_error("power_recode: period mismatch (graph has period " +
                               std::to_string(d.period) + ")");
    if (class_index < 0 || class_index >= period)
        throw validation_error("power_recode: class index out of range");

    std::vector<std::string> vertices;
    for (VertexIndex v : d.cyclic_classes[class_index]) vertices.push_back(g.vertex_id(v));

    std::vector<EdgeSpec> specs;
    std::vector<EdgeIndex> path;
    auto emit = [&](VertexIndex start) {
        std::string id;
        for (std::size_t t = 0; t < path.size(); ++t) {
            if (t) id += '.';
            id += g.edge(path[t]).id;
        }
        specs.push_back(EdgeSpec{std::move(id), g.vertex_id(start),
                                 g.vertex_id(g.target(path.back()))});
    };
    auto dfs = [&](auto&& self, VertexIndex start, VertexIndex v, int depth) -> void {
        if (depth == period) {
            emit(start);
            return;
        }
        for (EdgeIndex e : g.out_edges(v)) {
            path.push_back(e);
            self(self, start, g.target(e), depth + 1);
            path.pop_back();
        }
    };
    for (VertexIndex v : d.cyclic_classes[class_index]) dfs(dfs, v, v, 0);
    return make_graph(std::move(vertices), std::move(specs));
}

Graph higher_block_graph(const Graph& g) {
    std::vector<std::string> vertices;
    for (int e = 0; e < g.edge_count(); ++e) vertices.push_back(g.edge(e).id);
    std::vector<EdgeSpec> specs;
    for (int e = 0; e < g.edge_count(); ++e)
        for (EdgeIndex f : g.out_edges(g.target(e)))
            specs.push_back(EdgeSpec{"(" + g.edge(e).id + "," + g.edge(f).id + ")",
                                     g.edge(e).id, g.edge(f).id});
    return make_graph(std::move(vertices), std::move(specs));
}

} // namespace sft
