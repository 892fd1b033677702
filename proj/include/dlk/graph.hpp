#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // normalized: first < second

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on non-negative integer labels.
// Vertex and edge lists are kept sorted and unique; no loops.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    static Graph complete(int v);
    static Graph complete_on(std::vector<Vertex> vertices);
    static Graph bipartite(const std::vector<Vertex>& a, const std::vector<Vertex>& b);
    static Graph multipartite(const std::vector<std::vector<Vertex>>& parts);
    static Graph from_edges(const std::vector<Edge>& edges);

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.first, e.second); }

    std::vector<Vertex> neighbors(Vertex v) const;

    // Connected components of the subgraph spanned by edge-bearing vertices.
    std::vector<std::vector<Vertex>> edge_components() const;
    // Connected when restricted to non-isolated vertices (empty graph counts).
    bool is_connected_ignoring_isolated() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
};

// Join: g1 ∪ g2 ∪ all cross edges. Vertex sets must be disjoint.
Graph join_graphs(const Graph& g1, const Graph& g2);
// Union with disjoint edge sets; throws if an edge would repeat.
Graph union_graphs(const std::vector<Graph>& gs);
// Edge-set difference; every edge of `minus` must be present in g.
Graph subtract_edges(const Graph& g, const std::vector<Edge>& minus);
// Induced subgraph after deleting the given vertices.
Graph delete_vertices(const Graph& g, const std::vector<Vertex>& del);

enum class PatternFamily { Path, Star, Cycle, Kite };

// Path(k)/Cycle(k): k vertices. Star(k): k external vertices + a center.
// Kite: triangle with a pendant edge (4 vertices, 4 edges).
struct PatternKind {
    PatternFamily family;
    int k;

    static PatternKind path(int k);
    static PatternKind star(int k);
    static PatternKind cycle(int k);
    static PatternKind kite();

    int vertex_count() const;
    int edge_count() const;
    std::string name() const;

    auto operator<=>(const PatternKind&) const = default;
};

// A labeled copy of a pattern graph in canonical encoding:
//   Path  [v1..vk]        with v1 < vk
//   Star  [c; x0..xk-1]   externals ascending (center stored first)
//   Cycle [v1..vk]        least label first, its smaller neighbor second
//   Kite  [a,b,c,d]       edges {c,a},{c,b},{c,d},{a,b}, with a < b
struct Block {
    PatternKind kind;
    std::vector<Vertex> verts;

    Block(PatternKind kind, std::vector<Vertex> verts);

    std::vector<Edge> edges() const;
    std::string to_string() const;

    auto operator<=>(const Block&) const = default;
};

// Every canonical copy of the pattern inside `host` avoiding `forbidden`,
// sorted, no duplicates.
std::vector<Block> pattern_copies(const Graph& host, PatternKind kind,
                                  const std::vector<Vertex>& forbidden = {});

// True iff every edge of b is an edge of host.
bool contains_block(const Graph& host, const Block& b);

// The graph spanned by a block's own edges.
Graph graph_of(const Block& b);

} // namespace dlk
