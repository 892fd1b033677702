#include "dlk/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace dlk {

namespace {

void sort_unique(std::vector<Vertex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    sort_unique(verts_);
    for (auto& e : edges_) {
        if (e.first == e.second)
            throw std::invalid_argument("Graph: loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: repeated edge");
    for (const auto& e : edges_) {
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw std::invalid_argument("Graph: edge endpoint outside vertex set");
    }
}

Graph Graph::complete(int v) {
    if (v < 0) throw std::invalid_argument("complete: negative order");
    std::vector<Vertex> verts(v);
    for (int i = 0; i < v; ++i) verts[i] = i;
    return complete_on(std::move(verts));
}

Graph Graph::complete_on(std::vector<Vertex> vertices) {
    sort_unique(vertices);
    std::vector<Edge> edges;
    edges.reserve(vertices.size() * (vertices.size() ? vertices.size() - 1 : 0) / 2);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            edges.emplace_back(vertices[i], vertices[j]);
    Graph g;
    g.verts_ = std::move(vertices);
    g.edges_ = std::move(edges);
    return g;
}

Graph Graph::bipartite(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return multipartite({a, b});
}

Graph Graph::multipartite(const std::vector<std::vector<Vertex>>& parts) {
    std::vector<Vertex> verts;
    for (const auto& p : parts) verts.insert(verts.end(), p.begin(), p.end());
    std::size_t total = verts.size();
    sort_unique(verts);
    if (verts.size() != total)
        throw std::invalid_argument("multipartite: overlapping parts");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (Vertex u : parts[i])
                for (Vertex w : parts[j]) edges.push_back(make_edge(u, w));
    return Graph(std::move(verts), std::move(edges));
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    std::vector<Vertex> verts;
    for (const auto& e : edges) {
        verts.push_back(e.first);
        verts.push_back(e.second);
    }
    return Graph(std::move(verts), edges);
}

bool Graph::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Vertex>> Graph::edge_components() const {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : edges_) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::set<Vertex> seen;
    std::vector<std::vector<Vertex>> comps;
    for (const auto& [start, _] : adj) {
        if (seen.count(start)) continue;
        std::vector<Vertex> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected_ignoring_isolated() const {
    return edge_components().size() <= 1;
}

Graph join_graphs(const Graph& g1, const Graph& g2) {
    std::vector<Vertex> common;
    std::set_intersection(g1.vertices().begin(), g1.vertices().end(),
                          g2.vertices().begin(), g2.vertices().end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("join_graphs: vertex sets overlap");
    std::vector<Vertex> verts(g1.vertices());
    verts.insert(verts.end(), g2.vertices().begin(), g2.vertices().end());
    std::vector<Edge> edges(g1.edges());
    edges.insert(edges.end(), g2.edges().begin(), g2.edges().end());
    for (Vertex u : g1.vertices())
        for (Vertex w : g2.vertices()) edges.push_back(make_edge(u, w));
    return Graph(std::move(verts), std::move(edges));
}

Graph union_graphs(const std::vector<Graph>& gs) {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    for (const auto& g : gs) {
        verts.insert(verts.end(), g.vertices().begin(), g.vertices().end());
        edges.insert(edges.end(), g.edges().begin(), g.edges().end());
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("union_graphs: repeated edge across operands");
    return Graph(std::move(verts), std::move(edges));
}

Graph subtract_edges(const Graph& g, const std::vector<Edge>& minus) {
    std::vector<Edge> m;
    m.reserve(minus.size());
    for (const auto& e : minus) m.push_back(make_edge(e.first, e.second));
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
        throw std::invalid_argument("subtract_edges: repeated edge in subtrahend");
    std::vector<Edge> rest;
    std::set_difference(g.edges().begin(), g.edges().end(), m.begin(), m.end(),
                        std::back_inserter(rest));
    if (rest.size() != g.edge_count() - m.size())
        throw std::invalid_argument("subtract_edges: edge not present in graph");
    return Graph(g.vertices(), std::move(rest));
}

Graph delete_vertices(const Graph& g, const std::vector<Vertex>& del) {
    std::set<Vertex> d(del.begin(), del.end());
    std::vector<Vertex> verts;
    for (Vertex v : g.vertices())
        if (!d.count(v)) verts.push_back(v);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!d.count(e.first) && !d.count(e.second)) edges.push_back(e);
    return Graph(std::move(verts), std::move(edges));
}

PatternKind PatternKind::path(int k) {
    if (k < 2) throw std::invalid_argument("Path(k): k >= 2 required");
    return {PatternFamily::Path, k};
}

PatternKind PatternKind::star(int k) {
    if (k < 1) throw std::invalid_argument("Star(k): k >= 1 required");
    return {PatternFamily::Star, k};
}

PatternKind PatternKind::cycle(int k) {
    if (k < 3) throw std::invalid_argument("Cycle(k): k >= 3 required");
    return {PatternFamily::Cycle, k};
}

PatternKind PatternKind::kite() { return {PatternFamily::Kite, 4}; }

int PatternKind::vertex_count() const {
    switch (family) {
        case PatternFamily::Path: return k;
        case PatternFamily::Star: return k + 1;
        case PatternFamily::Cycle: return k;
        case PatternFamily::Kite: return 4;
    }
    return 0;
}

int PatternKind::edge_count() const {
    switch (family) {
        case PatternFamily::Path: return k - 1;
        case PatternFamily::Star: return k;
        case PatternFamily::Cycle: return k;
        case PatternFamily::Kite: return 4;
    }
    return 0;
}

std::string PatternKind::name() const {
    switch (family) {
        case PatternFamily::Path: return "P" + std::to_string(k);
        case PatternFamily::Star: return "S" + std::to_string(k);
        case PatternFamily::Cycle: return "C" + std::to_string(k);
        case PatternFamily::Kite: return "kite";
    }
    return "?";
}

namespace {

std::vector<Vertex> canonicalize(PatternKind kind, std::vector<Vertex> v) {
    if ((int)v.size() != kind.vertex_count())
        throw std::invalid_argument("Block: wrong vertex count for " + kind.name());
    {
        std::vector<Vertex> s(v);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("Block: repeated vertex label");
        if (s.front() < 0)
            throw std::invalid_argument("Block: negative vertex label");
    }
    switch (kind.family) {
        case PatternFamily::Path:
            if (v.front() > v.back()) std::reverse(v.begin(), v.end());
            break;
        case PatternFamily::Star:
            std::sort(v.begin() + 1, v.end());
            break;
        case PatternFamily::Cycle: {
            int n = (int)v.size();
            auto least = std::min_element(v.begin(), v.end());
            std::rotate(v.begin(), least, v.end());
            if (v[1] > v[n - 1]) {
                std::reverse(v.begin() + 1, v.end());
            }
            break;
        }
        case PatternFamily::Kite:
            if (v[0] > v[1]) std::swap(v[0], v[1]);
            break;
    }
    return v;
}

} // namespace

Block::Block(PatternKind kind_, std::vector<Vertex> verts_)
    : kind(kind_), verts(canonicalize(kind_, std::move(verts_))) {}

std::vector<Edge> Block::edges() const {
    std::vector<Edge> out;
    switch (kind.family) {
        case PatternFamily::Path:
            for (std::size_t i = 0; i + 1 < verts.size(); ++i)
                out.push_back(make_edge(verts[i], verts[i + 1]));
            break;
        case PatternFamily::Star:
            for (std::size_t i = 1; i < verts.size(); ++i)
                out.push_back(make_edge(verts[0], verts[i]));
            break;
        case PatternFamily::Cycle:
            for (std::size_t i = 0; i < verts.size(); ++i)
                out.push_back(make_edge(verts[i], verts[(i + 1) % verts.size()]));
            break;
        case PatternFamily::Kite:
            out.push_back(make_edge(verts[2], verts[0]));
            out.push_back(make_edge(verts[2], verts[1]));
            out.push_back(make_edge(verts[2], verts[3]));
            out.push_back(make_edge(verts[0], verts[1]));
            break;
    }
    return out;
}

std::string Block::to_string() const {
    std::string s = kind.name() + "[";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(verts[i]);
    }
    return s + "]";
}

bool contains_block(const Graph& host, const Block& b) {
    for (const auto& e : b.edges())
        if (!host.has_edge(e)) return false;
    return true;
}

Graph graph_of(const Block& b) {
    return Graph(b.verts, b.edges());
}

namespace {

struct CopyEnumerator {
    const Graph& host;
    std::set<Vertex> forbidden;
    std::map<Vertex, std::vector<Vertex>> adj;
    std::set<Block> out;

    CopyEnumerator(const Graph& h, const std::vector<Vertex>& forb) : host(h) {
        forbidden.insert(forb.begin(), forb.end());
        for (const auto& e : h.edges()) {
            if (forbidden.count(e.first) || forbidden.count(e.second)) continue;
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        for (auto& [_, ns] : adj) std::sort(ns.begin(), ns.end());
    }

    void paths(int k) {
        std::vector<Vertex> cur;
        std::set<Vertex> used;
        std::function<void()> rec = [&] {
            if ((int)cur.size() == k) {
                if (cur.front() < cur.back())
                    out.emplace(PatternKind::path(k), cur);
                return;
            }
            for (Vertex w : adj[cur.back()]) {
                if (used.count(w)) continue;
                used.insert(w);
                cur.push_back(w);
                rec();
                cur.pop_back();
                used.erase(w);
            }
        };
        for (const auto& [v, _] : adj) {
            cur = {v};
            used = {v};
            rec();
        }
    }

    void cycles(int k) {
        std::vector<Vertex> cur;
        std::set<Vertex> used;
        std::function<void()> rec = [&] {
            if ((int)cur.size() == k) {
                if (host.has_edge(cur.back(), cur.front()))
                    out.emplace(PatternKind::cycle(k), cur);
                return;
            }
            for (Vertex w : adj[cur.back()]) {
                if (used.count(w)) continue;
                if (w < cur.front()) continue; // least label first
                used.insert(w);
                cur.push_back(w);
                rec();
                cur.pop_back();
                used.erase(w);
            }
        };
        for (const auto& [v, _] : adj) {
            cur = {v};
            used = {v};
            rec();
        }
    }

    void stars(int k) {
        for (const auto& [c, ns] : adj) {
            if ((int)ns.size() < k) continue;
            std::vector<Vertex> pick;
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if ((int)pick.size() == k) {
                    std::vector<Vertex> v{c};
                    v.insert(v.end(), pick.begin(), pick.end());
                    out.emplace(PatternKind::star(k), v);
                    return;
                }
                if (i >= ns.size()) return;
                pick.push_back(ns[i]);
                rec(i + 1);
                pick.pop_back();
                if (ns.size() - i - 1 >= k - pick.size()) rec(i + 1);
            };
            rec(0);
        }
    }

    void kites() {
        for (const auto& [c, ns] : adj) {
            for (std::size_t i = 0; i < ns.size(); ++i)
                for (std::size_t j = i + 1; j < ns.size(); ++j) {
                    Vertex a = ns[i], b = ns[j];
                    if (!host.has_edge(a, b)) continue;
                    for (Vertex d : ns) {
                        if (d == a || d == b) continue;
                        out.emplace(PatternKind::kite(),
                                    std::vector<Vertex>{a, b, c, d});
                    }
                }
        }
    }
};

} // namespace

std::vector<Block> pattern_copies(const Graph& host, PatternKind kind,
                                  const std::vector<Vertex>& forbidden) {
    CopyEnumerator en(host, forbidden);
    switch (kind.family) {
        case PatternFamily::Path: en.paths(kind.k); break;
        case PatternFamily::Cycle: en.cycles(kind.k); break;
        case PatternFamily::Star: en.stars(kind.k); break;
        case PatternFamily::Kite: en.kites(); break;
    }
    return std::vector<Block>(en.out.begin(), en.out.end());
}

} // namespace dlk
