#include "dlk/p3.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlk {

P3Partition p3_partition(const Graph& g) {
    P3Partition result;
    if (g.edge_count() == 0) return result;

    // compact indices over edge-bearing vertices
    std::vector<Vertex> verts;
    for (const auto& e : g.edges()) {
        verts.push_back(e.first);
        verts.push_back(e.second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto idx = [&](Vertex v) {
        return (int)(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    int n = (int)verts.size();

    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        int a = idx(e.first), b = idx(e.second);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& ns : adj) std::sort(ns.begin(), ns.end());

    // BFS spanning tree from the smallest label
    std::vector<int> parent(n, -1), depth(n, -1), order;
    order.reserve(n);
    depth[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int w : adj[u]) {
            if (depth[w] < 0) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                order.push_back(w);
            }
        }
    }
    if ((int)order.size() != n)
        throw std::invalid_argument(
            "p3_partition: graph has more than one edge-bearing component");

    // Assign each non-tree edge to its deeper endpoint (ties: larger label).
    std::vector<std::vector<int>> bucket(n);
    for (const auto& e : g.edges()) {
        int a = idx(e.first), b = idx(e.second);
        if (parent[a] == b || parent[b] == a) continue; // tree edge
        int owner;
        if (depth[a] != depth[b]) owner = depth[a] > depth[b] ? a : b;
        else owner = std::max(a, b); // labels sorted, so index order = label order
        bucket[owner].push_back(owner == a ? b : a);
    }

    const PatternKind p3 = PatternKind::path(3);
    // reverse BFS order: children before parents
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        auto& es = bucket[u];
        std::sort(es.begin(), es.end());
        std::size_t i = 0;
        for (; i + 1 < es.size(); i += 2)
            result.paths.emplace_back(
                p3, std::vector<Vertex>{verts[es[i]], verts[u], verts[es[i + 1]]});
        if (i < es.size()) {
            if (parent[u] >= 0) {
                // consume the tree edge to the parent
                result.paths.emplace_back(
                    p3, std::vector<Vertex>{verts[es[i]], verts[u], verts[parent[u]]});
            } else {
                result.leftover = make_edge(verts[u], verts[es[i]]);
            }
        } else if (parent[u] >= 0) {
            // tree edge unconsumed; pass it up
            bucket[parent[u]].push_back(u);
        }
    }
    return result;
}

std::vector<Block> P3ComponentsReport::all_paths() const {
    std::vector<Block> out;
    for (const auto& c : components)
        out.insert(out.end(), c.partition.paths.begin(), c.partition.paths.end());
    return out;
}

P3ComponentsReport p3_partition_components(const Graph& g) {
    P3ComponentsReport report;
    report.exact = true;
    for (const auto& comp : g.edge_components()) {
        std::vector<Edge> ce;
        std::vector<Vertex> cv(comp.begin(), comp.end());
        for (const auto& e : g.edges())
            if (std::binary_search(cv.begin(), cv.end(), e.first) &&
                std::binary_search(cv.begin(), cv.end(), e.second))
                ce.push_back(e);
        ComponentP3Report cr;
        cr.component = cv;
        cr.even = ce.size() % 2 == 0;
        cr.partition = p3_partition(Graph(cv, ce));
        if (!cr.even) report.exact = false;
        report.components.push_back(std::move(cr));
    }
    return report;
}

} // namespace dlk
