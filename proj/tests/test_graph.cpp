#include "dlk/graph.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dlk;

TEST_CASE("edges are normalized and graphs deduplicate") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK_THROWS(Graph({0, 1, 2}, {{1, 2}, {0, 1}, {1, 2}})); // repeated edge
    Graph g({0, 1, 2}, {{1, 2}, {0, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
}

TEST_CASE("graph factories") {
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::complete(0).vertex_count() == 0);
    Graph on = Graph::complete_on({2, 5, 9});
    CHECK(on.edge_count() == 3);
    CHECK(on.has_edge(2, 9));
    CHECK(Graph::bipartite({0, 1, 2}, {3, 4, 5, 6, 7, 8}).edge_count() == 18);
    Graph mp = Graph::multipartite({{0, 1}, {2, 3}, {4}});
    CHECK(mp.edge_count() == 8);
    CHECK(!mp.has_edge(0, 1));
    CHECK(mp.has_edge(0, 4));
    CHECK(Graph::from_edges({{4, 0}, {0, 2}}).vertices() == std::vector<Vertex>{0, 2, 4});
}

TEST_CASE("components and connectivity") {
    Graph g({0, 1, 2, 3, 4, 9}, {{0, 1}, {1, 2}, {3, 4}});
    auto comps = g.edge_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(comps[1] == std::vector<Vertex>{3, 4});
    CHECK(!g.is_connected_ignoring_isolated());
    CHECK(Graph({0, 1, 7}, {{0, 1}}).is_connected_ignoring_isolated());
    CHECK(Graph().is_connected_ignoring_isolated());
}

TEST_CASE("graph surgery") {
    Graph a = Graph::complete_on({0, 1});
    Graph b = Graph::complete_on({2, 3});
    CHECK(join_graphs(a, b) == Graph::complete(4));
    CHECK(union_graphs({a, b}).edge_count() == 2);
    CHECK_THROWS(union_graphs({a, a}));
    Graph k4 = Graph::complete(4);
    CHECK(subtract_edges(k4, {{0, 1}, {2, 3}}).edge_count() == 4);
    CHECK_THROWS(subtract_edges(a, {{0, 2}}));
    Graph del = delete_vertices(k4, {0});
    CHECK(del == Graph::complete_on({1, 2, 3}));
}

TEST_CASE("pattern kinds") {
    CHECK(PatternKind::path(4).vertex_count() == 4);
    CHECK(PatternKind::path(4).edge_count() == 3);
    CHECK(PatternKind::star(5).vertex_count() == 6);
    CHECK(PatternKind::star(5).edge_count() == 5);
    CHECK(PatternKind::cycle(5).edge_count() == 5);
    CHECK(PatternKind::kite().vertex_count() == 4);
    CHECK(PatternKind::kite().edge_count() == 4);
    CHECK(PatternKind::path(3).name() == "P3");
    CHECK_THROWS(PatternKind::path(1));
    CHECK_THROWS(PatternKind::cycle(2));
}

TEST_CASE("block canonicalization") {
    CHECK(Block(PatternKind::path(3), {2, 1, 0}).verts == std::vector<Vertex>{0, 1, 2});
    CHECK(Block(PatternKind::path(4), {3, 0, 2, 1}).verts ==
          std::vector<Vertex>{1, 2, 0, 3});
    CHECK(Block(PatternKind::star(3), {5, 4, 2, 0}).verts ==
          std::vector<Vertex>{5, 0, 2, 4});
    // least label first, then its smaller neighbor
    CHECK(Block(PatternKind::cycle(4), {2, 1, 0, 3}).verts ==
          std::vector<Vertex>{0, 1, 2, 3});
    CHECK(Block(PatternKind::cycle(5), {3, 0, 4, 1, 2}).verts ==
          std::vector<Vertex>{0, 3, 2, 1, 4});
    // kite [a,b,c ⋈ d] keeps a < b
    CHECK(Block(PatternKind::kite(), {4, 1, 2, 7}).verts ==
          std::vector<Vertex>{1, 4, 2, 7});
    CHECK_THROWS(Block(PatternKind::path(3), {0, 1}));       // arity
    CHECK_THROWS(Block(PatternKind::path(3), {0, 1, 0}));    // repeated label
    CHECK_THROWS(Block(PatternKind::path(3), {-1, 1, 2}));   // negative label
}

TEST_CASE("block edges per family") {
    CHECK(Block(PatternKind::path(3), {0, 1, 2}).edges() ==
          std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(Block(PatternKind::star(3), {9, 1, 2, 3}).edges() ==
          std::vector<Edge>{{1, 9}, {2, 9}, {3, 9}});
    CHECK(Block(PatternKind::cycle(3), {0, 1, 2}).edges() ==
          std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    auto ke = Block(PatternKind::kite(), {0, 1, 2, 3}).edges();
    std::sort(ke.begin(), ke.end());
    CHECK(ke == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

TEST_CASE("pattern copy enumeration") {
    Graph k4 = Graph::complete(4);
    CHECK(pattern_copies(k4, PatternKind::cycle(3)).size() == 4);
    CHECK(pattern_copies(k4, PatternKind::cycle(4)).size() == 3);
    CHECK(pattern_copies(k4, PatternKind::path(3)).size() == 12);
    CHECK(pattern_copies(Graph::complete(3), PatternKind::star(2)).size() == 3);
    CHECK(pattern_copies(Graph::complete(5), PatternKind::kite()).size() ==
          5 * 4 * 3); // apex choice x pendant x which triangle pair

    // the five P3's inside one kite
    Block kite(PatternKind::kite(), {0, 1, 2, 3});
    auto p3s = pattern_copies(graph_of(kite), PatternKind::path(3));
    REQUIRE(p3s.size() == 5);
    for (const auto& p : p3s) CHECK(contains_block(graph_of(kite), p));

    // exclusion: only [1,2,3] avoids vertex 0
    auto avoiding = pattern_copies(graph_of(kite), PatternKind::path(3), {0});
    REQUIRE(avoiding.size() == 1);
    for (const auto& p : avoiding)
        CHECK(std::find(p.verts.begin(), p.verts.end(), 0) == p.verts.end());
}

TEST_CASE("contains_block and graph_of") {
    Graph k5 = Graph::complete(5);
    Block c(PatternKind::cycle(4), {0, 1, 2, 3});
    CHECK(contains_block(k5, c));
    CHECK(!contains_block(Graph::bipartite({0, 2}, {1, 3}), Block(PatternKind::path(3), {0, 1, 3})));
    CHECK(graph_of(c).edge_count() == 4);
}
