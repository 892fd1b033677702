#include "dlk/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dlk;

namespace {

int degree_in(const Block& b, Vertex x) {
    int d = 0;
    for (const auto& e : b.edges())
        if (e.first == x || e.second == x) ++d;
    return d;
}

// x has the stated degree in every block containing it
bool uniform_degree(const Design& d, Vertex x, int deg) {
    bool appears = false;
    for (const auto& b : d.blocks) {
        int dx = degree_in(b, x);
        if (dx == 0) continue;
        appears = true;
        if (dx != deg) return false;
    }
    return appears;
}

} // namespace

TEST_CASE("cyclic kite difference families") {
    auto f1 = kite_cyclic_family(1);
    CHECK(f1.group_order == 9);
    REQUIRE(f1.base_blocks.size() == 1);
    CHECK(f1.base_blocks[0] == Block(PatternKind::kite(), {1, 4, 0, 2}));
    CHECK(f1.differences == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
    for (int t : {2, 3, 4}) CHECK_NOTHROW(kite_cyclic_family(t));
    CHECK_THROWS(kite_cyclic_family(0));
}

TEST_CASE("cyclic kite designs verify") {
    for (int t : {1, 2}) {
        Design d = kite_cyclic_design(t);
        CHECK(d.blocks.size() == (std::size_t)(t * (8 * t + 1)));
        CHECK(verify_design(d).ok());
    }
}

TEST_CASE("multipartite kite designs") {
    CHECK(kite_multipartite_family(3).base_blocks.size() == 2);
    Design d3 = kite_multipartite_design(3);
    CHECK(d3.blocks.size() == 48);
    CHECK(d3.host.edge_count() == 192);
    CHECK(verify_design(d3).ok());
    Design d5 = kite_multipartite_design(5);
    CHECK(d5.blocks.size() == 160);
    CHECK(verify_design(d5).ok());
    CHECK_THROWS(kite_multipartite_family(4));
    CHECK_THROWS(kite_multipartite_family(1));
}

TEST_CASE("kite degree-2 designs") {
    for (int v : {9, 17, 25, 33}) {
        Design d = kite_degree2_design(v);
        CHECK(d.blocks.size() == d.host.edge_count() / 4);
        CHECK(verify_design(d).ok());
        CHECK(uniform_degree(d, 0, 2));
    }
    CHECK(kite_degree2_design(9).blocks.size() == 9);
    CHECK(kite_degree2_design(17).blocks.size() == 34);
    CHECK_THROWS(kite_degree2_design(16));
}

TEST_CASE("star designs and profiles") {
    Design s10 = star_design(10, 5);
    CHECK(s10.blocks.size() == 9);
    CHECK(verify_design(s10).ok());
    auto mult = star_center_multiplicities(s10);
    CHECK(std::count(mult.begin(), mult.end(), 0) == 1); // forced non-center

    Design s16 = star_design(16, 5, StarProfile::OneNonCenter);
    CHECK(s16.blocks.size() == 24);
    CHECK(verify_design(s16).ok());
    mult = star_center_multiplicities(s16);
    CHECK(std::count(mult.begin(), mult.end(), 0) == 1);

    Design s8 = star_design(8, 4);
    CHECK(s8.blocks.size() == 7);
    CHECK(verify_design(s8).ok());

    CHECK_THROWS(star_design(12, 4)); // 132 not divisible by 8
    CHECK_THROWS(star_design(9, 5));  // v < 2k
}

TEST_CASE("recentering removes the non-center vertex") {
    Design d = star_design(16, 5, StarProfile::OneNonCenter);
    Design r = recenter_star_design(d);
    CHECK(verify_design(r).ok());
    auto mult = star_center_multiplicities(r);
    CHECK(std::count(mult.begin(), mult.end(), 0) == 0);
    CHECK(recenter_star_design(r) == r); // already all-centers
}

TEST_CASE("steiner triple systems") {
    for (auto [v, blocks] : std::vector<std::pair<int, int>>{{7, 7}, {9, 12}, {13, 26}, {15, 35}}) {
        Design d = steiner_triple_system(v);
        CHECK((int)d.blocks.size() == blocks);
        CHECK(verify_design(d).ok());
    }
    CHECK_THROWS(steiner_triple_system(8));
}

TEST_CASE("p4 pendant designs") {
    for (int v : {6, 9, 10, 13, 18, 21, 22, 25}) {
        Design d = p4_pendant_design(v);
        CHECK(d.blocks.size() == d.host.edge_count() / 3);
        CHECK(verify_design(d).ok());
        CHECK(uniform_degree(d, 0, 1));
    }
    CHECK(p4_pendant_design(21).blocks.size() == 70);
    CHECK_THROWS(p4_pendant_design(12));
}

TEST_CASE("p4 pendant certificates glue cleanly") {
    for (int v : {18, 22, 25}) {
        auto c = p4_pendant_certificate(v);
        CHECK(verify_downlink(c).ok());
        CHECK((int)c.target.host.vertex_count() == v - 1);
    }
}

TEST_CASE("p4 saturation") {
    for (int v : {6, 9, 10, 13}) {
        Design d = p4_saturate_design(p4_pendant_design(v));
        CHECK(verify_design(d).ok());
        for (Vertex x : d.host.vertices()) {
            bool deg2_somewhere = false;
            for (const auto& b : d.blocks)
                if (degree_in(b, x) == 2) deg2_somewhere = true;
            CHECK(deg2_somewhere);
        }
        CHECK(p4_saturate_design(d) == d); // already saturated
    }
}

TEST_CASE("fixtures") {
    for (const auto& name : fixture_names()) {
        Fixture f = fixture_designs(name);
        if (std::holds_alternative<Design>(f))
            CHECK(verify_design(std::get<Design>(f)).ok());
        else
            CHECK(verify_downlink(std::get<DownLinkCertificate>(f)).ok());
    }
    CHECK_THROWS(fixture_designs("no-such-fixture"));

    auto c5 = std::get<Design>(fixture_designs("c5-k11-cyclic"));
    CHECK(c5.blocks.size() == 11);
    auto k12 = std::get<DownLinkCertificate>(fixture_designs("k12-p4-metamorphosis"));
    CHECK(k12.source.blocks.size() == 22);
    CHECK(k12.target.blocks.size() == 33);
}
