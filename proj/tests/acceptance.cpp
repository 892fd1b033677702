// Acceptance gate: one criterion per number, one pass/fail line each.
// Run as `dlk_acceptance N` (criterion N) or with no argument (all).

#include "dlk/downlinks.hpp"
#include "dlk/generators.hpp"
#include "dlk/io.hpp"
#include "dlk/oracle.hpp"
#include "dlk/p3.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dlk;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "  FAIL: " << what << "\n";
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: P3-partition over an exhaustive connected corpus --------

bool valid_partition(const Graph& g, const P3Partition& p) {
    std::map<Edge, int> cover;
    for (const auto& b : p.paths) {
        auto es = b.edges();
        if (es.size() != 2) return false;
        for (const auto& e : es) {
            if (!g.has_edge(e)) return false;
            if (++cover[e] > 1) return false;
        }
    }
    if (p.leftover && ++cover[*p.leftover] > 1) return false;
    if (cover.size() != g.edge_count()) return false;
    return p.leftover.has_value() == (g.edge_count() % 2 == 1);
}

bool criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    long long checked = 0;
    std::vector<Vertex> verts;
    std::vector<Edge> all_edges, edges;

    for (int n = 2; n <= 7; ++n) {
        verts.resize(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        all_edges.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_edges.push_back({i, j});
        int m = (int)all_edges.size();
        for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
            // connectivity over all n vertices via union-find
            int parent[8];
            for (int i = 0; i < n; ++i) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int comps = n;
            edges.clear();
            for (int b = 0; b < m; ++b)
                if (mask >> b & 1) {
                    edges.push_back(all_edges[b]);
                    int ra = find(all_edges[b].first), rb = find(all_edges[b].second);
                    if (ra != rb) {
                        parent[ra] = rb;
                        --comps;
                    }
                }
            if (comps != 1) continue;
            Graph g(verts, edges);
            if (!valid_partition(g, p3_partition(g))) {
                expect(false, "partition invalid on a graph with n=" + std::to_string(n));
                return false;
            }
            ++checked;
        }
    }

    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 8 + (int)(rng() % 9); // 8..16
        std::vector<Edge> es;
        for (int i = 1; i < n; ++i) es.push_back(make_edge(i, (int)(rng() % i)));
        for (int t = (int)(rng() % (3 * n)); t > 0; --t) {
            Edge e = make_edge((int)(rng() % n), (int)(rng() % n));
            if (e.first != e.second &&
                std::find(es.begin(), es.end(), e) == es.end())
                es.push_back(e);
        }
        std::vector<Vertex> vs(n);
        for (int i = 0; i < n; ++i) vs[i] = i;
        Graph g(vs, es);
        if (!valid_partition(g, p3_partition(g))) {
            expect(false, "partition invalid on random graph");
            return false;
        }
        ++checked;
    }

    double dt = seconds_since(t0);
    expect(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
    std::cout << "  " << checked << " connected graphs checked in " << dt << "s\n";
    return failures == 0;
}

// ---- criterion 2: P3-design spectrum for n <= 13 --------------------------

bool criterion2() {
    for (int n = 0; n <= 13; ++n) {
        bool admissible = n % 4 == 0 || n % 4 == 1;
        auto r = search_decomposition(Graph::complete(n), PatternKind::path(3));
        expect(r.verdict != SearchVerdict::Unknown, "oracle ran out of budget");
        expect((r.verdict == SearchVerdict::Found) == admissible,
               "oracle existence mismatch at n=" + std::to_string(n));
        if (admissible && n >= 4) {
            // constructive witness: an S2-design re-read as P3 blocks
            Design s = star_design(n, 2);
            Design d{s.host, PatternKind::path(3), {}};
            for (const auto& b : s.blocks)
                d.blocks.emplace_back(d.pattern, std::vector<Vertex>{b.verts[1],
                                                                     b.verts[0],
                                                                     b.verts[2]});
            expect(verify_design(d).ok(), "construction invalid at n=" + std::to_string(n));
        }
    }
    return failures == 0;
}

// ---- criterion 3: kite family ---------------------------------------------

bool criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    for (int t = 1; t <= 4; ++t) {
        int v = 8 * t + 1;
        Design cyc = kite_cyclic_design(t);
        expect((int)cyc.blocks.size() == t * v, "cyclic block count, t=" + std::to_string(t));
        expect(verify_design(cyc).ok(), "cyclic design invalid, t=" + std::to_string(t));

        Design deg2 = kite_degree2_design(v);
        expect(verify_design(deg2).ok(), "degree2 design invalid, v=" + std::to_string(v));
        bool audit = true;
        for (const auto& b : deg2.blocks) {
            int dx = 0;
            for (const auto& e : b.edges())
                if (e.first == 0 || e.second == 0) ++dx;
            if (dx != 0 && dx != 2) audit = false;
        }
        expect(audit, "degree-2 audit failed, v=" + std::to_string(v));

        DownLinkCertificate c = downlink_kite(deg2, true);
        expect(verify_downlink(c).ok(), "minimal certificate invalid, v=" + std::to_string(v));
        expect(target_order(c) == v - 1,
               "minimal target order != v-1 at v=" + std::to_string(v));
    }
    for (int m : {3, 5})
        expect(verify_design(kite_multipartite_design(m)).ok(),
               "multipartite design invalid, m=" + std::to_string(m));
    double dt = seconds_since(t0);
    expect(dt < 30.0, "runtime exceeds 30s");
    std::cout << "  kite family done in " << dt << "s\n";
    return failures == 0;
}

// ---- criterion 4: star family ---------------------------------------------

bool criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    struct Case { int v, k, target; };
    for (auto [v, k, target] : {Case{10, 5, 9}, Case{16, 5, 16}, Case{8, 4, 8}}) {
        Design d = star_design(v, k);
        expect(verify_design(d).ok(),
               "design invalid, (v,k)=(" + std::to_string(v) + "," + std::to_string(k) + ")");
        DownLinkCertificate c = downlink_star(d);
        expect(verify_downlink(c).ok(), "certificate invalid, v=" + std::to_string(v));
        expect(target_order(c) == target,
               "target order " + std::to_string(target_order(c)) + " != " +
                   std::to_string(target) + " at v=" + std::to_string(v));
    }

    // (12,4): 12·11 = 132 edges is not a multiple of 2k = 8, so no
    // (K_12,S_4)-design exists; the generator reports this and the oracle
    // confirms. The subcase target cannot be met by any implementation.
    bool reported = false;
    try {
        star_design(12, 4);
    } catch (const std::invalid_argument&) {
        reported = true;
    }
    expect(reported, "(12,4) inadmissibility not reported");
    auto r = search_decomposition(Graph::complete(12), PatternKind::star(4));
    expect(r.verdict == SearchVerdict::None, "(12,4) oracle disagrees");
    expect(false,
           "(12,4) subcase unattainable: no (K_12,S_4)-design exists "
           "(66 edges, 66 % 4 != 0), so its down-link cannot be produced");

    Design d = star_design(16, 5, StarProfile::OneNonCenter);
    Design rec = recenter_star_design(d);
    expect(verify_design(rec).ok(), "recentered design invalid");
    auto mult = star_center_multiplicities(rec);
    expect(std::count(mult.begin(), mult.end(), 0) == 0,
           "recentering left a non-center vertex");

    double dt = seconds_since(t0);
    expect(dt < 30.0, "runtime exceeds 30s");
    return failures == 0;
}

// ---- criterion 5: cycle family --------------------------------------------

bool criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    auto c9 = downlink_cycle(steiner_triple_system(9));
    expect(verify_downlink(c9).ok() && target_order(c9) == 9, "STS(9) -> 9");
    auto c7 = downlink_cycle(steiner_triple_system(7));
    expect(verify_downlink(c7).ok() && target_order(c7) == 8, "STS(7) -> 8");

    auto c4 = search_decomposition(Graph::complete(9), PatternKind::cycle(4));
    expect(c4.verdict == SearchVerdict::Found, "no (K_9,C4)-design found");
    if (c4.design) {
        auto cc = downlink_cycle(*c4.design);
        expect(verify_downlink(cc).ok() && target_order(cc) == 8, "(K_9,C4) -> 8");
    }

    auto fix = fixture_designs("c5-k11-downlink");
    const auto& cert = std::get<DownLinkCertificate>(fix);
    expect(verify_downlink(cert).ok() && target_order(cert) == 9,
           "C5 fixture certificate invalid");
    std::string shipped =
        read_file(std::string(DLK_SOURCE_DIR) + "/fixtures/c5-k11-downlink.json");
    expect(shipped == encode_certificate(cert), "C5 fixture file not bit-exact");

    auto generic = downlink_cycle(std::get<Design>(fixture_designs("c5-k11-cyclic")));
    expect(verify_downlink(generic).ok() && target_order(generic) == 12,
           "generic C5 route should reach order 12");

    double dt = seconds_since(t0);
    expect(dt < 120.0, "runtime exceeds 2min");
    std::cout << "  cycle family done in " << dt << "s\n";
    return failures == 0;
}

// ---- criterion 6: path family ---------------------------------------------

bool criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    for (int v : {6, 9, 10, 13, 18, 21, 22, 25}) {
        Design d = p4_pendant_design(v);
        expect(verify_design(d).ok(), "pendant design invalid, v=" + std::to_string(v));
        bool audit = true;
        for (const auto& b : d.blocks) {
            int dx = 0;
            for (const auto& e : b.edges())
                if (e.first == 0 || e.second == 0) ++dx;
            if (dx > 1) audit = false;
        }
        expect(audit, "pendant audit failed, v=" + std::to_string(v));
        auto c = downlink_path(d);
        expect(verify_downlink(c).ok(), "certificate invalid, v=" + std::to_string(v));
        expect(target_order(c) == v - 1, "target != v-1 at v=" + std::to_string(v));
    }
    for (const char* name : {"p4-base-6", "p4-base-9", "p4-base-10", "p4-base-13",
                             "k12-p4-metamorphosis", "k36-p4-metamorphosis",
                             "k36-p4-downlink"}) {
        auto f = fixture_designs(name);
        const auto& c = std::get<DownLinkCertificate>(f);
        expect(verify_downlink(c).ok(), std::string("fixture invalid: ") + name);
        std::string shipped =
            read_file(std::string(DLK_SOURCE_DIR) + "/fixtures/" + name + ".json");
        expect(shipped == encode_certificate(c),
               std::string("fixture file not bit-exact: ") + name);
    }
    // the base designs are the verbatim lists behind the small pendant orders
    for (int ell : {6, 9, 10, 13}) {
        auto base = std::get<DownLinkCertificate>(
            fixture_designs("p4-base-" + std::to_string(ell)));
        expect(p4_pendant_design(ell) == base.source,
               "pendant design differs from the base list, v=" + std::to_string(ell));
    }
    double dt = seconds_since(t0);
    expect(dt < 60.0, "runtime exceeds 1min");
    std::cout << "  path family done in " << dt << "s\n";
    return failures == 0;
}

// ---- criterion 7: bounds consistency --------------------------------------

std::vector<DownLinkCertificate> suite_certificates() {
    std::vector<DownLinkCertificate> certs;
    for (int t = 1; t <= 4; ++t)
        certs.push_back(downlink_kite(kite_degree2_design(8 * t + 1), true));
    certs.push_back(downlink_kite(kite_cyclic_design(1), false));
    certs.push_back(downlink_star(star_design(10, 5)));
    certs.push_back(downlink_star(star_design(16, 5, StarProfile::OneNonCenter)));
    certs.push_back(downlink_star(star_design(8, 4)));
    certs.push_back(downlink_cycle(steiner_triple_system(9)));
    certs.push_back(downlink_cycle(steiner_triple_system(7)));
    auto c4 = search_decomposition(Graph::complete(9), PatternKind::cycle(4));
    if (c4.design) certs.push_back(downlink_cycle(*c4.design));
    certs.push_back(downlink_cycle(std::get<Design>(fixture_designs("c5-k11-cyclic"))));
    for (int v : {6, 9, 10, 13, 18, 21, 22, 25})
        certs.push_back(downlink_path(p4_pendant_design(v)));
    auto p4 = search_decomposition(Graph::complete(4), PatternKind::path(4));
    if (p4.design) certs.push_back(downlink_path(*p4.design));
    for (int v : {18, 22}) certs.push_back(p4_pendant_certificate(v));
    for (const auto& name : fixture_names()) {
        auto f = fixture_designs(name);
        if (std::holds_alternative<DownLinkCertificate>(f))
            certs.push_back(std::get<DownLinkCertificate>(f));
    }
    return certs;
}

bool criterion7() {
    int n_checked = 0;
    for (const auto& c : suite_certificates()) {
        int n = target_order(c);
        int v = (int)c.source.host.vertex_count();
        expect(n % 4 == 0 || n % 4 == 1,
               "target order " + std::to_string(n) + " not ≡ 0,1 (mod 4)");
        if (v >= 2)
            expect((double)n > eta1_lower_bound(v, c.source.pattern.edge_count(), 2),
                   "target order " + std::to_string(n) + " violates the η1 bound");
        ++n_checked;
    }
    std::cout << "  " << n_checked << " certificates checked\n";
    return failures == 0;
}

// ---- criterion 8: oracle agreement ----------------------------------------

bool criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<DownLinkCertificate> certs;
    for (const auto& c : suite_certificates()) {
        if (c.source.host.vertex_count() > 9) continue;
        if (c.source.host != Graph::complete_on(c.source.host.vertices())) continue;
        certs.push_back(c);
    }
    certs.push_back(std::get<DownLinkCertificate>(fixture_designs("ex-bijective-downlink")));
    for (const auto& c : certs) {
        auto r = search_downlink(c.source, target_order(c));
        expect(r.verdict == SearchVerdict::Found,
               "oracle does not confirm a v=" +
                   std::to_string(c.source.host.vertex_count()) + " " +
                   c.source.pattern.name() + " certificate at order " +
                   std::to_string(target_order(c)));
    }
    auto e1 = exact_eta(4, PatternKind::path(4), SpectrumMode::Some);
    expect(e1.eta == 4, "exact_eta(4, P4, some) != 4");
    auto e2 = exact_eta(9, PatternKind::cycle(3), SpectrumMode::Some);
    expect(e2.eta == 9, "exact_eta(9, C3, some) != 9");
    double dt = seconds_since(t0);
    expect(dt < 300.0, "runtime exceeds 5min");
    std::cout << "  " << certs.size() << " certificates confirmed in " << dt << "s\n";
    return failures == 0;
}

// ---- criterion 9: round trip and CLI pipelines ----------------------------

bool criterion9() {
    for (const auto& name : fixture_names()) {
        Fixture f = fixture_designs(name);
        Fixture g = decode_document(encode_fixture(f));
        expect(f == g, "round trip differs for fixture " + name);
    }

    std::string cli = DLK_CLI_PATH;
    auto run = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " >/dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    std::vector<std::string> gens = {
        "gen --pattern p3 --order 9",
        "gen --pattern c3 --order 9",
        "gen --pattern kite --order 17 --profile degree2",
        "gen --pattern star --order 10 --k 5",
        "gen --pattern p4 --order 13",
    };
    int idx = 0;
    for (const auto& gen : gens) {
        std::string d = "acc9_" + std::to_string(idx) + ".json";
        std::string c = "acc9_" + std::to_string(idx) + ".cert.json";
        std::string minimal = gen.find("kite") != std::string::npos ? " --minimal" : "";
        expect(run(gen + " -o " + d) == 0, "gen failed: " + gen);
        expect(run("verify " + d) == 0, "verify design failed: " + gen);
        expect(run("downlink " + d + minimal + " -o " + c) == 0,
               "downlink failed: " + gen);
        expect(run("verify " + c) == 0, "verify certificate failed: " + gen);
        std::remove(d.c_str());
        std::remove(c.c_str());
        ++idx;
    }
    return failures == 0;
}

const char* kDescriptions[] = {
    "P3-partition correctness on the exhaustive connected corpus",
    "P3-design spectrum n ≡ 0,1 (mod 4) for n <= 13",
    "kite family: cyclic, degree-2, minimal down-links, multipartite",
    "star family: designs, down-link targets, recentering",
    "cycle family: STS, C4, C5 fixture and generic routes",
    "path family: pendant designs, down-links, verbatim bases",
    "bounds consistency for every certificate in the suite",
    "oracle agreement and exact η values",
    "round-trip identity and CLI pipelines",
};

bool run_criterion(int i) {
    failures = 0;
    bool ok = false;
    switch (i) {
        case 1: ok = criterion1(); break;
        case 2: ok = criterion2(); break;
        case 3: ok = criterion3(); break;
        case 4: ok = criterion4(); break;
        case 5: ok = criterion5(); break;
        case 6: ok = criterion6(); break;
        case 7: ok = criterion7(); break;
        case 8: ok = criterion8(); break;
        case 9: ok = criterion9(); break;
        default: std::cout << "unknown criterion " << i << "\n"; return false;
    }
    std::cout << "criterion " << i << ": " << (ok ? "PASS" : "FAIL") << " — "
              << kDescriptions[i - 1] << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) return run_criterion(std::atoi(argv[1])) ? 0 : 1;
    int failed = 0;
    for (int i = 1; i <= 9; ++i)
        if (!run_criterion(i)) ++failed;
    return failed;
}
