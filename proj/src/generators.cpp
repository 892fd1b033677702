#include "dlk/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlk {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

Block kite(Vertex a, Vertex b, Vertex c, Vertex d) {
    return Block(PatternKind::kite(), {a, b, c, d});
}

Block p3(Vertex a, Vertex b, Vertex c) {
    return Block(PatternKind::path(3), {a, b, c});
}

Block p4(Vertex a, Vertex b, Vertex c, Vertex d) {
    return Block(PatternKind::path(4), {a, b, c, d});
}

// ordered adjacent-vertex pairs of a kite, for difference computation
std::vector<std::pair<Vertex, Vertex>> kite_adjacent_pairs(const Block& b) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : b.edges()) {
        out.emplace_back(e.first, e.second);
        out.emplace_back(e.second, e.first);
    }
    return out;
}

} // namespace

void validate_difference_family(const DifferenceFamily& f) {
    std::vector<int> expected;
    std::set<int> h(f.subgroup.begin(), f.subgroup.end());
    for (int g = 0; g < f.group_order; ++g)
        if (!h.count(g)) expected.push_back(g);
    std::vector<int> got(f.differences);
    std::sort(got.begin(), got.end());
    if (got != expected)
        throw std::runtime_error("difference family invalid: ΔF does not cover G \\ H exactly once (" +
                                 f.description + ")");
}

DifferenceFamily kite_cyclic_family(int t) {
    if (t < 1) throw std::invalid_argument("kite_cyclic_family: t >= 1 required");
    int v = 8 * t + 1;
    DifferenceFamily f;
    f.group_order = v;
    f.description = "Z_" + std::to_string(v) + ", H = {0}";
    f.subgroup = {0};
    for (int i = 1; i <= t; ++i)
        f.base_blocks.push_back(kite(2 * i - 1, 3 * t + i, 0, 2 * i));
    for (const auto& b : f.base_blocks)
        for (const auto& [x, y] : kite_adjacent_pairs(b))
            f.differences.push_back(imod(x - y, v));
    std::sort(f.differences.begin(), f.differences.end());
    validate_difference_family(f);
    return f;
}

Design kite_cyclic_design(int t) {
    DifferenceFamily f = kite_cyclic_family(t);
    int v = f.group_order;
    Design d{Graph::complete(v), PatternKind::kite(), {}};
    for (const auto& b : f.base_blocks)
        for (int g = 0; g < v; ++g)
            d.blocks.push_back(kite(imod(b.verts[0] + g, v), imod(b.verts[1] + g, v),
                                    imod(b.verts[2] + g, v), imod(b.verts[3] + g, v)));
    return d;
}

DifferenceFamily kite_multipartite_family(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("kite_multipartite_family: odd m >= 3 required");
    int n = (m - 1) / 2;
    auto el = [&](int j, int c) { return 8 * imod(c, m) + imod(j, 8); };
    DifferenceFamily f;
    f.group_order = 8 * m;
    f.description = "Z_8 x Z_" + std::to_string(m) + ", H = Z_8 x {0}";
    for (int j = 0; j < 8; ++j) f.subgroup.push_back(el(j, 0));
    for (int i = 1; i <= n; ++i) {
        f.base_blocks.push_back(kite(el(0, 0), el(0, 2 * i), el(2, i), el(1, 0)));
        f.base_blocks.push_back(kite(el(0, 0), el(4, i), el(1, -i), el(6, i)));
    }
    for (const auto& b : f.base_blocks)
        for (const auto& [x, y] : kite_adjacent_pairs(b)) {
            int jx = x % 8, cx = x / 8, jy = y % 8, cy = y / 8;
            f.differences.push_back(el(jx - jy, cx - cy));
        }
    std::sort(f.differences.begin(), f.differences.end());
    validate_difference_family(f);
    return f;
}

Design kite_multipartite_design(int m) {
    DifferenceFamily f = kite_multipartite_family(m);
    std::vector<std::vector<Vertex>> parts;
    for (int c = 0; c < m; ++c) {
        std::vector<Vertex> p;
        for (int j = 0; j < 8; ++j) p.push_back(8 * c + j);
        parts.push_back(p);
    }
    Design d{Graph::multipartite(parts), PatternKind::kite(), {}};
    auto translate = [&](Vertex x, int gj, int gc) {
        return 8 * imod(x / 8 + gc, m) + imod(x % 8 + gj, 8);
    };
    for (const auto& b : f.base_blocks)
        for (int gc = 0; gc < m; ++gc)
            for (int gj = 0; gj < 8; ++gj)
                d.blocks.push_back(kite(translate(b.verts[0], gj, gc),
                                        translate(b.verts[1], gj, gc),
                                        translate(b.verts[2], gj, gc),
                                        translate(b.verts[3], gj, gc)));
    return d;
}

namespace {

// Kite decomposition of K_{0,A} ∪ K_A with the hub of degree 2 everywhere.
// A has 8 vertices (1-based indices into the list below).
std::vector<Block> kite_hub_gadget(Vertex hub, const std::vector<Vertex>& A) {
    auto a = [&](int j) { return A.at(j - 1); };
    return {
        kite(hub, a(1), a(2), a(6)), kite(hub, a(4), a(3), a(5)),
        kite(hub, a(6), a(5), a(7)), kite(hub, a(7), a(8), a(6)),
        kite(a(1), a(3), a(6), a(7)), kite(a(1), a(7), a(4), a(6)),
        kite(a(1), a(5), a(8), a(4)), kite(a(2), a(8), a(3), a(7)),
        kite(a(4), a(5), a(2), a(7)),
    };
}

// Kite decomposition of K_{0,S} ∪ K_S ∪ K_{O,S} with the hub of degree 2
// everywhere; S ("self") and O ("other") each have 8 vertices.
std::vector<Block> kite_cross_gadget(Vertex hub, const std::vector<Vertex>& O,
                                     const std::vector<Vertex>& S) {
    auto a1 = [&](int j) { return O.at(j - 1); };
    auto a2 = [&](int j) { return S.at(j - 1); };
    return {
        kite(hub, a2(2), a2(1), a1(8)),   kite(hub, a2(4), a2(3), a1(8)),
        kite(hub, a2(6), a2(5), a1(8)),   kite(hub, a2(8), a2(7), a1(8)),
        kite(a1(1), a2(1), a2(8), a1(8)), kite(a1(1), a2(7), a2(2), a1(8)),
        kite(a1(1), a2(3), a2(6), a1(8)), kite(a1(1), a2(5), a2(4), a1(8)),
        kite(a1(2), a2(7), a2(1), a1(7)), kite(a1(2), a2(6), a2(2), a1(7)),
        kite(a1(2), a2(5), a2(3), a1(7)), kite(a1(2), a2(8), a2(4), a1(7)),
        kite(a1(3), a2(1), a2(6), a1(7)), kite(a1(3), a2(2), a2(5), a1(7)),
        kite(a1(3), a2(3), a2(8), a1(7)), kite(a1(3), a2(4), a2(7), a1(7)),
        kite(a1(4), a2(5), a2(1), a1(6)), kite(a1(4), a2(4), a2(2), a1(6)),
        kite(a1(4), a2(3), a2(7), a1(6)), kite(a1(4), a2(6), a2(8), a1(6)),
        kite(a1(5), a2(4), a2(1), a2(3)), kite(a1(5), a2(3), a2(2), a2(8)),
        kite(a1(5), a2(8), a2(5), a1(6)), kite(a1(5), a2(6), a2(7), a2(5)),
        kite(a2(4), a2(6), a1(6), a2(3)),
    };
}

std::vector<Vertex> part_labels(int i) { // A_i = {8(i-1)+1 .. 8i}
    std::vector<Vertex> out;
    for (int j = 1; j <= 8; ++j) out.push_back(8 * (i - 1) + j);
    return out;
}

} // namespace

Design kite_degree2_design(int v) {
    if (v <= 1 || v % 8 != 1)
        throw std::invalid_argument("kite_degree2_design: v ≡ 1 (mod 8), v > 1 required");
    int t = (v - 1) / 8;
    Design d{Graph::complete(v), PatternKind::kite(), {}};
    auto append = [&](std::vector<Block> bs) {
        for (auto& b : bs) d.blocks.push_back(std::move(b));
    };
    auto append_multipartite = [&](const std::vector<int>& part_ids) {
        // Relabel the developed K_{m x 8} design onto the listed parts.
        int m = (int)part_ids.size();
        Design mp = kite_multipartite_design(m);
        std::vector<std::vector<Vertex>> parts;
        for (int id : part_ids) parts.push_back(part_labels(id));
        auto relabel = [&](Vertex x) { return parts[x / 8][x % 8]; };
        for (const auto& b : mp.blocks)
            d.blocks.push_back(kite(relabel(b.verts[0]), relabel(b.verts[1]),
                                    relabel(b.verts[2]), relabel(b.verts[3])));
    };

    if (t == 1) {
        append(kite_hub_gadget(0, part_labels(1)));
    } else if (t == 2) {
        append(kite_hub_gadget(0, part_labels(1)));
        append(kite_cross_gadget(0, part_labels(1), part_labels(2)));
    } else if (t % 2 == 1) {
        for (int i = 1; i <= t; ++i) append(kite_hub_gadget(0, part_labels(i)));
        std::vector<int> ids(t);
        std::iota(ids.begin(), ids.end(), 1);
        append_multipartite(ids);
    } else {
        append(kite_hub_gadget(0, part_labels(t)));
        std::vector<int> ids(t - 1);
        std::iota(ids.begin(), ids.end(), 1);
        append_multipartite(ids);
        for (int i = 1; i < t; ++i)
            append(kite_cross_gadget(0, part_labels(t), part_labels(i)));
    }
    return d;
}

namespace {

// Distribute `total` stars over the vertices in `centers`, each multiplicity
// in [lo, cap], as evenly as possible (larger shares on smaller labels).
std::vector<int> distribute(int total, const std::vector<int>& centers, int lo, int cap,
                            int v) {
    int n = (int)centers.size();
    if ((long long)n * lo > total || (long long)n * cap < total)
        throw std::invalid_argument("star_design: requested profile is infeasible for (v,k)");
    std::vector<int> mult(v, 0);
    int q = total / n, r = total % n;
    for (int i = 0; i < n; ++i) mult[centers[i]] = q + (i < r ? 1 : 0);
    for (int c : centers)
        if (mult[c] < lo || mult[c] > cap)
            throw std::invalid_argument("star_design: requested profile is infeasible for (v,k)");
    return mult;
}

} // namespace

Design star_design(int v, int k, StarProfile profile) {
    PatternKind pat = PatternKind::star(k);
    if (k <= 1) throw std::invalid_argument("star_design: k >= 2 required");
    if (!admissible_order(pat, v))
        throw std::invalid_argument("star_design: order " + std::to_string(v) +
                                    " is not admissible for S" + std::to_string(k) +
                                    " (need v >= 2k and v(v-1) ≡ 0 mod 2k)");
    int s = (int)((long long)v * (v - 1) / (2 * k));
    int cap = (v - 1) / k;

    std::vector<int> mult;
    switch (profile) {
        case StarProfile::Any: {
            std::vector<int> centers(v);
            std::iota(centers.begin(), centers.end(), 0);
            mult = distribute(s, centers, 0, cap, v);
            break;
        }
        case StarProfile::OneNonCenter: {
            std::vector<int> centers(v - 1);
            std::iota(centers.begin(), centers.end(), 0); // vertex v-1 centers nothing
            mult = distribute(s, centers, 1, cap, v);
            break;
        }
        case StarProfile::OneNonCenterOneSingle: {
            std::vector<int> centers(v - 2);
            std::iota(centers.begin(), centers.end(), 0);
            mult = distribute(s - 1, centers, 1, cap, v);
            mult[v - 2] = 1; // vertex v-2 centers exactly one star
            break;
        }
    }

    // Orient K_v so that outdeg(i) = k * mult[i], starting from the
    // lexicographic tournament and repairing by directed-path reversal.
    std::vector<std::vector<char>> to(v, std::vector<char>(v, 0));
    std::vector<int> outdeg(v, 0), target(v);
    for (int i = 0; i < v; ++i) {
        target[i] = k * mult[i];
        for (int j = i + 1; j < v; ++j) to[i][j] = 1;
        outdeg[i] = v - 1 - i;
    }
    auto find_over = [&] {
        for (int i = 0; i < v; ++i)
            if (outdeg[i] > target[i]) return i;
        return -1;
    };
    long long guard = (long long)v * v * v + 1000;
    for (int u = find_over(); u >= 0; u = find_over()) {
        if (--guard < 0) throw std::runtime_error("star_design: orientation repair stalled");
        // BFS along directed edges from u to some vertex below target
        std::vector<int> prev(v, -2);
        std::deque<int> q{u};
        prev[u] = -1;
        int found = -1;
        while (!q.empty() && found < 0) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < v && found < 0; ++y) {
                if (prev[y] != -2 || !to[x][y]) continue;
                prev[y] = x;
                if (outdeg[y] < target[y]) found = y;
                else q.push_back(y);
            }
        }
        if (found < 0) throw std::runtime_error("star_design: orientation repair stalled");
        for (int y = found; prev[y] >= 0; y = prev[y]) {
            int x = prev[y];
            to[x][y] = 0;
            to[y][x] = 1;
        }
        --outdeg[u];
        ++outdeg[found];
    }

    Design d{Graph::complete(v), pat, {}};
    for (int c = 0; c < v; ++c) {
        std::vector<Vertex> heads;
        for (int j = 0; j < v; ++j)
            if (to[c][j]) heads.push_back(j);
        for (std::size_t off = 0; off < heads.size(); off += k) {
            std::vector<Vertex> verts{c};
            verts.insert(verts.end(), heads.begin() + off, heads.begin() + off + k);
            d.blocks.emplace_back(pat, verts);
        }
    }
    return d;
}

std::vector<int> star_center_multiplicities(const Design& d) {
    if (d.pattern.family != PatternFamily::Star)
        throw std::invalid_argument("star_center_multiplicities: not a star design");
    std::map<Vertex, int> count;
    for (Vertex v : d.host.vertices()) count[v] = 0;
    for (const auto& b : d.blocks) count.at(b.verts[0])++;
    std::vector<int> out;
    for (const auto& [_, c] : count) out.push_back(c);
    return out;
}

Design recenter_star_design(const Design& d) {
    if (d.pattern.family != PatternFamily::Star)
        throw std::invalid_argument("recenter_star_design: not a star design");
    int k = d.pattern.k;
    std::map<Vertex, std::vector<int>> centered; // vertex -> indices of its stars
    for (Vertex v : d.host.vertices()) centered[v] = {};
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        centered[d.blocks[i].verts[0]].push_back((int)i);

    Vertex x = -1;
    for (const auto& [v, idxs] : centered)
        if (idxs.empty()) { x = v; break; }
    if (x < 0) return d; // already all-centers

    if ((int)d.host.vertex_count() <= 2 * k)
        throw std::invalid_argument("recenter_star_design: requires v > 2k");

    // least y centering >= 2 stars, one of which contains x
    int star_idx = -1;
    for (const auto& [y, idxs] : centered) {
        if (idxs.size() < 2) continue;
        for (int i : idxs) {
            const auto& vs = d.blocks[i].verts;
            if (std::find(vs.begin() + 1, vs.end(), x) != vs.end()) { star_idx = i; break; }
        }
        if (star_idx >= 0) break;
    }
    if (star_idx < 0)
        throw std::runtime_error("recenter_star_design: no multi-center star through the non-center vertex");

    Design out = d;
    const Block& S = d.blocks[star_idx];
    Vertex y = S.verts[0];
    std::vector<Vertex> others; // externals of S except x
    for (std::size_t i = 1; i < S.verts.size(); ++i)
        if (S.verts[i] != x) others.push_back(S.verts[i]);

    // S = [y; x, a_1..a_{k-1}]  ->  S' = [x; y, a_1..a_{k-1}]
    std::vector<Vertex> sprime{x, y};
    sprime.insert(sprime.end(), others.begin(), others.end());
    out.blocks[star_idx] = Block(d.pattern, sprime);

    // in the star with center a_i containing x, substitute [a_i,x] by [a_i,y]
    for (Vertex a : others) {
        int si = -1;
        for (int i : centered.at(a)) {
            const auto& vs = d.blocks[i].verts;
            if (std::find(vs.begin() + 1, vs.end(), x) != vs.end()) { si = i; break; }
        }
        if (si < 0)
            throw std::runtime_error("recenter_star_design: missing star through the non-center vertex");
        std::vector<Vertex> vs = out.blocks[si].verts;
        std::replace(vs.begin() + 1, vs.end(), x, y);
        out.blocks[si] = Block(d.pattern, vs);
    }
    return out;
}

namespace {

// half-idempotent commutative quasigroup on Z_{2n}
int half_idempotent(int i, int j, int n) {
    int s = imod(i + j, 2 * n);
    return s % 2 == 0 ? s / 2 : n + (s - 1) / 2;
}

} // namespace

Design steiner_triple_system(int v) {
    if (v % 6 != 1 && v % 6 != 3)
        throw std::invalid_argument("steiner_triple_system: v ≡ 1,3 (mod 6) required");
    PatternKind c3 = PatternKind::cycle(3);
    Design d{Graph::complete(v), c3, {}};
    if (v % 6 == 3) {
        // Bose: points Z_{2n+1} x {0,1,2}, idempotent quasigroup (i+j)(n+1)
        int n = (v - 3) / 6, m = 2 * n + 1;
        auto pt = [&](int i, int r) { return imod(r, 3) * m + imod(i, m); };
        auto q = [&](int i, int j) { return imod((i + j) * (n + 1), m); };
        for (int i = 0; i < m; ++i)
            d.blocks.emplace_back(c3, std::vector<Vertex>{pt(i, 0), pt(i, 1), pt(i, 2)});
        for (int r = 0; r < 3; ++r)
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    d.blocks.emplace_back(
                        c3, std::vector<Vertex>{pt(i, r), pt(j, r), pt(q(i, j), r + 1)});
    } else {
        // Skolem: points {∞} ∪ Z_{2n} x {0,1,2}
        int n = (v - 1) / 6, m = 2 * n;
        auto pt = [&](int i, int r) { return 1 + imod(r, 3) * m + imod(i, m); };
        const Vertex inf = 0;
        for (int i = 0; i < n; ++i)
            d.blocks.emplace_back(c3, std::vector<Vertex>{pt(i, 0), pt(i, 1), pt(i, 2)});
        for (int i = 0; i < n; ++i) {
            d.blocks.emplace_back(c3, std::vector<Vertex>{inf, pt(n + i, 0), pt(i, 1)});
            d.blocks.emplace_back(c3, std::vector<Vertex>{inf, pt(n + i, 1), pt(i, 2)});
            d.blocks.emplace_back(c3, std::vector<Vertex>{inf, pt(n + i, 2), pt(i, 0)});
        }
        for (int r = 0; r < 3; ++r)
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    d.blocks.emplace_back(
                        c3, std::vector<Vertex>{pt(i, r), pt(j, r),
                                                pt(half_idempotent(i, j, n), r + 1)});
    }
    return d;
}

// ---------------------------------------------------------------------------
// P4 pendant construction: base certificates and the gluing recursion
// ---------------------------------------------------------------------------

namespace {

DownLinkCertificate make_cert(Design src, Design tgt) {
    DownLinkCertificate c{std::move(src), std::move(tgt), {}};
    c.mapping.resize(c.source.blocks.size());
    std::iota(c.mapping.begin(), c.mapping.end(), 0);
    return c;
}

using RawP4 = std::vector<std::array<int, 4>>;
using RawP3 = std::vector<std::array<int, 3>>;

// base: K_ell (P4, pendant 0) down-linked to K_{ell-1} on {1..ell-1} (P3).
// The first |B| target blocks are the images, in order.
DownLinkCertificate p4_base_certificate_raw(int ell, const RawP4& b, const RawP3& bp) {
    std::vector<Vertex> tverts;
    for (int i = 1; i < ell; ++i) tverts.push_back(i);
    Design src{Graph::complete(ell), PatternKind::path(4), {}};
    Design tgt{Graph::complete_on(tverts), PatternKind::path(3), {}};
    for (const auto& q : b) src.blocks.push_back(p4(q[0], q[1], q[2], q[3]));
    for (const auto& q : bp) tgt.blocks.push_back(p3(q[0], q[1], q[2]));
    return make_cert(std::move(src), std::move(tgt));
}

DownLinkCertificate p4_base_certificate(int ell) {
    switch (ell) {
        case 6:
            return p4_base_certificate_raw(
                6,
                {{0,1,2,4},{0,2,3,5},{0,3,4,1},{0,4,5,2},{0,5,1,3}},
                {{1,2,4},{2,3,5},{3,4,1},{4,5,2},{5,1,3}});
        case 9:
            return p4_base_certificate_raw(
                9,
                {{0,1,2,4},{0,2,3,5},{0,3,4,6},{0,4,5,7},{0,5,6,8},{0,6,7,1},
                 {0,7,8,2},{0,8,1,3},{5,8,4,1},{2,5,1,6},{3,6,2,7},{4,7,3,8}},
                {{1,2,4},{2,3,5},{3,4,6},{4,5,7},{5,6,8},{6,7,1},{7,8,2},{8,1,3},
                 {8,4,1},{5,1,6},{3,6,2},{7,3,8},{2,5,8},{2,7,4}});
        case 10:
            return p4_base_certificate_raw(
                10,
                {{0,1,2,4},{0,2,3,5},{0,3,4,6},{0,4,5,7},{0,5,6,8},{0,6,7,9},
                 {0,7,8,1},{0,8,9,2},{0,9,1,3},{1,4,8,2},{2,6,9,4},{4,7,2,5},
                 {5,9,3,7},{7,1,5,8},{8,3,6,1}},
                {{1,2,4},{2,3,5},{3,4,6},{4,5,7},{5,6,8},{6,7,9},{7,8,1},{8,9,2},
                 {9,1,3},{1,4,8},{6,9,4},{4,7,2},{9,3,7},{7,1,5},{3,6,1},
                 {8,2,6},{2,5,9},{5,8,3}});
        case 13:
            return p4_base_certificate_raw(
                13,
                {{0,1,2,4},{0,2,3,5},{0,3,4,6},{0,4,5,7},{0,5,6,8},{0,6,7,9},
                 {0,7,8,10},{0,8,9,11},{0,9,10,12},{0,10,11,1},{0,11,12,2},
                 {0,12,1,3},{1,4,9,5},{2,5,10,6},{3,6,11,7},{4,7,12,8},{5,8,1,9},
                 {6,9,2,10},{5,11,3,10},{10,7,1,5},{5,12,9,3},{3,7,2,11},
                 {6,12,4,11},{11,8,2,6},{6,1,10,4},{4,8,3,12}},
                {{1,2,4},{2,3,5},{3,4,6},{4,5,7},{5,6,8},{6,7,9},{7,8,10},
                 {8,9,11},{9,10,12},{10,11,1},{11,12,2},{12,1,3},{1,4,9},
                 {5,10,6},{3,6,11},{7,12,8},{5,8,1},{9,2,10},{5,11,3},{7,1,5},
                 {5,12,9},{7,2,11},{6,12,4},{8,2,6},{6,1,10},{8,3,12},
                 {9,5,2},{11,7,4},{1,9,6},{3,10,7},{9,3,7},{4,11,8},{10,4,8}});
        default:
            throw std::invalid_argument("p4_base_certificate: ell must be 6, 9, 10 or 13");
    }
}

// Metamorphosis of the (K_12, P4)-design (labels here 1..12, remapped).
DownLinkCertificate k12_metamorphosis(const std::vector<Vertex>& labels) {
    auto L = [&](int i) { return labels.at(i - 1); };
    RawP4 b = {{1,2,3,5},{1,3,4,6},{1,4,5,7},{1,5,6,8},{1,6,7,9},{1,7,8,10},
               {1,8,9,11},{1,9,10,12},{1,10,11,2},{1,11,12,3},{1,12,2,4},
               {2,5,10,6},{3,6,11,7},{4,7,12,8},{5,8,2,9},{6,9,3,10},
               {7,10,4,11},{8,11,5,12},{9,12,6,2},{10,2,7,3},{11,3,8,4},
               {12,4,9,5}};
    RawP3 bp = {{2,3,5},{3,4,6},{4,5,7},{5,6,8},{6,7,9},{7,8,10},{8,9,11},
                {9,10,12},{10,11,2},{11,12,3},{12,2,4},{5,10,6},{6,11,7},
                {7,12,8},{8,2,9},{9,3,10},{10,4,11},{11,5,12},{12,6,2},
                {2,7,3},{3,8,4},{4,9,5},
                {1,2,5},{1,3,6},{1,4,7},{1,5,8},{1,6,9},{1,7,10},{1,8,11},
                {1,9,12},{1,10,2},{1,11,3},{1,12,4}};
    Design src{Graph::complete_on(labels), PatternKind::path(4), {}};
    Design tgt{Graph::complete_on(labels), PatternKind::path(3), {}};
    for (const auto& q : b) src.blocks.push_back(p4(L(q[0]), L(q[1]), L(q[2]), L(q[3])));
    for (const auto& q : bp) tgt.blocks.push_back(p3(L(q[0]), L(q[1]), L(q[2])));
    return make_cert(std::move(src), std::move(tgt));
}

// K_{3,6} gadget. xs = {0,1,2} roles, ys = {a..f} roles. With remove_x0 the
// target lives on K_{{xs1,xs2},ys} (the down-link δ); otherwise it is the
// metamorphosis μ on the same host.
DownLinkCertificate k36_gadget(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                               bool remove_x0) {
    Vertex x0 = xs[0], x1 = xs[1], x2 = xs[2];
    Vertex a = ys[0], b = ys[1], c = ys[2], d = ys[3], e = ys[4], f = ys[5];
    Design src{Graph::bipartite(xs, ys), PatternKind::path(4), {}};
    src.blocks = {p4(x0, a, x1, d), p4(x0, b, x1, e), p4(x0, c, x1, f),
                  p4(x0, d, x2, a), p4(x0, e, x2, b), p4(x0, f, x2, c)};
    Design tgt{remove_x0 ? Graph::bipartite({x1, x2}, ys) : Graph::bipartite(xs, ys),
               PatternKind::path(3), {}};
    tgt.blocks = {p3(a, x1, d), p3(b, x1, e), p3(c, x1, f),
                  p3(d, x2, a), p3(e, x2, b), p3(f, x2, c)};
    if (!remove_x0) {
        tgt.blocks.push_back(p3(a, x0, b));
        tgt.blocks.push_back(p3(c, x0, d));
        tgt.blocks.push_back(p3(e, x0, f));
    }
    return make_cert(std::move(src), std::move(tgt));
}

// Tile K_{xs,ys} (|xs| divisible by 3, |ys| by 6) with K_{3,6} gadgets.
// When `removed` is set, triples containing it use δ, the rest μ.
DownLinkCertificate bipartite_p4_certificate(const std::vector<Vertex>& xs,
                                             const std::vector<Vertex>& ys,
                                             std::optional<Vertex> removed) {
    if (xs.size() % 3 != 0 || ys.size() % 6 != 0)
        throw std::invalid_argument("bipartite_p4_certificate: sides must be 3|xs|, 6|ys|");
    std::vector<DownLinkCertificate> pieces;
    for (std::size_t i = 0; i < xs.size(); i += 3) {
        std::vector<Vertex> triple(xs.begin() + i, xs.begin() + i + 3);
        bool has_removed = removed && std::find(triple.begin(), triple.end(), *removed) != triple.end();
        if (has_removed && triple.front() != *removed)
            std::swap(triple[0], triple[triple.front() == *removed ? 0 : (triple[1] == *removed ? 1 : 2)]);
        for (std::size_t j = 0; j < ys.size(); j += 6) {
            std::vector<Vertex> six(ys.begin() + j, ys.begin() + j + 6);
            pieces.push_back(k36_gadget(triple, six, has_removed));
        }
    }
    return glue_downlinks(pieces);
}

std::vector<Vertex> range_labels(Vertex from, int count) {
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) out.push_back(from + i);
    return out;
}

} // namespace

DownLinkCertificate p4_pendant_certificate(int v) {
    int r = v % 12;
    if (v < 6 || (r != 1 && r != 6 && r != 9 && r != 10))
        throw std::invalid_argument(
            "p4_pendant_certificate: v ≡ 1,6,9,10 (mod 12), v >= 6 required");
    if (v == 13 || r != 1) {
        int ell = (r == 1) ? 13 : r;
        if (v == ell) return p4_base_certificate(ell);
    }

    std::vector<DownLinkCertificate> pieces;
    if (r == 1) {
        // K_{1+12t} = t K_13 ∪ C(t,2) K_{12,12}
        int t = (v - 1) / 12;
        std::vector<std::vector<Vertex>> A;
        for (int i = 0; i < t; ++i) A.push_back(range_labels(1 + 12 * i, 12));
        for (int i = 0; i < t; ++i) {
            std::vector<Vertex> labels{0};
            labels.insert(labels.end(), A[i].begin(), A[i].end());
            DownLinkCertificate base = p4_base_certificate(13);
            // relabel 0..12 -> labels
            auto relab = [&](const Design& din, bool p4kind) {
                Design dout{Graph::complete_on(p4kind
                                                   ? labels
                                                   : std::vector<Vertex>(labels.begin() + 1,
                                                                         labels.end())),
                            din.pattern, {}};
                for (const auto& blk : din.blocks) {
                    std::vector<Vertex> vs;
                    for (Vertex x : blk.verts) vs.push_back(labels[x]);
                    dout.blocks.emplace_back(din.pattern, vs);
                }
                return dout;
            };
            pieces.push_back(make_cert(relab(base.source, true), relab(base.target, false)));
        }
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                pieces.push_back(bipartite_p4_certificate(A[i], A[j], std::nullopt));
    } else {
        int ell = r;
        int t = (v - ell) / 12;
        std::vector<std::vector<Vertex>> A;
        for (int i = 0; i < t; ++i) A.push_back(range_labels(ell + 12 * i, 12));
        pieces.push_back(p4_base_certificate(ell));
        for (int i = 0; i < t; ++i) {
            if (ell == 10) {
                // K_{10,12} = K_{{0},A_i} ∪ K_{{1..9},A_i}; fold the first part
                // into a K_13 piece on {0} ∪ A_i.
                std::vector<Vertex> labels{0};
                labels.insert(labels.end(), A[i].begin(), A[i].end());
                DownLinkCertificate base = p4_base_certificate(13);
                Design src{Graph::complete_on(labels), PatternKind::path(4), {}};
                Design tgt{Graph::complete_on(A[i]), PatternKind::path(3), {}};
                for (const auto& blk : base.source.blocks) {
                    std::vector<Vertex> vs;
                    for (Vertex x : blk.verts) vs.push_back(labels[x]);
                    src.blocks.emplace_back(src.pattern, vs);
                }
                for (const auto& blk : base.target.blocks) {
                    std::vector<Vertex> vs;
                    for (Vertex x : blk.verts) vs.push_back(labels[x]);
                    tgt.blocks.emplace_back(tgt.pattern, vs);
                }
                pieces.push_back(make_cert(std::move(src), std::move(tgt)));
                pieces.push_back(bipartite_p4_certificate(range_labels(1, 9), A[i], std::nullopt));
            } else {
                pieces.push_back(k12_metamorphosis(A[i]));
                pieces.push_back(
                    bipartite_p4_certificate(range_labels(0, ell), A[i], Vertex{0}));
            }
        }
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                pieces.push_back(bipartite_p4_certificate(A[i], A[j], std::nullopt));
    }
    return glue_downlinks(pieces);
}

Design p4_pendant_design(int v) { return p4_pendant_certificate(v).source; }

namespace {

// vertices having degree `deg` in a path block
int degree_in_path(const Block& b, Vertex x) {
    int d = 0;
    for (const auto& e : b.edges())
        if (e.first == x || e.second == x) ++d;
    return d;
}

} // namespace

Design p4_saturate_design(const Design& d) {
    if (d.pattern != PatternKind::path(4))
        throw std::invalid_argument("p4_saturate_design: P4 design required");
    // at most one vertex can have degree 1 in all its blocks
    Vertex x = -1;
    for (Vertex v : d.host.vertices()) {
        bool appears = false, always1 = true;
        for (const auto& b : d.blocks) {
            if (std::find(b.verts.begin(), b.verts.end(), v) == b.verts.end()) continue;
            appears = true;
            if (degree_in_path(b, v) != 1) { always1 = false; break; }
        }
        if (appears && always1) { x = v; break; }
    }
    if (x < 0) return d;

    auto degree2_elsewhere = [&](Vertex w, std::size_t skip) {
        for (std::size_t i = 0; i < d.blocks.size(); ++i) {
            if (i == skip) continue;
            const auto& vs = d.blocks[i].verts;
            if (std::find(vs.begin(), vs.end(), w) == vs.end()) continue;
            if (degree_in_path(d.blocks[i], w) == 2) return true;
        }
        return false;
    };

    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        std::vector<Vertex> vs = d.blocks[i].verts;
        if (vs.front() != x && vs.back() != x) continue;
        if (vs.back() == x) std::reverse(vs.begin(), vs.end());
        Vertex a = vs[1], b = vs[2], c = vs[3]; // P1 = [x,a,b,c]
        if (!degree2_elsewhere(a, i) || !degree2_elsewhere(b, i)) continue;
        // P2 = the block holding the edge {x,c}
        for (std::size_t j = 0; j < d.blocks.size(); ++j) {
            if (j == i) continue;
            std::vector<Vertex> ws = d.blocks[j].verts;
            if (ws.front() == c && ws[1] == x) std::reverse(ws.begin(), ws.end());
            if (!(ws.front() == x && ws[1] == c)) continue;
            Vertex dd = ws[2], e = ws[3]; // P2 = [x,c,d,e]
            Design out = d;
            if (b != e) {
                out.blocks[i] = p4(b, a, x, c);
                out.blocks[j] = p4(b, c, dd, e);
            } else {
                out.blocks[i] = p4(a, x, c, b);
                out.blocks[j] = p4(c, dd, b, a);
            }
            return out;
        }
    }
    throw std::runtime_error("p4_saturate_design: no suitable block pair for the rewiring");
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

namespace {

Design ex_bijective_p3() {
    Design d{Graph::complete(4), PatternKind::path(3), {}};
    d.blocks = {p3(1, 2, 3), p3(1, 3, 0), p3(2, 0, 1)};
    return d;
}

Design ex_bijective_p6() {
    Design d{Graph::complete(6), PatternKind::path(6), {}};
    d.blocks = {Block(PatternKind::path(6), {4, 0, 5, 1, 2, 3}),
                Block(PatternKind::path(6), {2, 5, 4, 1, 3, 0}),
                Block(PatternKind::path(6), {5, 3, 4, 2, 0, 1})};
    return d;
}

Design c5_k11_cyclic() {
    Design d{Graph::complete(11), PatternKind::cycle(5), {}};
    RawP4 dummy;
    const std::vector<std::array<int, 5>> blocks = {
        {0,8,7,3,5},{1,9,8,4,6},{2,10,9,5,7},{3,0,10,6,8},{4,1,0,7,9},
        {5,2,1,8,10},{6,3,2,9,0},{7,4,3,10,1},{8,5,4,0,2},{9,6,5,1,3},
        {10,7,6,2,4}};
    for (const auto& b : blocks)
        d.blocks.emplace_back(PatternKind::cycle(5),
                              std::vector<Vertex>{b[0], b[1], b[2], b[3], b[4]});
    return d;
}

DownLinkCertificate c5_k11_downlink() {
    Design tgt{Graph::complete_on({2, 3, 4, 5, 6, 7, 8, 9, 10}), PatternKind::path(3), {}};
    const RawP3 blocks = {
        {8,7,3},{8,4,6},{9,5,7},{10,6,8},{7,9,4},{8,10,5},{6,3,2},{4,3,10},
        {8,5,4},{3,9,6},{4,10,7},
        {3,5,2},{3,8,9},{7,2,10},{10,9,2},{6,7,4},{4,2,8},{2,6,5}};
    for (const auto& b : blocks) tgt.blocks.push_back(p3(b[0], b[1], b[2]));
    return make_cert(c5_k11_cyclic(), std::move(tgt));
}

} // namespace

Fixture fixture_designs(const std::string& name) {
    if (name == "ex-bijective-p3") return ex_bijective_p3();
    if (name == "ex-bijective-p6") return ex_bijective_p6();
    if (name == "ex-bijective-downlink")
        return make_cert(ex_bijective_p6(), ex_bijective_p3());
    if (name == "c5-k11-cyclic") return c5_k11_cyclic();
    if (name == "c5-k11-downlink") return c5_k11_downlink();
    if (name == "k12-p4-metamorphosis") {
        std::vector<Vertex> labels(12);
        std::iota(labels.begin(), labels.end(), 1);
        return k12_metamorphosis(labels);
    }
    if (name == "k36-p4-metamorphosis")
        return k36_gadget({0, 1, 2}, {3, 4, 5, 6, 7, 8}, false);
    if (name == "k36-p4-downlink")
        return k36_gadget({0, 1, 2}, {3, 4, 5, 6, 7, 8}, true);
    if (name == "p4-base-6") return p4_base_certificate(6);
    if (name == "p4-base-9") return p4_base_certificate(9);
    if (name == "p4-base-10") return p4_base_certificate(10);
    if (name == "p4-base-13") return p4_base_certificate(13);
    throw std::invalid_argument("fixture_designs: unknown fixture \"" + name + "\"");
}

std::vector<std::string> fixture_names() {
    return {"ex-bijective-p3",  "ex-bijective-p6",      "ex-bijective-downlink",
            "c5-k11-cyclic",    "c5-k11-downlink",      "k12-p4-metamorphosis",
            "k36-p4-metamorphosis", "k36-p4-downlink",  "p4-base-6",
            "p4-base-9",        "p4-base-10",           "p4-base-13"};
}

} // namespace dlk
