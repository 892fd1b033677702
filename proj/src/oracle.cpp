#include "dlk/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlk {

namespace {

const PatternKind P3 = PatternKind::path(3);

// Knuth's dancing-links exact cover. Column choice is fail-first (least
// remaining rows). The budget counts row expansions; running out makes the
// result "unknown", never "none".
class Dlx {
public:
    explicit Dlx(int columns) : ncols_(columns) {
        int n = columns;
        L_.resize(n + 1);
        R_.resize(n + 1);
        U_.resize(n + 1);
        D_.resize(n + 1);
        col_.resize(n + 1);
        row_of_.assign(n + 1, -1);
        sz_.assign(n + 1, 0);
        for (int i = 0; i <= n; ++i) {
            L_[i] = i - 1;
            R_[i] = i + 1;
            U_[i] = D_[i] = i;
            col_[i] = i;
        }
        L_[0] = n;
        R_[n] = 0;
    }

    int add_row(const std::vector<int>& cols) {
        int first = -1;
        for (int c0 : cols) {
            int c = c0 + 1;
            int nd = (int)L_.size();
            L_.push_back(nd);
            R_.push_back(nd);
            U_.push_back(U_[c]);
            D_.push_back(c);
            col_.push_back(c);
            row_of_.push_back(nrows_);
            D_[U_[c]] = nd;
            U_[c] = nd;
            ++sz_[c];
            if (first < 0) first = nd;
            else {
                L_[nd] = L_[first];
                R_[nd] = first;
                R_[L_[first]] = nd;
                L_[first] = nd;
            }
        }
        return nrows_++;
    }

    // First solution in deterministic order, or nullopt. `unknown` is set
    // when the budget ran out before exhausting the tree.
    std::optional<std::vector<int>> solve(long long& budget, bool& unknown) {
        std::optional<std::vector<int>> out;
        run(budget, unknown, [&](const std::vector<int>& rows) {
            out = rows;
            return false; // stop
        });
        return out;
    }

    // Enumerate all solutions; cb returns false to stop early.
    void solve_all(long long& budget, bool& unknown,
                   const std::function<bool(const std::vector<int>&)>& cb) {
        run(budget, unknown, cb);
    }

private:
    void cover(int c) {
        R_[L_[c]] = R_[c];
        L_[R_[c]] = L_[c];
        for (int i = D_[c]; i != c; i = D_[i])
            for (int j = R_[i]; j != i; j = R_[j]) {
                U_[D_[j]] = U_[j];
                D_[U_[j]] = D_[j];
                --sz_[col_[j]];
            }
    }
    void uncover(int c) {
        for (int i = U_[c]; i != c; i = U_[i])
            for (int j = L_[i]; j != i; j = L_[j]) {
                ++sz_[col_[j]];
                U_[D_[j]] = j;
                D_[U_[j]] = j;
            }
        L_[R_[c]] = c;
        R_[L_[c]] = c;
    }

    bool run(long long& budget, bool& unknown,
             const std::function<bool(const std::vector<int>&)>& cb) {
        if (R_[0] == 0) {
            std::vector<int> rows;
            for (int nd : stack_) rows.push_back(row_of_[nd]);
            std::sort(rows.begin(), rows.end());
            return cb(rows);
        }
        int c = -1;
        for (int h = R_[0]; h != 0; h = R_[h])
            if (c < 0 || sz_[h] < sz_[c]) c = h;
        if (sz_[c] == 0) return true;
        cover(c);
        bool keep_going = true;
        for (int i = D_[c]; i != c && keep_going; i = D_[i]) {
            if (--budget < 0) {
                unknown = true;
                break;
            }
            stack_.push_back(i);
            for (int j = R_[i]; j != i; j = R_[j]) cover(col_[j]);
            keep_going = run(budget, unknown, cb);
            for (int j = L_[i]; j != i; j = L_[j]) uncover(col_[j]);
            stack_.pop_back();
        }
        uncover(c);
        return keep_going;
    }

    int ncols_, nrows_ = 0;
    std::vector<int> L_, R_, U_, D_, col_, sz_, row_of_;
    std::vector<int> stack_;
};

std::vector<int> edge_indices(const Graph& g, const Block& b, int offset) {
    std::vector<int> out;
    const auto& es = g.edges();
    for (const auto& e : b.edges()) {
        auto it = std::lower_bound(es.begin(), es.end(), e);
        if (it == es.end() || *it != e)
            throw std::logic_error("edge_indices: edge outside host");
        out.push_back(offset + (int)(it - es.begin()));
    }
    return out;
}

// lexicographic (v-n)-subsets of `labels` to drop; n >= |labels| gives one
// empty subset
std::vector<std::vector<Vertex>> dropped_subsets(const std::vector<Vertex>& labels,
                                                 int keep) {
    int v = (int)labels.size();
    int drop = v - keep;
    if (drop <= 0) return {{}};
    std::vector<std::vector<Vertex>> out;
    std::vector<int> idx(drop);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<Vertex> s;
        for (int i : idx) s.push_back(labels[i]);
        out.push_back(std::move(s));
        int i = drop - 1;
        while (i >= 0 && idx[i] == v - drop + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < drop; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<Vertex> fresh_labels(const std::vector<Vertex>& labels, int count) {
    Vertex next = labels.empty() ? 0 : labels.back() + 1;
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) out.push_back(next + i);
    return out;
}

} // namespace

DecompositionResult search_decomposition(const Graph& g, PatternKind kind,
                                         long long budget) {
    DecompositionResult res;
    if (g.edge_count() == 0) {
        res.verdict = SearchVerdict::Found;
        res.design = Design{g, kind, {}};
        return res;
    }
    if (g.edge_count() % kind.edge_count() != 0) {
        res.verdict = SearchVerdict::None; // block count arithmetic fails
        return res;
    }
    std::vector<Block> rows = pattern_copies(g, kind);
    Dlx dlx((int)g.edge_count());
    for (const Block& b : rows) dlx.add_row(edge_indices(g, b, 0));
    bool unknown = false;
    auto sol = dlx.solve(budget, unknown);
    if (sol) {
        Design d{g, kind, {}};
        for (int r : *sol) d.blocks.push_back(rows[r]);
        res.verdict = SearchVerdict::Found;
        res.design = std::move(d);
    } else {
        res.verdict = unknown ? SearchVerdict::Unknown : SearchVerdict::None;
    }
    return res;
}

DownLinkSearchResult search_downlink(const Design& d, int n, long long budget) {
    DownLinkSearchResult res;
    if (n < 3) throw std::invalid_argument("search_downlink: n >= 3 required");
    if (n % 4 != 0 && n % 4 != 1) {
        res.verdict = SearchVerdict::None; // no (K_n, P3)-design exists
        return res;
    }
    const std::vector<Vertex>& labels = d.host.vertices();
    int m = (int)d.blocks.size();
    bool any_unknown = false;

    for (const auto& drop : dropped_subsets(labels, n)) {
        std::vector<Vertex> tverts;
        for (Vertex x : labels)
            if (std::find(drop.begin(), drop.end(), x) == drop.end())
                tverts.push_back(x);
        for (Vertex x : fresh_labels(labels, n - (int)labels.size()))
            tverts.push_back(x);
        Graph target = Graph::complete_on(tverts);

        // items: one token per source block, then the target edges
        Dlx dlx(m + (int)target.edge_count());
        std::vector<Block> row_block;
        std::vector<int> row_token; // source index for image rows, -1 otherwise
        bool feasible = true;
        for (int i = 0; i < m && feasible; ++i) {
            auto imgs = pattern_copies(graph_of(d.blocks[i]), P3, drop);
            if (imgs.empty()) feasible = false;
            for (const Block& p : imgs) {
                std::vector<int> cols = edge_indices(target, p, m);
                cols.insert(cols.begin(), i);
                dlx.add_row(cols);
                row_block.push_back(p);
                row_token.push_back(i);
            }
        }
        if (!feasible) continue;
        for (const Block& q : pattern_copies(target, P3)) {
            dlx.add_row(edge_indices(target, q, m));
            row_block.push_back(q);
            row_token.push_back(-1);
        }
        bool unknown = false;
        auto sol = dlx.solve(budget, unknown);
        if (sol) {
            DownLinkCertificate c{d, Design{target, P3, {}}, {}};
            c.mapping.assign(m, -1);
            for (int r : *sol) {
                if (row_token[r] >= 0)
                    c.mapping[row_token[r]] = (int)c.target.blocks.size();
                c.target.blocks.push_back(row_block[r]);
            }
            res.verdict = SearchVerdict::Found;
            res.certificate = std::move(c);
            return res;
        }
        if (unknown) any_unknown = true;
        if (budget <= 0) break;
    }
    res.verdict = any_unknown || budget <= 0 ? SearchVerdict::Unknown
                                             : SearchVerdict::None;
    return res;
}

namespace {

// Joint search: does some (K_v, kind)-design down-link to order n?
SearchVerdict joint_eta_search(int v, PatternKind kind, int n, long long& budget,
                               std::optional<DownLinkCertificate>* witness) {
    Graph src = Graph::complete(v);
    std::vector<Vertex> labels = src.vertices();
    int ne_src = (int)src.edge_count();
    bool any_unknown = false;

    for (const auto& drop : dropped_subsets(labels, n)) {
        std::vector<Vertex> tverts;
        for (Vertex x : labels)
            if (std::find(drop.begin(), drop.end(), x) == drop.end())
                tverts.push_back(x);
        for (Vertex x : fresh_labels(labels, n - v)) tverts.push_back(x);
        Graph target = Graph::complete_on(tverts);

        Dlx dlx(ne_src + (int)target.edge_count());
        std::vector<Block> row_src, row_img;
        for (const Block& b : pattern_copies(src, kind)) {
            for (const Block& p : pattern_copies(graph_of(b), P3, drop)) {
                std::vector<int> cols = edge_indices(src, b, 0);
                for (int c : edge_indices(target, p, ne_src)) cols.push_back(c);
                dlx.add_row(cols);
                row_src.push_back(b);
                row_img.push_back(p);
            }
        }
        for (const Block& q : pattern_copies(target, P3)) {
            dlx.add_row(edge_indices(target, q, ne_src));
            row_src.emplace_back(P3, q.verts); // placeholder, unused
            row_img.push_back(q);
        }
        int n_image_rows = 0;
        // image rows precede plain rows; recount boundary
        // (row ids are insertion-ordered)
        // n_image_rows = rows added in the first loop:
        n_image_rows = (int)row_src.size() - (int)pattern_copies(target, P3).size();

        bool unknown = false;
        auto sol = dlx.solve(budget, unknown);
        if (sol) {
            if (witness) {
                DownLinkCertificate c{Design{src, kind, {}}, Design{target, P3, {}}, {}};
                for (int r : *sol) {
                    if (r < n_image_rows) {
                        c.source.blocks.push_back(row_src[r]);
                        c.mapping.push_back((int)c.target.blocks.size());
                    }
                    c.target.blocks.push_back(row_img[r]);
                }
                *witness = std::move(c);
            }
            return SearchVerdict::Found;
        }
        if (unknown) any_unknown = true;
        if (budget <= 0) break;
    }
    return any_unknown || budget <= 0 ? SearchVerdict::Unknown : SearchVerdict::None;
}

// all decompositions of K_v up to vertex relabeling (practical for v <= 6)
std::vector<Design> enumerate_designs(int v, PatternKind kind, long long& budget,
                                      bool& unknown) {
    Graph g = Graph::complete(v);
    std::vector<Design> out;
    if (g.edge_count() == 0) {
        out.push_back(Design{g, kind, {}});
        return out;
    }
    std::vector<Block> rows = pattern_copies(g, kind);
    Dlx dlx((int)g.edge_count());
    for (const Block& b : rows) dlx.add_row(edge_indices(g, b, 0));

    std::vector<std::vector<Vertex>> perms;
    std::vector<Vertex> perm(g.vertices());
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<Block>> seen;
    dlx.solve_all(budget, unknown, [&](const std::vector<int>& sol) {
        std::vector<Block> blocks;
        for (int r : sol) blocks.push_back(rows[r]);
        // canonical form: lexicographically least relabeling
        std::vector<Block> best;
        for (const auto& pm : perms) {
            std::vector<Block> mapped;
            for (const Block& b : blocks) {
                std::vector<Vertex> vs;
                for (Vertex x : b.verts) vs.push_back(pm[x]);
                mapped.emplace_back(kind, vs);
            }
            std::sort(mapped.begin(), mapped.end());
            if (best.empty() || mapped < best) best = std::move(mapped);
        }
        if (seen.insert(best).second) {
            Design d{g, kind, {}};
            d.blocks = std::move(blocks);
            out.push_back(std::move(d));
        }
        return true;
    });
    return out;
}

} // namespace

SpectrumReport exact_eta(int v, PatternKind kind, SpectrumMode mode,
                         long long budget) {
    SpectrumReport rep{kind, v, mode, {}, std::nullopt, false};
    if (!admissible_order(kind, v)) return rep;
    double bound = v >= 2 ? eta1_lower_bound(v, kind.edge_count(), 2) : 0.0;

    std::vector<Design> all;
    if (mode == SpectrumMode::Every) {
        bool unknown = false;
        all = enumerate_designs(v, kind, budget, unknown);
        if (unknown) rep.unknown = true;
        if (all.empty()) return rep;
    }

    for (int n = 3; n <= v + 3; ++n) {
        if (n % 4 != 0 && n % 4 != 1) continue;
        if ((double)n <= bound) continue; // the bound is strict
        SearchVerdict verdict;
        if (mode == SpectrumMode::Some) {
            verdict = joint_eta_search(v, kind, n, budget, nullptr);
        } else {
            verdict = SearchVerdict::Found;
            for (const Design& d : all) {
                auto r = search_downlink(d, n, budget);
                budget = std::max<long long>(budget, 0);
                if (r.verdict != SearchVerdict::Found) {
                    verdict = r.verdict;
                    break;
                }
            }
        }
        rep.entries.push_back({n, verdict});
        if (verdict == SearchVerdict::Found) {
            if (!rep.unknown) rep.eta = n;
            break;
        }
        if (verdict == SearchVerdict::Unknown) {
            rep.unknown = true;
            break;
        }
    }
    return rep;
}

} // namespace dlk
