#include "dlk/design.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace dlk {

VerifyReport verify_design(const Design& d) {
    VerifyReport r;
    r.block_count = d.blocks.size();
    std::map<Edge, int> cover;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        if (b.kind != d.pattern)
            r.violations.push_back("block " + std::to_string(i) + " has pattern " +
                                   b.kind.name() + ", design pattern is " +
                                   d.pattern.name());
        for (const auto& e : b.edges()) {
            if (!d.host.has_edge(e))
                r.violations.push_back("block " + std::to_string(i) + " uses edge {" +
                                       std::to_string(e.first) + "," +
                                       std::to_string(e.second) +
                                       "} outside the host");
            if (++cover[e] == 2)
                r.violations.push_back("edge {" + std::to_string(e.first) + "," +
                                       std::to_string(e.second) +
                                       "} covered more than once");
        }
    }
    for (const auto& e : d.host.edges())
        if (!cover.count(e))
            r.violations.push_back("edge {" + std::to_string(e.first) + "," +
                                   std::to_string(e.second) + "} not covered");
    return r;
}

VerifyReport verify_downlink(const DownLinkCertificate& c) {
    VerifyReport r;
    r.block_count = c.source.blocks.size();
    VerifyReport rs = verify_design(c.source);
    for (auto& v : rs.violations) r.violations.push_back("source: " + v);
    VerifyReport rt = verify_design(c.target);
    for (auto& v : rt.violations) r.violations.push_back("target: " + v);

    if (c.mapping.size() != c.source.blocks.size()) {
        r.violations.push_back("mapping length " + std::to_string(c.mapping.size()) +
                               " != source block count " +
                               std::to_string(c.source.blocks.size()));
        return r;
    }
    std::set<int> used;
    for (std::size_t i = 0; i < c.mapping.size(); ++i) {
        int j = c.mapping[i];
        if (j < 0 || j >= (int)c.target.blocks.size()) {
            r.violations.push_back("mapping[" + std::to_string(i) +
                                   "] out of range: " + std::to_string(j));
            continue;
        }
        if (!used.insert(j).second)
            r.violations.push_back("mapping not injective at target index " +
                                   std::to_string(j));
        const Block& image = c.target.blocks[j];
        if (!contains_block(graph_of(c.source.blocks[i]), image))
            r.violations.push_back("image of source block " + std::to_string(i) +
                                   " (" + image.to_string() +
                                   ") is not a subgraph of " +
                                   c.source.blocks[i].to_string());
    }
    return r;
}

bool admissible_order(PatternKind pattern, int v) {
    if (v < 0) throw std::invalid_argument("admissible_order: negative order");
    if (v <= 1) return true; // empty design
    long long pairs = (long long)v * (v - 1);
    switch (pattern.family) {
        case PatternFamily::Path:
            return v >= pattern.k && pairs % (2 * (pattern.k - 1)) == 0;
        case PatternFamily::Star:
            return v >= 2 * pattern.k && pairs % (2 * pattern.k) == 0;
        case PatternFamily::Cycle:
            return v >= pattern.k && v % 2 == 1 && pairs % (2 * pattern.k) == 0;
        case PatternFamily::Kite:
            return v % 8 == 0 || v % 8 == 1;
    }
    return false;
}

double eta1_lower_bound(int v, int gamma_edges, int gamma_prime_edges) {
    if (gamma_prime_edges < 1 || gamma_edges < gamma_prime_edges)
        throw std::invalid_argument("eta1_lower_bound: need e >= e' >= 1");
    if (v < 2) throw std::invalid_argument("eta1_lower_bound: need v >= 2");
    return (v - 1) * std::sqrt((double)gamma_prime_edges / (double)gamma_edges);
}

int next_p3_admissible(int from) {
    int n = std::max(from, 0);
    while (n % 4 != 0 && n % 4 != 1) ++n;
    return n;
}

std::vector<int> p3_admissible_orders_from(int eta, int count) {
    std::vector<int> out;
    int n = next_p3_admissible(eta);
    while ((int)out.size() < count) {
        out.push_back(n);
        n = next_p3_admissible(n + 1);
    }
    return out;
}

DownLinkCertificate glue_downlinks(const std::vector<DownLinkCertificate>& pieces) {
    if (pieces.empty())
        throw std::invalid_argument("glue_downlinks: no pieces");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        VerifyReport r = verify_downlink(pieces[i]);
        if (!r.ok())
            throw std::invalid_argument("glue_downlinks: piece " + std::to_string(i) +
                                        " invalid: " + r.violations.front());
        if (pieces[i].source.pattern != pieces.front().source.pattern ||
            pieces[i].target.pattern != pieces.front().target.pattern)
            throw std::invalid_argument("glue_downlinks: pattern mismatch across pieces");
    }
    std::vector<Graph> src_hosts, tgt_hosts;
    for (const auto& p : pieces) {
        src_hosts.push_back(p.source.host);
        tgt_hosts.push_back(p.target.host);
    }
    DownLinkCertificate out;
    out.source.host = union_graphs(src_hosts); // throws if hosts overlap
    out.target.host = union_graphs(tgt_hosts);
    out.source.pattern = pieces.front().source.pattern;
    out.target.pattern = pieces.front().target.pattern;
    int tgt_offset = 0;
    for (const auto& p : pieces) {
        out.source.blocks.insert(out.source.blocks.end(), p.source.blocks.begin(),
                                 p.source.blocks.end());
        out.target.blocks.insert(out.target.blocks.end(), p.target.blocks.begin(),
                                 p.target.blocks.end());
        for (int j : p.mapping) out.mapping.push_back(j + tgt_offset);
        tgt_offset += (int)p.target.blocks.size();
    }
    return out;
}

} // namespace dlk
