#pragma once

#include "dlk/graph.hpp"

#include <string>
#include <vector>

namespace dlk {

// A claimed Γ-decomposition of a host graph.
struct Design {
    Graph host;
    PatternKind pattern;
    std::vector<Block> blocks;

    bool operator==(const Design&) const = default;
};

struct VerifyReport {
    std::vector<std::string> violations;
    std::size_t block_count = 0;
    bool ok() const { return violations.empty(); }
};

// Reports duplicate edges, uncovered edges and wrong-pattern blocks.
// Never throws; an empty report means the design is valid.
VerifyReport verify_design(const Design& d);

// Down-link certificate: mapping[i] is the target-block index that is the
// image of source block i. The map must be injective and satisfy
// f(B) <= B for every pair.
struct DownLinkCertificate {
    Design source;
    Design target;
    std::vector<int> mapping;

    bool operator==(const DownLinkCertificate&) const = default;
};

VerifyReport verify_downlink(const DownLinkCertificate& c);

// Arithmetic existence condition for a (K_v, Γ)-design of order v.
// Orders 0 and 1 are trivially admissible (empty design).
bool admissible_order(PatternKind pattern, int v);

// The strict lower bound (v-1)·sqrt(|E(Γ')| / |E(Γ)|) on η1.
double eta1_lower_bound(int v, int gamma_edges, int gamma_prime_edges);

// Least n >= from with n ≡ 0,1 (mod 4).
int next_p3_admissible(int from);

// Orders {m >= eta : m ≡ 0,1 (mod 4)}, truncated to `count` entries.
std::vector<int> p3_admissible_orders_from(int eta, int count);

// Glue per-part certificates into one: sources must be pairwise
// edge-disjoint, likewise targets; hosts are unioned. Throws if any piece
// fails verification or if hosts overlap.
DownLinkCertificate glue_downlinks(const std::vector<DownLinkCertificate>& pieces);

} // namespace dlk
