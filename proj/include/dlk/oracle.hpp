#pragma once

#include "dlk/design.hpp"

#include <optional>
#include <vector>

namespace dlk {

enum class SearchVerdict { Found, None, Unknown };

struct DecompositionResult {
    SearchVerdict verdict = SearchVerdict::None;
    std::optional<Design> design; // present iff Found
};

struct DownLinkSearchResult {
    SearchVerdict verdict = SearchVerdict::None;
    std::optional<DownLinkCertificate> certificate; // present iff Found
};

inline constexpr long long kDefaultBudget = 10'000'000;

// Exact-cover backtracking over all canonical pattern copies in g.
// Unknown means the node budget ran out before a verdict.
DecompositionResult search_decomposition(const Graph& g, PatternKind kind,
                                         long long budget = kDefaultBudget);

// Does d down-link to some P3-design of order n? The target vertex set is
// an n-subset of the source labels (n < v, subsets tried lexicographically)
// or all source labels plus fresh ones (n >= v).
DownLinkSearchResult search_downlink(const Design& d, int n,
                                     long long budget = kDefaultBudget);

enum class SpectrumMode { Some, Every };

struct SpectrumEntry {
    int n = 0;
    SearchVerdict verdict = SearchVerdict::None;
};

struct SpectrumReport {
    PatternKind pattern;
    int v = 0;
    SpectrumMode mode = SpectrumMode::Some;
    std::vector<SpectrumEntry> entries; // ascending candidate orders
    std::optional<int> eta;             // least Found order, if established
    bool unknown = false;               // a budget-bound entry blocks the verdict
};

// mode Some: η1 — least admissible n such that some (K_v, kind)-design
// down-links to order n. mode Every: η2 — least n every design reaches
// (designs enumerated up to relabeling; intended for v <= 6).
SpectrumReport exact_eta(int v, PatternKind kind, SpectrumMode mode,
                         long long budget = kDefaultBudget);

} // namespace dlk
