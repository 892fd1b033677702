#pragma once

#include "dlk/graph.hpp"

#include <optional>
#include <vector>

namespace dlk {

struct P3Partition {
    std::vector<Block> paths;          // edge-disjoint P3 blocks
    std::optional<Edge> leftover;      // present iff |E| is odd
};

// Partition the edges of a connected graph into P3's, plus one leftover
// edge when the edge count is odd. Isolated vertices are ignored.
// Throws on disconnected input (more than one edge-bearing component).
P3Partition p3_partition(const Graph& g);

struct ComponentP3Report {
    std::vector<Vertex> component;     // vertex set of the component
    P3Partition partition;
    bool even;                         // component edge count parity
};

struct P3ComponentsReport {
    std::vector<ComponentP3Report> components;
    bool exact;                        // true iff every component is even
    std::vector<Block> all_paths() const;
};

P3ComponentsReport p3_partition_components(const Graph& g);

} // namespace dlk
