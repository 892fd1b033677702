#pragma once

#include "dlk/design.hpp"

#include <string>
#include <variant>
#include <vector>

namespace dlk {

// Base blocks over a group whose differences cover G \ H exactly once.
// Group elements are encoded as integer labels (Z_m: residues;
// Z_8 x Z_m: (j,c) -> 8c + j).
struct DifferenceFamily {
    int group_order = 0;
    std::string description;
    std::vector<int> subgroup;      // labels of H
    std::vector<Block> base_blocks;
    std::vector<int> differences;   // ΔF, sorted
};

// Throws std::runtime_error if ΔF does not equal G \ H as a multiset.
void validate_difference_family(const DifferenceFamily& f);

// Cyclic kite family on Z_{8t+1}: base kites [2i-1, 3t+i, 0 ⋈ 2i].
DifferenceFamily kite_cyclic_family(int t);
// Kite design on K_{8t+1} developed from the cyclic family; t(8t+1) blocks.
Design kite_cyclic_design(int t);

// (Z_8 x Z_m, Z_8 x {0}, kite, 1)-DF for odd m = 2n+1.
DifferenceFamily kite_multipartite_family(int m);
// Kite design on K_{m x 8} (parts {8c..8c+7}) developed from the family.
Design kite_multipartite_design(int m);

// Kite design on K_v (v ≡ 1 mod 8) with vertex 0 of degree 2 in every
// block containing it.
Design kite_degree2_design(int v);

enum class StarProfile { Any, OneNonCenter, OneNonCenterOneSingle };

// (K_v, S_k)-design realized as an edge orientation with out-degrees
// multiples of k; profile pins the center-multiplicity shape.
Design star_design(int v, int k, StarProfile profile = StarProfile::Any);

// Number of stars centered at each vertex of a star design.
std::vector<int> star_center_multiplicities(const Design& d);

// The local re-centering move: eliminates the unique non-center vertex
// when v > 2k. Returns the design unchanged when every vertex centers a star.
Design recenter_star_design(const Design& d);

// Triangle decomposition of K_v (Bose for v ≡ 3, Skolem for v ≡ 1 mod 6).
Design steiner_triple_system(int v);

// P4 design on K_v with vertex 0 of degree 1 in every block containing it.
// Supported: v ≡ 1, 6, 9, 10 (mod 12), v >= 6.
Design p4_pendant_design(int v);

// The glued certificate behind p4_pendant_design: K_v (P4) down-linked to
// K_{v-1} on labels {1..v-1} (P3).
DownLinkCertificate p4_pendant_certificate(int v);

// Rewires two blocks so that no vertex has degree 1 in all its blocks.
Design p4_saturate_design(const Design& d);

using Fixture = std::variant<Design, DownLinkCertificate>;

// The verbatim objects used as test anchors, by stable name.
Fixture fixture_designs(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace dlk
