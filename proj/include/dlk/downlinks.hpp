#pragma once

#include "dlk/design.hpp"

namespace dlk {

// Each operation returns a certificate that passes verify_downlink, built by
// the deterministic recipe of the corresponding theorem. Throws
// std::invalid_argument when a structural precondition fails and
// std::runtime_error when a recipe step cannot be completed.

// Any pattern containing a P3; target order at most v+3.
DownLinkCertificate downlink_general(const Design& d);

// Dense patterns only: needs >= 3 vertices of degree >= 4 (target v-1) or
// >= 5 of degree >= 6 (target v-3) in the pattern graph.
DownLinkCertificate downlink_reduced(const Design& d);

DownLinkCertificate downlink_star(const Design& d);
// minimal=true needs a vertex of degree 2 in every block containing it.
DownLinkCertificate downlink_kite(const Design& d, bool minimal);
DownLinkCertificate downlink_cycle(const Design& d);
DownLinkCertificate downlink_path(const Design& d);

// Dispatch on the pattern family; `minimal` applies to kite designs only.
DownLinkCertificate downlink(const Design& d, bool minimal = false);

// Vertex count of the certificate's target host.
int target_order(const DownLinkCertificate& c);

} // namespace dlk
