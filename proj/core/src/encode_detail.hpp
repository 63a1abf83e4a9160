// Internal helpers shared by the CNF and pseudo-Boolean encoder sources.

#pragma once

#include "srgkit/encode.hpp"

namespace srg::detail {

// Resolves the Regularity option: degree constraints are included on
// request, and by default exactly when mu <= 1 (for mu >= 2 the pair
// conditions already force every solution regular, see the oracle module's
// exhaustive check).
bool degrees_included(const SrgParams& p, const EncodeOpts& opts);

// Every preset pair must fit inside [0, n).
void check_preset_range(const Preset* preset, int n);

// Validates the tuple and that it fits the Graph order cap; returns n as int.
int require_graph_order(const SrgParams& p);

}  // namespace srg::detail
