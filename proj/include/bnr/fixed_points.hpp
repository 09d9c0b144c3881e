#pragma once

#include <optional>
#include <vector>

#include "bnr/network.hpp"
#include "bnr/subhypercube.hpp"

namespace bnr {

struct FixedPointOptions {
    // Hard size limit for the configuration-space search.
    int config_scan_bound = 24;
    bool parallel = true;
};

// All fixed points of f, in ascending configuration order. The search walks
// partial assignments in declaration order and propagates the value of any
// component whose regulators are all assigned, so the cost scales with the
// number of undetermined components rather than 2^n. Throws too_large when
// n exceeds the configured bound.
std::vector<Configuration> fixed_points(const BooleanNetwork& f,
                                        const FixedPointOptions& opts = {});

// Fixed points lying inside the sub-hypercube `within`.
std::vector<Configuration> fixed_points(const BooleanNetwork& f,
                                        const Subhypercube& within,
                                        const FixedPointOptions& opts = {});

} // namespace bnr
