#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bnr/network.hpp"

namespace bnr {

// Fully-asynchronous state transition graph: one edge x -> x[i := f_i(x)]
// per component i with f_i(x) != x_i. Nodes are configuration codes.
struct AsyncStg {
    int n = 0;
    std::vector<std::uint64_t> nodes;                           // ascending
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges; // ascending

    std::vector<Configuration> fixed_points() const; // nodes without successors
};

struct StgOptions {
    // With no initial configuration the full 2^n graph is built (n bounded);
    // otherwise a reachability closure from `init`, bounded by node count.
    int bound = 16;
};

AsyncStg async_stg(const BooleanNetwork& f,
                   const std::optional<Configuration>& init = std::nullopt,
                   const StgOptions& opts = {});

} // namespace bnr
