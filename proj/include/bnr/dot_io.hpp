#pragma once

#include <string>

#include "bnr/network.hpp"
#include "bnr/stg.hpp"
#include "bnr/unate.hpp"

namespace bnr {

// DOT rendering with signed edge styling: attribute `sign`, arrowhead
// `normal` for +1 and `tee` for -1. Output is deterministic.
std::string to_dot(const InfluenceGraph& g);

// Nodes labelled by their configuration bit string.
std::string to_dot(const AsyncStg& stg);

} // namespace bnr
