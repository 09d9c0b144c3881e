#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnr/network.hpp"

namespace bnr {

enum class Sign : std::int8_t { negative = -1, unused = 0, positive = 1 };

// Per-regulator polarity of one local function, indexed by component.
// A component outside the rule's semantic support is `unused`.
using SignVector = std::vector<Sign>;

// Semantic unateness check of f_i: for every syntactic variable j, all
// 2^(m-1) co-assignments of the other variables are scanned. Returns the
// certificate, or nullopt when some variable occurs with both polarities.
std::optional<SignVector> unateness_certificate(const BooleanNetwork& f, int i);

bool is_locally_monotone(const BooleanNetwork& f);

struct InfluenceEdge {
    std::string source;
    int sign; // +1 or -1
    std::string target;

    friend bool operator==(const InfluenceEdge&, const InfluenceEdge&) = default;
};

// Signed digraph of semantic dependencies. Nodes stay in declaration order;
// edges are sorted by (source, target, sign). A pair of components may carry
// both signs via two edges (only for non-unate rules).
struct InfluenceGraph {
    std::vector<std::string> nodes;
    std::vector<InfluenceEdge> edges;

    bool has_edge(const std::string& source, int sign, const std::string& target) const;

    friend bool operator==(const InfluenceGraph&, const InfluenceGraph&) = default;
};

InfluenceGraph influence_graph(const BooleanNetwork& f);

} // namespace bnr
