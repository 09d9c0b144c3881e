#include "bnr/unate.hpp"

#include <algorithm>

#include "bnr/errors.hpp"

namespace bnr {

namespace {

// Scans all co-assignments of support \ {j} and reports whether f_i ever
// increases or decreases when x_j flips 0 -> 1. The scan is exponential in
// the syntactic in-degree only.
struct PolarityScan {
    bool increases = false;
    bool decreases = false;
};

PolarityScan scan_polarity(const BooleanNetwork& f, int i, int j)
{
    const std::vector<int>& sup = f.support(i);
    std::vector<int> others;
    others.reserve(sup.size());
    for (int v : sup)
        if (v != j)
            others.push_back(v);
    const int m = static_cast<int>(others.size());
    if (m > 26)
        fail(ErrorCode::too_large,
             "in-degree " + std::to_string(m + 1) + " of '" + f.component_name(i) +
                 "' exceeds the unateness scan limit");

    PolarityScan r;
    Configuration cfg(f.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (int t = 0; t < m; ++t)
            cfg.set(others[static_cast<std::size_t>(t)], ((mask >> t) & 1u) != 0);
        cfg.set(j, false);
        const bool v0 = f.evaluate_local(i, cfg);
        cfg.set(j, true);
        const bool v1 = f.evaluate_local(i, cfg);
        if (v1 && !v0)
            r.increases = true;
        else if (v0 && !v1)
            r.decreases = true;
        if (r.increases && r.decreases)
            break;
    }
    return r;
}

} // namespace

std::optional<SignVector> unateness_certificate(const BooleanNetwork& f, int i)
{
    SignVector signs(static_cast<std::size_t>(f.size()), Sign::unused);
    for (int j : f.support(i)) {
        const PolarityScan r = scan_polarity(f, i, j);
        if (r.increases && r.decreases)
            return std::nullopt;
        if (r.increases)
            signs[static_cast<std::size_t>(j)] = Sign::positive;
        else if (r.decreases)
            signs[static_cast<std::size_t>(j)] = Sign::negative;
    }
    return signs;
}

bool is_locally_monotone(const BooleanNetwork& f)
{
    for (int i = 0; i < f.size(); ++i)
        if (!unateness_certificate(f, i))
            return false;
    return true;
}

InfluenceGraph influence_graph(const BooleanNetwork& f)
{
    InfluenceGraph g;
    g.nodes = f.components();
    for (int target = 0; target < f.size(); ++target) {
        for (int source : f.support(target)) {
            const PolarityScan r = scan_polarity(f, target, source);
            if (r.increases)
                g.edges.push_back({f.component_name(source), +1, f.component_name(target)});
            if (r.decreases)
                g.edges.push_back({f.component_name(source), -1, f.component_name(target)});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const InfluenceEdge& a, const InfluenceEdge& b) {
                  return std::tie(a.source, a.target, a.sign) <
                         std::tie(b.source, b.target, b.sign);
              });
    return g;
}

bool InfluenceGraph::has_edge(const std::string& source, int sign,
                              const std::string& target) const
{
    return std::any_of(edges.begin(), edges.end(), [&](const InfluenceEdge& e) {
        return e.source == source && e.sign == sign && e.target == target;
    });
}

} // namespace bnr
