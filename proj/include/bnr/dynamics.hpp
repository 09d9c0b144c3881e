#pragma once

#include <cstdint>
#include <vector>

#include "bnr/fixed_points.hpp"
#include "bnr/network.hpp"
#include "bnr/subhypercube.hpp"
#include "bnr/unate.hpp"

namespace bnr {

struct MpOptions {
    // Configuration-space scans (fixed points, minimal trap spaces).
    int config_scan_bound = 24;
    bool parallel = true;
};

// Most Permissive semantics of one locally-monotone network: trap-space
// closure, smallest trap space TS(x), minimal trap spaces (the MP
// attractors), attractor membership and reachability.
//
// Construction certifies unateness of every local function and keeps the
// sign vectors, which make the escape test a single extremal evaluation.
// Instances are immutable and safe to share across threads.
class MpDynamics {
public:
    explicit MpDynamics(BooleanNetwork f, MpOptions opts = {}); // throws not_unate

    // Perturbed copy f/P reusing the base certificates: perturbed rules
    // become constants, all other sign vectors carry over.
    MpDynamics(const MpDynamics& base, const PartialAssignment& perturbation);

    const BooleanNetwork& network() const { return f_; }
    const MpOptions& options() const { return opts_; }
    const SignVector& signs(int i) const { return signs_[static_cast<std::size_t>(i)]; }

    // True iff some vertex y of c(h) has f_i(y) = b. Decided by evaluating
    // f_i at the single extremal vertex that pushes every free regulator
    // toward b.
    bool escape_exists(const Subhypercube& h, int i, bool b) const;

    // Same question by enumerating the free regulators of f_i; kept as the
    // second route for property tests.
    bool escape_exists_enumerative(const Subhypercube& h, int i, bool b) const;

    // h is closed under f: no fixed coordinate can escape.
    bool is_trap_space(const Subhypercube& h) const;

    // TS(x): smallest trap space containing x, obtained by freeing escaping
    // coordinates until stable (at most n passes of n escape checks).
    Subhypercube smallest_trap_space(const Configuration& x) const;

    std::vector<Configuration> fixed_points() const;
    std::vector<Configuration> fixed_points(const Subhypercube& within) const;

    // Minimal trap spaces = MP attractors, via the smallest trap space of
    // every configuration followed by a minimality filter. Deterministic
    // order (0 < 1 < * component-wise) regardless of thread count.
    std::vector<Subhypercube> minimal_trap_spaces() const;

    // x belongs to an MP attractor iff TS(y) = TS(x) for every vertex y of
    // TS(x).
    bool in_attractor(const Configuration& x) const;

    // An attractor A is reachable from x iff A is contained in TS(x).
    bool attractor_reachable(const Configuration& x, const Subhypercube& attractor) const;

private:
    BooleanNetwork f_;
    MpOptions opts_;
    std::vector<SignVector> signs_;

    bool escape_with_buffer(const Subhypercube& h, int i, bool b,
                            std::vector<std::uint8_t>& buf) const;
    Subhypercube smallest_trap_space_buf(const Configuration& x,
                                         std::vector<std::uint8_t>& buf) const;

    std::vector<Subhypercube> minimal_trap_spaces_scan(bool parallel) const;
};

} // namespace bnr
