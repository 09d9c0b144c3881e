#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bnr/dynamics.hpp"
#include "bnr/network.hpp"
#include "bnr/types.hpp"

namespace bnr {

// x matches marker M: every marked component agrees.
bool matches(const Configuration& x, const PartialAssignment& marker,
             const BooleanNetwork& f);

// Attractor m matches M: every marked component is fixed to the marked
// value (a free coordinate never matches).
bool attractor_matches(const Subhypercube& attractor, const PartialAssignment& marker,
                       const BooleanNetwork& f);

// Every map of size 0..k over components \ exclude, grouped by increasing
// size, each size class in lexicographic (name, value) order.
std::vector<PartialAssignment> candidate_perturbations(
    const std::vector<std::string>& components, int k,
    const std::set<std::string>& exclude = {});

// Keeps P iff no other element is a strict submap of P; result in
// (size, name, value) order.
std::vector<PartialAssignment> minimal_filter(const std::vector<PartialAssignment>& raw);

using SolutionSet = std::vector<PartialAssignment>;

struct SolveStats {
    std::uint64_t candidates_total = 0;      // full M^{<=k} count
    std::uint64_t predicates_evaluated = 0;  // checks actually run
    std::uint64_t evaluated_at_first_solution = 0;
    bool found_any = false;
};

struct SolveOptions {
    std::set<std::string> exclude;  // uncontrollable components
    bool ensure_exists = true;      // P1/P2 fixed-point existence clause
    bool parallel = true;
    int completion_bound = 12;      // 2^bound completions of a partial source
    MpOptions dynamics{};
    // Streaming: invoked for each minimal solution, in final output order,
    // before enumeration finishes.
    std::function<void(const PartialAssignment&)> on_solution;
    SolveStats* stats = nullptr;
};

// Decision predicates, one per reprogramming problem. The source z must be
// total here; partial sources are handled by the solvers.
bool is_p1_solution(const BooleanNetwork& f, const PartialAssignment& marker,
                    const PartialAssignment& perturbation, bool ensure_exists,
                    const MpOptions& dyn = {});
bool is_p2_solution(const BooleanNetwork& f, const Configuration& source,
                    const PartialAssignment& marker, const PartialAssignment& perturbation,
                    bool ensure_exists = true, const MpOptions& dyn = {});
bool is_p3_solution(const BooleanNetwork& f, const PartialAssignment& marker,
                    const PartialAssignment& perturbation, const MpOptions& dyn = {});
bool is_p4_solution(const BooleanNetwork& f, const Configuration& source,
                    const PartialAssignment& marker, const PartialAssignment& perturbation,
                    const MpOptions& dyn = {});

// Complement framing: P is bad iff some configuration of some attractor of
// f/P violates M (restricted to attractors reachable from z for P4). These
// scan configurations through the attractor-membership test, independently
// of the minimal-trap-space enumeration used by the direct predicates.
bool bad_perturbation_p3(const BooleanNetwork& f, const PartialAssignment& marker,
                         const PartialAssignment& perturbation, const MpOptions& dyn = {});
bool bad_perturbation_p4(const BooleanNetwork& f, const Configuration& source,
                         const PartialAssignment& marker, const PartialAssignment& perturbation,
                         const MpOptions& dyn = {});

// Subset-minimal perturbations of size <= k solving each problem. Solutions
// stream size class by size class; accepted solutions prune their supersets.
// A partial source (P2/P4) is satisfied when at least one total completion
// satisfies the predicate.
SolutionSet solve_p1(const BooleanNetwork& f, const PartialAssignment& marker, int k,
                     const SolveOptions& opts = {});
SolutionSet solve_p2(const BooleanNetwork& f, const PartialAssignment& source,
                     const PartialAssignment& marker, int k, const SolveOptions& opts = {});
SolutionSet solve_p3(const BooleanNetwork& f, const PartialAssignment& marker, int k,
                     const SolveOptions& opts = {});
SolutionSet solve_p4(const BooleanNetwork& f, const PartialAssignment& source,
                     const PartialAssignment& marker, int k, const SolveOptions& opts = {});

// Complement-of-bad verification mode: enumerates every candidate, removes
// the bad ones, then applies the minimality filter. Must agree with the
// direct solvers.
SolutionSet solve_p3_complement(const BooleanNetwork& f, const PartialAssignment& marker,
                                int k, const SolveOptions& opts = {});
SolutionSet solve_p4_complement(const BooleanNetwork& f, const PartialAssignment& source,
                                const PartialAssignment& marker, int k,
                                const SolveOptions& opts = {});

enum class Problem { p1, p2, p3, p4 };

struct ReprogramQuery {
    PartialAssignment marker;
    int max_size = 0; // k
    std::set<std::string> exclude;
    std::optional<PartialAssignment> source; // required for P2/P4
    bool ensure_exists = true;               // P1/P2 only
    Problem problem = Problem::p1;
};

SolutionSet solve(const BooleanNetwork& f, const ReprogramQuery& query,
                  const SolveOptions& opts = {});

// Shared size-ordered enumeration engine. `predicate` must be a pure
// function; candidate checks run in parallel with a deterministic ordered
// merge when enabled.
SolutionSet enumerate_minimal_solutions(
    const std::vector<std::string>& components, int k, const std::set<std::string>& exclude,
    const std::function<bool(const PartialAssignment&)>& predicate, bool parallel,
    const std::function<void(const PartialAssignment&)>& on_solution = nullptr,
    SolveStats* stats = nullptr);

} // namespace bnr
