#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bnr/network.hpp"
#include "bnr/reprogram.hpp"
#include "bnr/unate.hpp"

namespace bnr {

// Domain of locally-monotone networks defined by an influence graph: every
// f with G(f) included in `graph` (equal to it when `exact`), each local
// function an irredundant monotone DNF over the signed regulators.
struct ImplicitDomain {
    InfluenceGraph graph;
    bool exact = false;
    std::optional<int> max_clauses;      // cap on DNF clauses per function
    long long max_networks = 100000;     // enumeration cap
};

using ExplicitDomain = std::vector<BooleanNetwork>;
using Domain = std::variant<ExplicitDomain, ImplicitDomain>;

// Canonical, duplicate-free member list. Implicit domains require in-degree
// <= 4; exceeding the in-degree or network cap raises domain_too_large.
std::vector<BooleanNetwork> enumerate_domain(const Domain& domain);

// Minimal trap spaces of each member, indexed like enumerate_domain.
std::vector<std::vector<Subhypercube>> domain_attractors(const Domain& domain,
                                                         const MpOptions& opts = {});

enum class Quantifier { existential, universal };

// Ensemble reprogramming: a perturbation qualifies when it solves the
// per-network problem for at least one member (existential) or for every
// member (universal). Fixed-point problems use the existence clause only in
// the existential case; universal fixed-point reprogramming never requires
// a fixed point to exist. A source turns P1 into P2 and P3 into P4.
SolutionSet solve_ensemble(const Domain& domain, Quantifier quantifier, Problem problem,
                           const std::optional<PartialAssignment>& source,
                           const PartialAssignment& marker, int k,
                           const SolveOptions& opts = {});

SolutionSet solve_existential_fixpoints(const Domain& domain, const PartialAssignment& marker,
                                        int k, const SolveOptions& opts = {});
SolutionSet solve_universal_fixpoints(const Domain& domain, const PartialAssignment& marker,
                                      int k, const SolveOptions& opts = {});
SolutionSet solve_universal_attractors(const Domain& domain, const PartialAssignment& marker,
                                       int k, const SolveOptions& opts = {});

// Complement verification for universal attractors: a perturbation is bad
// for the ensemble when it is bad for at least one member; the result is the
// minimality-filtered complement of the bad set.
SolutionSet solve_universal_attractors_complement(const Domain& domain,
                                                  const PartialAssignment& marker, int k,
                                                  const SolveOptions& opts = {});

// ---- Loading -------------------------------------------------------------

// Multi-model text: blocks separated by `--- name` lines.
std::vector<std::pair<std::string, BooleanNetwork>> parse_multi_model(const std::string& text);
std::string serialize_multi_model(const std::vector<BooleanNetwork>& members);

// Edge list, one `source sign target` per line with sign in
// {+1, -1, +, -, 1}; `#` comments and blank lines are skipped. Nodes are
// ordered by first appearance.
InfluenceGraph parse_edge_list(const std::string& text);

} // namespace bnr
