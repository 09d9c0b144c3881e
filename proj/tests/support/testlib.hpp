#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bnr/dynamics.hpp"
#include "bnr/network.hpp"
#include "bnr/reprogram.hpp"
#include "bnr/subhypercube.hpp"
#include "bnr/types.hpp"

namespace bnrtest {

// ---- Example networks from the worked examples ----------------------------

bnr::BooleanNetwork example1(); // A<-B, B<-!A, C<-!A&B
bnr::BooleanNetwork example2(); // A<-B, B<-A, C<-!D&(A|B), D<-!C
bnr::BooleanNetwork example3(); // 5 components, two attractors
bnr::BooleanNetwork network_g(); // A<-!B, B<-A, C<-A&B, D<-C

// ---- Independent brute-force oracles ---------------------------------------
// These only use rule evaluation, never the escape test, the trap-space
// closure, or the solver engine they are checking.

// All 3^n sub-hypercubes closed under f (vertex-by-vertex check).
std::vector<bnr::Subhypercube> closed_subhypercubes(const bnr::BooleanNetwork& f);

// The containment-minimal closed sub-hypercubes.
std::vector<bnr::Subhypercube> trap_space_oracle(const bnr::BooleanNetwork& f);

// Containment-minimum closed sub-hypercube containing x, from a precomputed
// closed set.
bnr::Subhypercube minimum_closed_containing(const std::vector<bnr::Subhypercube>& closed,
                                            const bnr::Configuration& x);

// Fixed points by scanning all 2^n configurations.
std::vector<bnr::Configuration> naive_fixed_points(const bnr::BooleanNetwork& f);

// Exists y in c(h) with f_i(y) = b, by full vertex enumeration.
bool naive_escape(const bnr::BooleanNetwork& f, const bnr::Subhypercube& h, int i, bool b);

// TS(x) recomputed with an arbitrary component scan order (for the
// order-independence property); uses only the escape test of `dyn`.
bnr::Subhypercube trap_space_with_order(const bnr::MpDynamics& dyn,
                                        const bnr::Configuration& x,
                                        const std::vector<int>& order);

// minimal_filter of the predicate over every candidate (no pruning, no
// engine).
std::vector<bnr::PartialAssignment> exhaustive_solutions(
    const bnr::BooleanNetwork& f, int k, const std::set<std::string>& exclude,
    const std::function<bool(const bnr::PartialAssignment&)>& predicate);

// ---- Random locally-monotone networks --------------------------------------

bnr::BooleanNetwork random_unate_network(std::mt19937& rng, int n, int max_in_degree);

bnr::Configuration random_configuration(std::mt19937& rng, int n);

// ---- Misc ------------------------------------------------------------------

bool semantically_equal(const bnr::BooleanNetwork& f, const bnr::BooleanNetwork& g);

// Canonical multiset of JSON dumps, for order-insensitive comparisons.
std::multiset<std::string> solution_strings(const std::vector<bnr::PartialAssignment>& sols);

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI binary with the given argument string, capturing stdout.
CliResult run_cli(const std::string& args);

// JSON documents of the output, one per line, as a canonical multiset.
std::multiset<std::string> json_lines(const std::string& out);

} // namespace bnrtest
