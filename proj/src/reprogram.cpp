#include "bnr/reprogram.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "bnr/errors.hpp"

namespace bnr {

bool matches(const Configuration& x, const PartialAssignment& marker,
             const BooleanNetwork& f)
{
    for (const auto& [name, value] : marker)
        if (x.get(f.require_index(name)) != value)
            return false;
    return true;
}

bool attractor_matches(const Subhypercube& attractor, const PartialAssignment& marker,
                       const BooleanNetwork& f)
{
    for (const auto& [name, value] : marker) {
        const Tri t = attractor.get(f.require_index(name));
        if (t != (value ? Tri::one : Tri::zero))
            return false;
    }
    return true;
}

namespace {

std::vector<std::string> allowed_components(const std::vector<std::string>& components,
                                            const std::set<std::string>& exclude)
{
    std::vector<std::string> allowed;
    allowed.reserve(components.size());
    for (const std::string& c : components)
        if (!exclude.contains(c))
            allowed.push_back(c);
    std::sort(allowed.begin(), allowed.end());
    return allowed;
}

// Size-j maps over `allowed` (sorted): combinations in lexicographic order,
// values counting upward with the first key most significant.
template <typename Fn>
void for_each_candidate_of_size(const std::vector<std::string>& allowed, int j, Fn&& fn)
{
    const int m = static_cast<int>(allowed.size());
    if (j > m)
        return;
    if (j == 0) {
        fn(PartialAssignment{});
        return;
    }
    std::vector<int> combo(static_cast<std::size_t>(j));
    for (int t = 0; t < j; ++t)
        combo[static_cast<std::size_t>(t)] = t;
    while (true) {
        for (std::uint32_t code = 0; code < (std::uint32_t{1} << j); ++code) {
            PartialAssignment p;
            for (int t = 0; t < j; ++t)
                p.emplace(allowed[static_cast<std::size_t>(combo[static_cast<std::size_t>(t)])],
                          ((code >> (j - 1 - t)) & 1u) != 0);
            fn(p);
        }
        int t = j - 1;
        while (t >= 0 && combo[static_cast<std::size_t>(t)] == m - j + t)
            --t;
        if (t < 0)
            break;
        ++combo[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < j; ++u)
            combo[static_cast<std::size_t>(u)] = combo[static_cast<std::size_t>(u - 1)] + 1;
    }
}

std::uint64_t candidate_count(int m, int k)
{
    std::uint64_t total = 0;
    std::uint64_t choose = 1; // C(m, j)
    for (int j = 0; j <= std::min(k, m); ++j) {
        total += choose << j;
        choose = choose * static_cast<std::uint64_t>(m - j) / static_cast<std::uint64_t>(j + 1);
    }
    return total;
}

bool has_accepted_submap(const PartialAssignment& candidate,
                         const std::vector<PartialAssignment>& accepted)
{
    return std::any_of(accepted.begin(), accepted.end(), [&](const PartialAssignment& q) {
        return is_submap(q, candidate);
    });
}

} // namespace

std::vector<PartialAssignment> candidate_perturbations(
    const std::vector<std::string>& components, int k, const std::set<std::string>& exclude)
{
    const std::vector<std::string> allowed = allowed_components(components, exclude);
    std::vector<PartialAssignment> out;
    for (int j = 0; j <= std::max(k, 0); ++j)
        for_each_candidate_of_size(allowed, j,
                                   [&](const PartialAssignment& p) { out.push_back(p); });
    return out;
}

std::vector<PartialAssignment> minimal_filter(const std::vector<PartialAssignment>& raw)
{
    std::vector<PartialAssignment> kept;
    for (const PartialAssignment& p : raw) {
        const bool dominated =
            std::any_of(raw.begin(), raw.end(), [&](const PartialAssignment& q) {
                return q.size() < p.size() && is_submap(q, p);
            });
        if (!dominated)
            kept.push_back(p);
    }
    std::sort(kept.begin(), kept.end(), assignment_less);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return kept;
}

SolutionSet enumerate_minimal_solutions(
    const std::vector<std::string>& components, int k, const std::set<std::string>& exclude,
    const std::function<bool(const PartialAssignment&)>& predicate, bool parallel,
    const std::function<void(const PartialAssignment&)>& on_solution, SolveStats* stats)
{
    const std::vector<std::string> allowed = allowed_components(components, exclude);
    if (stats) {
        *stats = SolveStats{};
        stats->candidates_total = candidate_count(static_cast<int>(allowed.size()), k);
    }

    SolutionSet accepted;
    std::vector<PartialAssignment> block;
    std::vector<char> results;
    constexpr std::size_t kBlock = 128; // streaming granularity

    auto flush_block = [&]() {
        if (block.empty())
            return;
        results.assign(block.size(), 0);
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel && block.size() > 1)
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(block.size()); ++t) {
            try {
                results[static_cast<std::size_t>(t)] =
                    predicate(block[static_cast<std::size_t>(t)]) ? 1 : 0;
            } catch (...) {
#pragma omp critical
                if (!error)
                    error = std::current_exception();
            }
        }
        if (error)
            std::rethrow_exception(error);
        for (std::size_t t = 0; t < block.size(); ++t) {
            if (stats)
                ++stats->predicates_evaluated;
            if (!results[t])
                continue;
            accepted.push_back(block[t]);
            if (stats && !stats->found_any) {
                stats->found_any = true;
                stats->evaluated_at_first_solution = stats->predicates_evaluated;
            }
            if (on_solution)
                on_solution(block[t]);
        }
        block.clear();
    };

    for (int j = 0; j <= std::max(k, 0); ++j) {
        // Pruning only ever involves strictly smaller accepted solutions, so
        // a whole size class can be gathered before evaluation.
        for_each_candidate_of_size(allowed, j, [&](const PartialAssignment& p) {
            if (!has_accepted_submap(p, accepted)) {
                block.push_back(p);
                if (block.size() >= kBlock)
                    flush_block();
            }
        });
        flush_block();
    }
    return accepted;
}

// ---- Problem predicates ----------------------------------------------------

namespace {

bool p1_check(const BooleanNetwork& perturbed, const PartialAssignment& marker,
              bool ensure_exists, const MpOptions& dyn)
{
    const auto fps =
        fixed_points(perturbed, FixedPointOptions{dyn.config_scan_bound, false});
    bool any_match = false;
    for (const Configuration& x : fps) {
        if (!matches(x, marker, perturbed))
            return false;
        any_match = true;
    }
    return !ensure_exists || any_match;
}

bool p2_check(const MpDynamics& perturbed, const Configuration& source,
              const PartialAssignment& marker, bool ensure_exists)
{
    const Subhypercube reach = perturbed.smallest_trap_space(source);
    const auto fps = bnr::fixed_points(
        perturbed.network(), reach,
        FixedPointOptions{perturbed.options().config_scan_bound, false});
    bool any_match = false;
    for (const Configuration& x : fps) {
        if (!matches(x, marker, perturbed.network()))
            return false;
        any_match = true;
    }
    return !ensure_exists || any_match;
}

bool p3_check(const MpDynamics& perturbed, const PartialAssignment& marker)
{
    for (const Subhypercube& m : perturbed.minimal_trap_spaces())
        if (!attractor_matches(m, marker, perturbed.network()))
            return false;
    return true;
}

bool p4_check(const MpDynamics& perturbed, const Configuration& source,
              const PartialAssignment& marker)
{
    const Subhypercube reach = perturbed.smallest_trap_space(source);
    for (const Subhypercube& m : perturbed.minimal_trap_spaces())
        if (subhypercube_leq(m, reach) &&
            !attractor_matches(m, marker, perturbed.network()))
            return false;
    return true;
}

// Complement route, straight from the definition: some configuration that
// violates the marker belongs to an attractor (reachable from the source for
// the P4 variant). Goes through the attractor-membership test rather than
// the trap-space enumeration.
bool bad3_check(const MpDynamics& perturbed, const PartialAssignment& marker)
{
    const int n = perturbed.network().size();
    if (n > perturbed.options().config_scan_bound)
        fail(ErrorCode::too_large, "bad-perturbation scan over " + std::to_string(n) +
                                       " components exceeds the bound");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        const Configuration x = Configuration::from_code(n, code);
        if (!matches(x, marker, perturbed.network()) && perturbed.in_attractor(x))
            return true;
    }
    return false;
}

bool bad4_check(const MpDynamics& perturbed, const Configuration& source,
                const PartialAssignment& marker)
{
    const int n = perturbed.network().size();
    if (n > perturbed.options().config_scan_bound)
        fail(ErrorCode::too_large, "bad-perturbation scan over " + std::to_string(n) +
                                       " components exceeds the bound");
    const Subhypercube reach = perturbed.smallest_trap_space(source);
    const bool all_good = reach.for_each_vertex([&](const Configuration& x) {
        return matches(x, marker, perturbed.network()) || !perturbed.in_attractor(x);
    });
    return !all_good;
}

// Total completions of a partial source, ascending in the free coordinates.
std::vector<Configuration> source_completions(const PartialAssignment& source,
                                              const BooleanNetwork& f, int bound)
{
    Subhypercube h(f.size());
    for (const auto& [i, value] : indexed_assignment(source, f))
        h.set(i, value ? Tri::one : Tri::zero);
    const int free = h.free_count();
    if (free > bound)
        fail(ErrorCode::too_large,
             "partial source leaves " + std::to_string(free) +
                 " components free, exceeding the completion bound of " +
                 std::to_string(bound));
    std::vector<Configuration> out;
    out.reserve(std::size_t{1} << free);
    h.for_each_vertex([&](const Configuration& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

void validate_names(const PartialAssignment& a, const BooleanNetwork& f)
{
    for (const auto& [name, value] : a) {
        (void)value;
        f.require_index(name);
    }
}

void validate_exclude(const std::set<std::string>& exclude, const BooleanNetwork& f)
{
    for (const std::string& name : exclude)
        f.require_index(name);
}

void require_monotone(const BooleanNetwork& f)
{
    for (int i = 0; i < f.size(); ++i)
        if (!unateness_certificate(f, i))
            fail(ErrorCode::not_unate,
                 "local function of '" + f.component_name(i) + "' is not unate");
}

MpOptions serial_inner(MpOptions dyn)
{
    // Candidate checks already run in parallel; keep the nested scans serial.
    dyn.parallel = false;
    return dyn;
}

} // namespace

bool is_p1_solution(const BooleanNetwork& f, const PartialAssignment& marker,
                    const PartialAssignment& perturbation, bool ensure_exists,
                    const MpOptions& dyn)
{
    return p1_check(f.perturbed(perturbation), marker, ensure_exists, dyn);
}

bool is_p2_solution(const BooleanNetwork& f, const Configuration& source,
                    const PartialAssignment& marker, const PartialAssignment& perturbation,
                    bool ensure_exists, const MpOptions& dyn)
{
    MpDynamics perturbed(f.perturbed(perturbation), dyn);
    return p2_check(perturbed, source, marker, ensure_exists);
}

bool is_p3_solution(const BooleanNetwork& f, const PartialAssignment& marker,
                    const PartialAssignment& perturbation, const MpOptions& dyn)
{
    MpDynamics perturbed(f.perturbed(perturbation), dyn);
    return p3_check(perturbed, marker);
}

bool is_p4_solution(const BooleanNetwork& f, const Configuration& source,
                    const PartialAssignment& marker, const PartialAssignment& perturbation,
                    const MpOptions& dyn)
{
    MpDynamics perturbed(f.perturbed(perturbation), dyn);
    return p4_check(perturbed, source, marker);
}

bool bad_perturbation_p3(const BooleanNetwork& f, const PartialAssignment& marker,
                         const PartialAssignment& perturbation, const MpOptions& dyn)
{
    MpDynamics perturbed(f.perturbed(perturbation), dyn);
    return bad3_check(perturbed, marker);
}

bool bad_perturbation_p4(const BooleanNetwork& f, const Configuration& source,
                         const PartialAssignment& marker, const PartialAssignment& perturbation,
                         const MpOptions& dyn)
{
    MpDynamics perturbed(f.perturbed(perturbation), dyn);
    return bad4_check(perturbed, source, marker);
}

// ---- Solvers ----------------------------------------------------------------

SolutionSet solve_p1(const BooleanNetwork& f, const PartialAssignment& marker, int k,
                     const SolveOptions& opts)
{
    validate_names(marker, f);
    validate_exclude(opts.exclude, f);
    require_monotone(f);
    const MpOptions dyn = serial_inner(opts.dynamics);
    auto predicate = [&](const PartialAssignment& p) {
        return p1_check(f.perturbed(p), marker, opts.ensure_exists, dyn);
    };
    return enumerate_minimal_solutions(f.components(), k, opts.exclude, predicate,
                                       opts.parallel, opts.on_solution, opts.stats);
}

SolutionSet solve_p2(const BooleanNetwork& f, const PartialAssignment& source,
                     const PartialAssignment& marker, int k, const SolveOptions& opts)
{
    validate_names(marker, f);
    validate_names(source, f);
    validate_exclude(opts.exclude, f);
    const MpOptions dyn = serial_inner(opts.dynamics);
    const MpDynamics base(f, dyn);
    const auto sources = source_completions(source, f, opts.completion_bound);
    auto predicate = [&](const PartialAssignment& p) {
        const MpDynamics perturbed(base, p);
        return std::any_of(sources.begin(), sources.end(), [&](const Configuration& z) {
            return p2_check(perturbed, z, marker, opts.ensure_exists);
        });
    };
    return enumerate_minimal_solutions(f.components(), k, opts.exclude, predicate,
                                       opts.parallel, opts.on_solution, opts.stats);
}

SolutionSet solve_p3(const BooleanNetwork& f, const PartialAssignment& marker, int k,
                     const SolveOptions& opts)
{
    validate_names(marker, f);
    validate_exclude(opts.exclude, f);
    const MpDynamics base(f, serial_inner(opts.dynamics));
    auto predicate = [&](const PartialAssignment& p) {
        return p3_check(MpDynamics(base, p), marker);
    };
    return enumerate_minimal_solutions(f.components(), k, opts.exclude, predicate,
                                       opts.parallel, opts.on_solution, opts.stats);
}

SolutionSet solve_p4(const BooleanNetwork& f, const PartialAssignment& source,
                     const PartialAssignment& marker, int k, const SolveOptions& opts)
{
    validate_names(marker, f);
    validate_names(source, f);
    validate_exclude(opts.exclude, f);
    const MpDynamics base(f, serial_inner(opts.dynamics));
    const auto sources = source_completions(source, f, opts.completion_bound);
    auto predicate = [&](const PartialAssignment& p) {
        const MpDynamics perturbed(base, p);
        return std::any_of(sources.begin(), sources.end(), [&](const Configuration& z) {
            return p4_check(perturbed, z, marker);
        });
    };
    return enumerate_minimal_solutions(f.components(), k, opts.exclude, predicate,
                                       opts.parallel, opts.on_solution, opts.stats);
}

namespace {

SolutionSet complement_solve(const BooleanNetwork& f, const PartialAssignment& marker,
                             int k, const SolveOptions& opts,
                             const std::function<bool(const MpDynamics&)>& bad)
{
    validate_names(marker, f);
    validate_exclude(opts.exclude, f);
    const MpDynamics base(f, serial_inner(opts.dynamics));
    const auto all = candidate_perturbations(f.components(), k, opts.exclude);
    std::vector<char> is_bad(all.size(), 0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(all.size()); ++t) {
        try {
            is_bad[static_cast<std::size_t>(t)] =
                bad(MpDynamics(base, all[static_cast<std::size_t>(t)])) ? 1 : 0;
        } catch (...) {
#pragma omp critical
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    std::vector<PartialAssignment> good;
    for (std::size_t t = 0; t < all.size(); ++t)
        if (!is_bad[t])
            good.push_back(all[t]);
    return minimal_filter(good);
}

} // namespace

SolutionSet solve_p3_complement(const BooleanNetwork& f, const PartialAssignment& marker,
                                int k, const SolveOptions& opts)
{
    return complement_solve(f, marker, k, opts, [&](const MpDynamics& perturbed) {
        return bad3_check(perturbed, marker);
    });
}

SolutionSet solve_p4_complement(const BooleanNetwork& f, const PartialAssignment& source,
                                const PartialAssignment& marker, int k,
                                const SolveOptions& opts)
{
    validate_names(source, f);
    const auto sources = source_completions(source, f, opts.completion_bound);
    return complement_solve(f, marker, k, opts, [&](const MpDynamics& perturbed) {
        // Bad for every completion <=> good (for the existential semantics)
        // for none.
        return std::all_of(sources.begin(), sources.end(), [&](const Configuration& z) {
            return bad4_check(perturbed, z, marker);
        });
    });
}

SolutionSet solve(const BooleanNetwork& f, const ReprogramQuery& query,
                  const SolveOptions& opts)
{
    SolveOptions o = opts;
    o.exclude = query.exclude;
    o.ensure_exists = query.ensure_exists;
    switch (query.problem) {
    case Problem::p1:
        return solve_p1(f, query.marker, query.max_size, o);
    case Problem::p2:
        if (!query.source)
            fail(ErrorCode::syntax, "source configuration required for P2");
        return solve_p2(f, *query.source, query.marker, query.max_size, o);
    case Problem::p3:
        return solve_p3(f, query.marker, query.max_size, o);
    case Problem::p4:
        if (!query.source)
            fail(ErrorCode::syntax, "source configuration required for P4");
        return solve_p4(f, *query.source, query.marker, query.max_size, o);
    }
    return {};
}

} // namespace bnr
