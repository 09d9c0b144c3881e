#include "bnr/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bnr/errors.hpp"

namespace bnr {

namespace {

struct RegulatorSlot {
    int source; // index into graph nodes
    int sign;   // +1 / -1
};

// All unate functions over the given signed regulators, as irredundant
// monotone DNFs: antichains of clauses, each clause a set of signed
// literals. A source may appear with one polarity only per function, so
// graphs carrying both signs on a pair spread over distinct functions.
// Enumeration order follows the family bitmask, making the listing
// canonical.
std::vector<Expr> unate_functions(const std::vector<RegulatorSlot>& slots,
                                  const std::vector<std::string>& names, bool exact,
                                  const std::optional<int>& max_clauses)
{
    const int d = static_cast<int>(slots.size());
    if (d > 4)
        fail(ErrorCode::domain_too_large,
             "in-degree " + std::to_string(d) + " exceeds the domain enumeration limit of 4");
    const int nsub = 1 << d;
    const std::uint32_t all_vars = (std::uint32_t{1} << d) - 1;

    // Sources with both polarities present.
    std::vector<std::pair<int, int>> conflicting; // slot index pairs
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (slots[static_cast<std::size_t>(a)].source ==
                slots[static_cast<std::size_t>(b)].source)
                conflicting.emplace_back(a, b);

    std::vector<Expr> out;
    for (std::uint32_t family = 0; family < (std::uint32_t{1} << nsub); ++family) {
        if (max_clauses && std::popcount(family) > *max_clauses)
            continue;
        std::vector<std::uint32_t> clauses;
        for (int s = 0; s < nsub; ++s)
            if (family & (std::uint32_t{1} << s))
                clauses.push_back(static_cast<std::uint32_t>(s));
        bool ok = true;
        for (std::size_t a = 0; a < clauses.size() && ok; ++a)
            for (std::size_t b = a + 1; b < clauses.size() && ok; ++b) {
                const std::uint32_t ca = clauses[a], cb = clauses[b];
                if ((ca & ~cb) == 0 || (cb & ~ca) == 0)
                    ok = false; // not an antichain
            }
        if (!ok)
            continue;
        std::uint32_t used = 0;
        for (std::uint32_t c : clauses)
            used |= c;
        for (const auto& [a, b] : conflicting)
            if ((used & (std::uint32_t{1} << a)) && (used & (std::uint32_t{1} << b)))
                ok = false;
        if (!ok)
            continue;
        if (exact && used != all_vars)
            continue;

        if (clauses.empty()) {
            out.push_back(Expr::constant(false));
            continue;
        }
        if (clauses.size() == 1 && clauses[0] == 0) {
            out.push_back(Expr::constant(true));
            continue;
        }
        std::vector<Expr> terms;
        for (std::uint32_t c : clauses) {
            std::vector<Expr> lits;
            for (int t = 0; t < d; ++t) {
                if (!(c & (std::uint32_t{1} << t)))
                    continue;
                const RegulatorSlot& slot = slots[static_cast<std::size_t>(t)];
                Expr v = Expr::variable(names[static_cast<std::size_t>(slot.source)]);
                lits.push_back(slot.sign > 0 ? v : Expr::negation(std::move(v)));
            }
            terms.push_back(Expr::conjunction(std::move(lits)));
        }
        out.push_back(Expr::disjunction(std::move(terms)));
    }
    return out;
}

std::vector<BooleanNetwork> enumerate_implicit(const ImplicitDomain& d)
{
    if (d.max_clauses && *d.max_clauses < 1)
        fail(ErrorCode::syntax, "max_clauses must be positive");
    const std::vector<std::string>& names = d.graph.nodes;
    const int n = static_cast<int>(names.size());

    auto index_of = [&](const std::string& name) {
        for (int i = 0; i < n; ++i)
            if (names[static_cast<std::size_t>(i)] == name)
                return i;
        fail(ErrorCode::unknown_component,
             "edge references undeclared node '" + name + "'");
    };

    std::vector<std::vector<RegulatorSlot>> regulators(static_cast<std::size_t>(n));
    for (const InfluenceEdge& e : d.graph.edges) {
        const int src = index_of(e.source);
        const int dst = index_of(e.target);
        if (e.sign != 1 && e.sign != -1)
            fail(ErrorCode::syntax, "edge sign must be +1 or -1");
        regulators[static_cast<std::size_t>(dst)].push_back({src, e.sign});
    }
    for (auto& regs : regulators)
        std::sort(regs.begin(), regs.end(), [](const RegulatorSlot& a, const RegulatorSlot& b) {
            return std::tie(a.source, a.sign) < std::tie(b.source, b.sign);
        });

    std::vector<std::vector<Expr>> options;
    options.reserve(static_cast<std::size_t>(n));
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        options.push_back(unate_functions(regulators[static_cast<std::size_t>(i)], names,
                                          d.exact, d.max_clauses));
        if (options.back().empty())
            return {}; // e.g. exact mode over a doubly-signed pair
        count *= static_cast<long long>(options.back().size());
        if (count > d.max_networks)
            fail(ErrorCode::domain_too_large,
                 "domain exceeds the cap of " + std::to_string(d.max_networks) +
                     " networks");
    }

    std::vector<BooleanNetwork> members;
    members.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<Expr> rules;
        rules.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            rules.push_back(options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
        members.push_back(BooleanNetwork::from_expressions(names, std::move(rules)));
        int i = n - 1;
        while (i >= 0 && ++pick[static_cast<std::size_t>(i)] ==
                             options[static_cast<std::size_t>(i)].size()) {
            pick[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
    }
    return members;
}

void validate_explicit(const ExplicitDomain& members)
{
    if (members.empty())
        fail(ErrorCode::syntax, "explicit ensemble is empty");
    std::vector<std::string> base = members.front().components();
    std::sort(base.begin(), base.end());
    for (const BooleanNetwork& f : members) {
        std::vector<std::string> names = f.components();
        std::sort(names.begin(), names.end());
        if (names != base)
            fail(ErrorCode::syntax, "ensemble members disagree on their components");
    }
}

} // namespace

std::vector<BooleanNetwork> enumerate_domain(const Domain& domain)
{
    if (const auto* members = std::get_if<ExplicitDomain>(&domain)) {
        validate_explicit(*members);
        return *members;
    }
    return enumerate_implicit(std::get<ImplicitDomain>(domain));
}

std::vector<std::vector<Subhypercube>> domain_attractors(const Domain& domain,
                                                         const MpOptions& opts)
{
    std::vector<std::vector<Subhypercube>> out;
    for (const BooleanNetwork& f : enumerate_domain(domain))
        out.push_back(MpDynamics(f, opts).minimal_trap_spaces());
    return out;
}

SolutionSet solve_ensemble(const Domain& domain, Quantifier quantifier, Problem problem,
                           const std::optional<PartialAssignment>& source,
                           const PartialAssignment& marker, int k, const SolveOptions& opts)
{
    const bool with_source = problem == Problem::p2 || problem == Problem::p4;
    if (with_source && !source)
        fail(ErrorCode::syntax, "source configuration required");

    const std::vector<BooleanNetwork> members = enumerate_domain(domain);
    if (members.empty())
        fail(ErrorCode::domain_too_large, "domain contains no network");

    MpOptions dyn = opts.dynamics;
    dyn.parallel = false;
    const bool fixpoint_problem = problem == Problem::p1 || problem == Problem::p2;
    // Universal fixed-point reprogramming never requires a fixed point to
    // exist; a member without fixed points satisfies the marker vacuously.
    const bool ensure_exists =
        fixpoint_problem && quantifier == Quantifier::existential && opts.ensure_exists;

    std::vector<MpDynamics> bases;
    std::vector<std::vector<Configuration>> member_sources;
    if (!fixpoint_problem || with_source) {
        for (const BooleanNetwork& f : members)
            bases.emplace_back(f, dyn);
    }
    if (with_source) {
        for (const BooleanNetwork& f : members) {
            Subhypercube h(f.size());
            for (const auto& [i, value] : indexed_assignment(*source, f))
                h.set(i, value ? Tri::one : Tri::zero);
            if (h.free_count() > opts.completion_bound)
                fail(ErrorCode::too_large, "partial source leaves too many components free");
            std::vector<Configuration> zs;
            h.for_each_vertex([&](const Configuration& z) {
                zs.push_back(z);
                return true;
            });
            member_sources.push_back(std::move(zs));
        }
    }
    for (const auto& [name, value] : marker) {
        (void)value;
        members.front().require_index(name);
    }
    for (const std::string& name : opts.exclude)
        members.front().require_index(name);
    if (fixpoint_problem && !with_source)
        for (const BooleanNetwork& f : members)
            for (int i = 0; i < f.size(); ++i)
                if (!unateness_certificate(f, i))
                    fail(ErrorCode::not_unate,
                         "local function of '" + f.component_name(i) + "' is not unate");

    auto member_ok = [&](std::size_t m, const PartialAssignment& p) {
        switch (problem) {
        case Problem::p1:
            return is_p1_solution(members[m], marker, p, ensure_exists, dyn);
        case Problem::p2: {
            const MpDynamics perturbed(bases[m], p);
            const auto& zs = member_sources[m];
            return std::any_of(zs.begin(), zs.end(), [&](const Configuration& z) {
                const Subhypercube reach = perturbed.smallest_trap_space(z);
                const auto fps =
                    fixed_points(perturbed.network(), reach,
                                 FixedPointOptions{dyn.config_scan_bound, false});
                bool any_match = false;
                for (const Configuration& x : fps) {
                    if (!matches(x, marker, perturbed.network()))
                        return false;
                    any_match = true;
                }
                return !ensure_exists || any_match;
            });
        }
        case Problem::p3: {
            const MpDynamics perturbed(bases[m], p);
            for (const Subhypercube& a : perturbed.minimal_trap_spaces())
                if (!attractor_matches(a, marker, perturbed.network()))
                    return false;
            return true;
        }
        case Problem::p4: {
            const MpDynamics perturbed(bases[m], p);
            const auto& zs = member_sources[m];
            return std::any_of(zs.begin(), zs.end(), [&](const Configuration& z) {
                const Subhypercube reach = perturbed.smallest_trap_space(z);
                for (const Subhypercube& a : perturbed.minimal_trap_spaces())
                    if (subhypercube_leq(a, reach) &&
                        !attractor_matches(a, marker, perturbed.network()))
                        return false;
                return true;
            });
        }
        }
        return false;
    };

    auto predicate = [&](const PartialAssignment& p) {
        if (quantifier == Quantifier::existential) {
            for (std::size_t m = 0; m < members.size(); ++m)
                if (member_ok(m, p))
                    return true;
            return false;
        }
        for (std::size_t m = 0; m < members.size(); ++m)
            if (!member_ok(m, p))
                return false;
        return true;
    };

    return enumerate_minimal_solutions(members.front().components(), k, opts.exclude,
                                       predicate, opts.parallel, opts.on_solution,
                                       opts.stats);
}

SolutionSet solve_existential_fixpoints(const Domain& domain, const PartialAssignment& marker,
                                        int k, const SolveOptions& opts)
{
    return solve_ensemble(domain, Quantifier::existential, Problem::p1, std::nullopt, marker,
                          k, opts);
}

SolutionSet solve_universal_fixpoints(const Domain& domain, const PartialAssignment& marker,
                                      int k, const SolveOptions& opts)
{
    return solve_ensemble(domain, Quantifier::universal, Problem::p1, std::nullopt, marker, k,
                          opts);
}

SolutionSet solve_universal_attractors(const Domain& domain, const PartialAssignment& marker,
                                       int k, const SolveOptions& opts)
{
    return solve_ensemble(domain, Quantifier::universal, Problem::p3, std::nullopt, marker, k,
                          opts);
}

SolutionSet solve_universal_attractors_complement(const Domain& domain,
                                                  const PartialAssignment& marker, int k,
                                                  const SolveOptions& opts)
{
    const std::vector<BooleanNetwork> members = enumerate_domain(domain);
    if (members.empty())
        fail(ErrorCode::domain_too_large, "domain contains no network");
    MpOptions dyn = opts.dynamics;
    dyn.parallel = false;
    std::vector<MpDynamics> bases;
    for (const BooleanNetwork& f : members)
        bases.emplace_back(f, dyn);

    const auto all = candidate_perturbations(members.front().components(), k, opts.exclude);
    std::vector<PartialAssignment> good;
    for (const PartialAssignment& p : all) {
        const bool bad = std::any_of(bases.begin(), bases.end(), [&](const MpDynamics& base) {
            return bad_perturbation_p3(base.network(), marker, p, dyn);
        });
        if (!bad)
            good.push_back(p);
    }
    return minimal_filter(good);
}

// ---- Loading ----------------------------------------------------------------

std::vector<std::pair<std::string, BooleanNetwork>> parse_multi_model(const std::string& text)
{
    std::vector<std::pair<std::string, BooleanNetwork>> out;
    std::istringstream in(text);
    std::string line;
    std::string name = "bn0";
    std::string block;
    bool block_opened = false; // current block introduced by a `---` line
    auto has_content = [](const std::string& text) {
        std::istringstream bs(text);
        std::string l;
        while (std::getline(bs, l)) {
            const std::size_t b = l.find_first_not_of(" \t\r");
            if (b != std::string::npos && l[b] != '#')
                return true;
        }
        return false;
    };
    auto flush = [&]() {
        if (has_content(block) || block_opened)
            out.emplace_back(name, BooleanNetwork::parse(block));
        block.clear();
        block_opened = false;
    };
    while (std::getline(in, line)) {
        if (line.rfind("---", 0) == 0) {
            flush();
            block_opened = true;
            std::string rest = line.substr(3);
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.erase(rest.begin());
            while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r' ||
                                     rest.back() == '\t'))
                rest.pop_back();
            name = rest.empty() ? "bn" + std::to_string(out.size()) : rest;
            continue;
        }
        block += line;
        block += '\n';
    }
    flush();
    return out;
}

std::string serialize_multi_model(const std::vector<BooleanNetwork>& members)
{
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += "--- bn" + std::to_string(i) + "\n";
        out += members[i].to_booleannet();
    }
    return out;
}

InfluenceGraph parse_edge_list(const std::string& text)
{
    InfluenceGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto node = [&](const std::string& name) {
        if (std::find(g.nodes.begin(), g.nodes.end(), name) == g.nodes.end())
            g.nodes.push_back(name);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string source, sign, target;
        if (!(ls >> source))
            continue;
        if (source[0] == '#')
            continue;
        if (!(ls >> sign >> target))
            fail(ErrorCode::syntax,
                 "line " + std::to_string(lineno) + ": expected 'source sign target'");
        std::string extra;
        if (ls >> extra)
            fail(ErrorCode::syntax,
                 "line " + std::to_string(lineno) + ": trailing content '" + extra + "'");
        int s;
        if (sign == "+1" || sign == "+" || sign == "1")
            s = 1;
        else if (sign == "-1" || sign == "-")
            s = -1;
        else
            fail(ErrorCode::syntax,
                 "line " + std::to_string(lineno) + ": bad sign '" + sign + "'");
        node(source);
        node(target);
        g.edges.push_back({source, s, target});
    }
    return g;
}

} // namespace bnr
