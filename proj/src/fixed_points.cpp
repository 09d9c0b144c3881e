#include "bnr/fixed_points.hpp"

#include <algorithm>
#include <cstdint>

#include <omp.h>

#include "bnr/errors.hpp"

namespace bnr {

namespace {

// Backtracking over partial assignments in declaration order. Whenever all
// regulators of a component are assigned, its fixed-point value f_i(x) = x_i
// is forced, so the search only branches on genuinely undetermined
// components. Leaves are exactly the fixed points, emitted in ascending
// configuration order.
struct FpSearch {
    const BooleanNetwork* f = nullptr;
    int n = 0;
    std::vector<std::vector<int>> dependents; // var -> rules whose support contains it

    std::vector<std::int8_t> assign; // -1 unassigned
    std::vector<int> remaining;      // unassigned regulators per component
    std::vector<std::uint8_t> buf;   // evaluation buffer, valid where assigned
    std::vector<int> trail;
    std::vector<int> pending; // components whose support just completed

    std::vector<Configuration> out;

    void init(const BooleanNetwork& net)
    {
        f = &net;
        n = net.size();
        dependents.assign(static_cast<std::size_t>(n), {});
        remaining.resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            remaining[static_cast<std::size_t>(c)] =
                static_cast<int>(net.support(c).size());
            for (int v : net.support(c))
                dependents[static_cast<std::size_t>(v)].push_back(c);
        }
        assign.assign(static_cast<std::size_t>(n), -1);
        buf.assign(static_cast<std::size_t>(n), 0);
        for (int c = 0; c < n; ++c)
            if (remaining[static_cast<std::size_t>(c)] == 0)
                pending.push_back(c);
    }

    void record(int v, bool value)
    {
        assign[static_cast<std::size_t>(v)] = value ? 1 : 0;
        buf[static_cast<std::size_t>(v)] = value ? 1 : 0;
        trail.push_back(v);
        for (int c : dependents[static_cast<std::size_t>(v)])
            if (--remaining[static_cast<std::size_t>(c)] == 0)
                pending.push_back(c);
    }

    // Assigns v := value and runs unit propagation; false on conflict. The
    // pending queue is left empty either way.
    bool assign_and_propagate(int v, bool value)
    {
        record(v, value);
        return propagate();
    }

    bool propagate()
    {
        while (!pending.empty()) {
            const int c = pending.back();
            pending.pop_back();
            const bool value = f->rule(c).evaluate(buf);
            const std::int8_t cur = assign[static_cast<std::size_t>(c)];
            if (cur < 0)
                record(c, value);
            else if ((cur != 0) != value)
                return false;
        }
        return true;
    }

    void undo_to(std::size_t mark)
    {
        while (trail.size() > mark) {
            const int v = trail.back();
            trail.pop_back();
            assign[static_cast<std::size_t>(v)] = -1;
            for (int c : dependents[static_cast<std::size_t>(v)])
                ++remaining[static_cast<std::size_t>(c)];
        }
        pending.clear();
    }

    int next_unassigned(int from) const
    {
        while (from < n && assign[static_cast<std::size_t>(from)] >= 0)
            ++from;
        return from;
    }

    void dfs(int hint)
    {
        const int v = next_unassigned(hint);
        if (v == n) {
            Configuration x(n);
            for (int i = 0; i < n; ++i)
                x.set(i, buf[static_cast<std::size_t>(i)] != 0);
            out.push_back(std::move(x));
            return;
        }
        for (int value = 0; value <= 1; ++value) {
            const std::size_t mark = trail.size();
            if (assign_and_propagate(v, value != 0))
                dfs(v + 1);
            undo_to(mark);
        }
    }
};

std::vector<Configuration> run_search(const BooleanNetwork& f, const Subhypercube* within,
                                      const FixedPointOptions& opts)
{
    if (f.size() > opts.config_scan_bound)
        fail(ErrorCode::too_large,
             "fixed-point search over " + std::to_string(f.size()) +
                 " components exceeds the bound of " +
                 std::to_string(opts.config_scan_bound));

    FpSearch root;
    root.init(f);
    if (!root.propagate())
        return {};
    if (within) {
        for (int i = 0; i < f.size(); ++i) {
            if (within->is_free(i))
                continue;
            const bool value = within->fixed_value(i);
            const std::int8_t cur = root.assign[static_cast<std::size_t>(i)];
            if (cur >= 0) {
                if ((cur != 0) != value)
                    return {};
            } else if (!root.assign_and_propagate(i, value)) {
                return {};
            }
        }
    }

    std::vector<int> free_vars;
    for (int i = 0; i < f.size(); ++i)
        if (root.assign[static_cast<std::size_t>(i)] < 0)
            free_vars.push_back(i);

    constexpr int kSplit = 8; // 2^8 prefix subproblems when parallel
    if (!opts.parallel || static_cast<int>(free_vars.size()) <= kSplit) {
        root.dfs(0);
        return std::move(root.out);
    }

    const int d = kSplit;
    const std::uint64_t tasks = std::uint64_t{1} << d;
    std::vector<std::vector<Configuration>> results(tasks);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(tasks); ++code) {
        FpSearch local = root;
        bool alive = true;
        for (int t = 0; t < d && alive; ++t) {
            const bool value = ((code >> (d - 1 - t)) & 1) != 0;
            const int v = free_vars[static_cast<std::size_t>(t)];
            const std::int8_t cur = local.assign[static_cast<std::size_t>(v)];
            if (cur >= 0)
                alive = (cur != 0) == value; // forced by an earlier prefix bit
            else
                alive = local.assign_and_propagate(v, value);
        }
        if (alive) {
            local.dfs(0);
            results[static_cast<std::size_t>(code)] = std::move(local.out);
        }
    }

    std::vector<Configuration> out;
    for (auto& part : results)
        for (Configuration& x : part)
            out.push_back(std::move(x));
    return out;
}

} // namespace

std::vector<Configuration> fixed_points(const BooleanNetwork& f, const FixedPointOptions& opts)
{
    if (f.size() == 0)
        return {Configuration(0)};
    return run_search(f, nullptr, opts);
}

std::vector<Configuration> fixed_points(const BooleanNetwork& f, const Subhypercube& within,
                                        const FixedPointOptions& opts)
{
    if (f.size() == 0)
        return {Configuration(0)};
    return run_search(f, &within, opts);
}

} // namespace bnr
