#include "bnr/stg.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "bnr/errors.hpp"

namespace bnr {

std::vector<Configuration> AsyncStg::fixed_points() const
{
    std::unordered_set<std::uint64_t> with_successor;
    for (const auto& [src, dst] : edges) {
        (void)dst;
        with_successor.insert(src);
    }
    std::vector<Configuration> out;
    for (std::uint64_t node : nodes)
        if (!with_successor.contains(node))
            out.push_back(Configuration::from_code(n, node));
    return out;
}

AsyncStg async_stg(const BooleanNetwork& f, const std::optional<Configuration>& init,
                   const StgOptions& opts)
{
    const int n = f.size();
    AsyncStg g;
    g.n = n;

    const std::uint64_t cap = std::uint64_t{1} << std::min(opts.bound, 62);
    auto successors = [&](std::uint64_t code, std::vector<std::uint64_t>& succ) {
        succ.clear();
        const Configuration x = Configuration::from_code(n, code);
        for (int i = 0; i < n; ++i) {
            const bool next = f.evaluate_local(i, x);
            if (next != x.get(i))
                succ.push_back(code ^ (std::uint64_t{1} << (n - 1 - i)));
        }
    };

    std::vector<std::uint64_t> succ;
    if (init) {
        std::unordered_set<std::uint64_t> visited;
        std::deque<std::uint64_t> queue;
        const std::uint64_t start = init->code();
        visited.insert(start);
        queue.push_back(start);
        while (!queue.empty()) {
            const std::uint64_t code = queue.front();
            queue.pop_front();
            successors(code, succ);
            for (std::uint64_t next : succ) {
                g.edges.emplace_back(code, next);
                if (visited.insert(next).second) {
                    if (visited.size() > cap)
                        fail(ErrorCode::too_large,
                             "reachable state graph exceeds 2^" +
                                 std::to_string(opts.bound) + " configurations");
                    queue.push_back(next);
                }
            }
        }
        g.nodes.assign(visited.begin(), visited.end());
    } else {
        if (n > opts.bound)
            fail(ErrorCode::too_large,
                 "full state graph over " + std::to_string(n) +
                     " components exceeds the bound of " + std::to_string(opts.bound));
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t code = 0; code < total; ++code) {
            g.nodes.push_back(code);
            successors(code, succ);
            for (std::uint64_t next : succ)
                g.edges.emplace_back(code, next);
        }
    }

    std::sort(g.nodes.begin(), g.nodes.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace bnr
