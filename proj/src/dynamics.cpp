#include "bnr/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <omp.h>

#include "bnr/errors.hpp"

namespace bnr {

MpDynamics::MpDynamics(BooleanNetwork f, MpOptions opts)
    : f_(std::move(f)), opts_(opts)
{
    signs_.reserve(static_cast<std::size_t>(f_.size()));
    for (int i = 0; i < f_.size(); ++i) {
        auto cert = unateness_certificate(f_, i);
        if (!cert)
            fail(ErrorCode::not_unate,
                 "local function of '" + f_.component_name(i) + "' is not unate");
        signs_.push_back(std::move(*cert));
    }
}

MpDynamics::MpDynamics(const MpDynamics& base, const PartialAssignment& perturbation)
    : f_(base.f_.perturbed(perturbation)), opts_(base.opts_), signs_(base.signs_)
{
    for (const auto& [name, value] : perturbation) {
        (void)value;
        const int i = f_.require_index(name);
        std::fill(signs_[static_cast<std::size_t>(i)].begin(),
                  signs_[static_cast<std::size_t>(i)].end(), Sign::unused);
    }
}

bool MpDynamics::escape_with_buffer(const Subhypercube& h, int i, bool b,
                                    std::vector<std::uint8_t>& buf) const
{
    // Extremal vertex of c(h) for f_i: every free regulator is pushed toward
    // b according to its polarity, so f_i reaches b somewhere in c(h) iff it
    // does so here.
    const SignVector& sv = signs_[static_cast<std::size_t>(i)];
    for (int j : f_.support(i)) {
        std::uint8_t v;
        if (!h.is_free(j)) {
            v = h.fixed_value(j) ? 1 : 0;
        } else {
            switch (sv[static_cast<std::size_t>(j)]) {
            case Sign::positive: v = b ? 1 : 0; break;
            case Sign::negative: v = b ? 0 : 1; break;
            default: v = 0; break;
            }
        }
        buf[static_cast<std::size_t>(j)] = v;
    }
    return f_.rule(i).evaluate(buf) == b;
}

bool MpDynamics::escape_exists(const Subhypercube& h, int i, bool b) const
{
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(f_.size()), 0);
    return escape_with_buffer(h, i, b, buf);
}

bool MpDynamics::escape_exists_enumerative(const Subhypercube& h, int i, bool b) const
{
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(f_.size()), 0);
    std::vector<int> free;
    for (int j : f_.support(i)) {
        if (h.is_free(j))
            free.push_back(j);
        else
            buf[static_cast<std::size_t>(j)] = h.fixed_value(j) ? 1 : 0;
    }
    const int m = static_cast<int>(free.size());
    if (m > 26)
        fail(ErrorCode::too_large, "escape enumeration over " + std::to_string(m) +
                                       " free regulators");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (int t = 0; t < m; ++t)
            buf[static_cast<std::size_t>(free[static_cast<std::size_t>(t)])] =
                static_cast<std::uint8_t>((mask >> t) & 1u);
        if (f_.rule(i).evaluate(buf) == b)
            return true;
    }
    return false;
}

bool MpDynamics::is_trap_space(const Subhypercube& h) const
{
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(f_.size()), 0);
    for (int i = 0; i < f_.size(); ++i)
        if (!h.is_free(i) && escape_with_buffer(h, i, !h.fixed_value(i), buf))
            return false;
    return true;
}

Subhypercube MpDynamics::smallest_trap_space_buf(const Configuration& x,
                                                 std::vector<std::uint8_t>& buf) const
{
    Subhypercube h = Subhypercube::of(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < f_.size(); ++i) {
            if (h.is_free(i))
                continue;
            if (escape_with_buffer(h, i, !x.get(i), buf)) {
                h.set(i, Tri::free_);
                changed = true;
            }
        }
    }
    return h;
}

Subhypercube MpDynamics::smallest_trap_space(const Configuration& x) const
{
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(f_.size()), 0);
    return smallest_trap_space_buf(x, buf);
}

std::vector<Configuration> MpDynamics::fixed_points() const
{
    return bnr::fixed_points(f_, FixedPointOptions{opts_.config_scan_bound, opts_.parallel});
}

std::vector<Configuration> MpDynamics::fixed_points(const Subhypercube& within) const
{
    return bnr::fixed_points(f_, within,
                             FixedPointOptions{opts_.config_scan_bound, opts_.parallel});
}

namespace {

// (fixed-coordinate mask, values) packed into one word; free coordinates
// are normalized to 0. Bit i is component i.
std::uint64_t encode(const Subhypercube& h)
{
    std::uint32_t mask = 0, vals = 0;
    for (int i = 0; i < h.size(); ++i) {
        if (h.is_free(i))
            continue;
        mask |= std::uint32_t{1} << i;
        if (h.fixed_value(i))
            vals |= std::uint32_t{1} << i;
    }
    return (std::uint64_t{mask} << 32) | vals;
}

Subhypercube decode(std::uint64_t key, int n)
{
    const auto mask = static_cast<std::uint32_t>(key >> 32);
    const auto vals = static_cast<std::uint32_t>(key);
    Subhypercube h(n);
    for (int i = 0; i < n; ++i)
        if (mask & (std::uint32_t{1} << i))
            h.set(i, (vals & (std::uint32_t{1} << i)) ? Tri::one : Tri::zero);
    return h;
}

// key2 contained in key1? Every fixed coordinate of key1 fixed equally.
bool key_leq(std::uint64_t inner, std::uint64_t outer)
{
    const auto mi = static_cast<std::uint32_t>(inner >> 32);
    const auto mo = static_cast<std::uint32_t>(outer >> 32);
    const auto vi = static_cast<std::uint32_t>(inner);
    const auto vo = static_cast<std::uint32_t>(outer);
    return (mo & ~mi) == 0 && ((vi ^ vo) & mo) == 0;
}

} // namespace

std::vector<Subhypercube> MpDynamics::minimal_trap_spaces_scan(bool parallel) const
{
    const int n = f_.size();
    const std::uint64_t total = std::uint64_t{1} << n;

    std::unordered_set<std::uint64_t> seen;
    if (parallel && n >= 10) {
#pragma omp parallel
        {
            std::vector<std::uint8_t> buf(static_cast<std::size_t>(n), 0);
            std::unordered_set<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1024) nowait
            for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code) {
                const Configuration x =
                    Configuration::from_code(n, static_cast<std::uint64_t>(code));
                local.insert(encode(smallest_trap_space_buf(x, buf)));
            }
#pragma omp critical
            seen.merge(local);
        }
    } else {
        std::vector<std::uint8_t> buf(static_cast<std::size_t>(n), 0);
        for (std::uint64_t code = 0; code < total; ++code)
            seen.insert(encode(smallest_trap_space_buf(Configuration::from_code(n, code), buf)));
    }

    // Most-fixed first: any strict dominator of h precedes h, so one pass
    // against the kept minimal elements suffices.
    std::vector<std::uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end(), [](std::uint64_t a, std::uint64_t b) {
        const int fa = std::popcount(static_cast<std::uint32_t>(a >> 32));
        const int fb = std::popcount(static_cast<std::uint32_t>(b >> 32));
        if (fa != fb)
            return fa > fb;
        return a < b;
    });
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t h : keys) {
        bool dominated = false;
        for (std::uint64_t m : minimal)
            if (key_leq(m, h)) {
                dominated = true;
                break;
            }
        if (!dominated)
            minimal.push_back(h);
    }

    std::vector<Subhypercube> out;
    out.reserve(minimal.size());
    for (std::uint64_t key : minimal)
        out.push_back(decode(key, n));
    std::sort(out.begin(), out.end(), subhypercube_less);
    return out;
}

std::vector<Subhypercube> MpDynamics::minimal_trap_spaces() const
{
    const int n = f_.size();
    if (n == 0)
        return {Subhypercube(0)};
    if (n > opts_.config_scan_bound || n > 32)
        fail(ErrorCode::too_large,
             "minimal trap space scan over " + std::to_string(n) +
                 " components exceeds the bound of " +
                 std::to_string(std::min(opts_.config_scan_bound, 32)));
    return minimal_trap_spaces_scan(opts_.parallel);
}

bool MpDynamics::in_attractor(const Configuration& x) const
{
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(f_.size()), 0);
    const Subhypercube h = smallest_trap_space_buf(x, buf);
    if (h.free_count() == 0)
        return true; // x is a fixed point
    return h.for_each_vertex([&](const Configuration& y) {
        return smallest_trap_space_buf(y, buf) == h;
    });
}

bool MpDynamics::attractor_reachable(const Configuration& x,
                                     const Subhypercube& attractor) const
{
    return subhypercube_leq(attractor, smallest_trap_space(x));
}

} // namespace bnr
