#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnr/types.hpp"

namespace bnr {

enum class Tri : std::uint8_t { zero = 0, one = 1, free_ = 2 };

// Sub-hypercube h in {0,1,*}^n: each component is fixed to a Boolean value
// or free. Doubles as trap space and attractor.
class Subhypercube {
public:
    Subhypercube() = default;
    explicit Subhypercube(int n, Tri fill = Tri::free_)
        : v_(static_cast<std::size_t>(n), fill) {}

    static Subhypercube of(const Configuration& x)
    {
        Subhypercube h(x.size());
        for (int i = 0; i < x.size(); ++i)
            h.set(i, x.get(i) ? Tri::one : Tri::zero);
        return h;
    }

    int size() const { return static_cast<int>(v_.size()); }
    Tri get(int i) const { return v_[static_cast<std::size_t>(i)]; }
    void set(int i, Tri t) { v_[static_cast<std::size_t>(i)] = t; }
    bool is_free(int i) const { return get(i) == Tri::free_; }
    bool fixed_value(int i) const { return get(i) == Tri::one; }

    int free_count() const;
    std::vector<int> free_indices() const;

    bool contains(const Configuration& x) const;

    // Vertices of c(h) in ascending order of the free coordinates. The
    // visitor returns false to stop early; the overall result is false iff
    // the visitor stopped.
    template <typename Visitor>
    bool for_each_vertex(Visitor&& visit) const
    {
        const std::vector<int> free = free_indices();
        const int m = static_cast<int>(free.size());
        Configuration x(size());
        for (int i = 0; i < size(); ++i)
            if (!is_free(i))
                x.set(i, fixed_value(i));
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
            for (int t = 0; t < m; ++t)
                x.set(free[static_cast<std::size_t>(t)], ((code >> (m - 1 - t)) & 1u) != 0);
            if (!visit(static_cast<const Configuration&>(x)))
                return false;
        }
        return true;
    }

    // "01*" style rendering in component order.
    std::string to_string() const;

    friend bool operator==(const Subhypercube&, const Subhypercube&) = default;

private:
    std::vector<Tri> v_;
};

// h <= h2 in the containment order: c(h) is a subset of c(h2), equivalently
// every fixed coordinate of h2 is fixed to the same value in h.
bool subhypercube_leq(const Subhypercube& h, const Subhypercube& h2);

// Component-wise order 0 < 1 < * used for deterministic listings.
bool subhypercube_less(const Subhypercube& a, const Subhypercube& b);

} // namespace bnr
