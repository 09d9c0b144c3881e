#include "bnr/subhypercube.hpp"

namespace bnr {

int Subhypercube::free_count() const
{
    int c = 0;
    for (Tri t : v_)
        if (t == Tri::free_)
            ++c;
    return c;
}

std::vector<int> Subhypercube::free_indices() const
{
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (is_free(i))
            out.push_back(i);
    return out;
}

bool Subhypercube::contains(const Configuration& x) const
{
    for (int i = 0; i < size(); ++i)
        if (!is_free(i) && fixed_value(i) != x.get(i))
            return false;
    return true;
}

std::string Subhypercube::to_string() const
{
    std::string s;
    s.reserve(v_.size());
    for (Tri t : v_)
        s += t == Tri::free_ ? '*' : (t == Tri::one ? '1' : '0');
    return s;
}

bool subhypercube_leq(const Subhypercube& h, const Subhypercube& h2)
{
    for (int i = 0; i < h2.size(); ++i)
        if (!h2.is_free(i) && h.get(i) != h2.get(i))
            return false;
    return true;
}

bool subhypercube_less(const Subhypercube& a, const Subhypercube& b)
{
    for (int i = 0; i < a.size() && i < b.size(); ++i) {
        const auto ta = static_cast<int>(a.get(i));
        const auto tb = static_cast<int>(b.get(i));
        if (ta != tb)
            return ta < tb;
    }
    return a.size() < b.size();
}

} // namespace bnr
