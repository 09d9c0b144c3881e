#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace bnr {

// Total Boolean state of an n-component network, positionally aligned with
// the network's declaration order.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int n, bool value = false)
        : bits_(static_cast<std::size_t>(n), value ? 1 : 0) {}

    // Component i takes bit (n-1-i) of `code`, so ascending codes enumerate
    // configurations in lexicographic order of the declaration sequence.
    static Configuration from_code(int n, std::uint64_t code)
    {
        Configuration x(n);
        for (int i = 0; i < n; ++i)
            x.bits_[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1u);
        return x;
    }

    std::uint64_t code() const
    {
        std::uint64_t c = 0;
        for (std::uint8_t b : bits_)
            c = (c << 1) | b;
        return c;
    }

    int size() const { return static_cast<int>(bits_.size()); }
    bool get(int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
    void set(int i, bool v) { bits_[static_cast<std::size_t>(i)] = v ? 1 : 0; }

    std::span<const std::uint8_t> values() const { return bits_; }
    std::vector<std::uint8_t>& raw() { return bits_; }
    const std::vector<std::uint8_t>& raw() const { return bits_; }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Partial map component name -> Boolean. Serves as marker M, perturbation P,
// and (possibly partial) source configuration z. std::map keeps keys in
// lexicographic order, which all output paths rely on.
using PartialAssignment = std::map<std::string, bool>;

// Orders solution sets: by size first, then by the (name, value) sequence.
bool assignment_less(const PartialAssignment& a, const PartialAssignment& b);

// True when `sub` maps a subset of `sup`'s keys to the same values.
bool is_submap(const PartialAssignment& sub, const PartialAssignment& sup);

} // namespace bnr
