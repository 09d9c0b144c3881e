#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bnr/expression.hpp"
#include "bnr/types.hpp"

namespace bnr {

// Boolean network f : B^n -> B^n with one local rule per component.
// Components keep their declaration order; instances are immutable values.
class BooleanNetwork {
public:
    BooleanNetwork() = default;

    // BooleanNet text: one `target, expression` line per component, operators
    // `!`, `&`, `|`, parentheses and the constants `0`/`1`. Blank lines and
    // lines starting with `#` are skipped, as is an optional leading
    // `targets, factors` header.
    static BooleanNetwork parse(const std::string& text);

    // Convenience constructor from (name, rule-text) pairs.
    static BooleanNetwork from_rules(
        const std::vector<std::pair<std::string, std::string>>& rules);

    static BooleanNetwork from_expressions(std::vector<std::string> components,
                                           std::vector<Expr> rules);

    std::string to_booleannet() const;

    int size() const { return static_cast<int>(components_.size()); }
    const std::vector<std::string>& components() const { return components_; }
    const std::string& component_name(int i) const
    {
        return components_[static_cast<std::size_t>(i)];
    }
    int index_of(const std::string& name) const; // -1 when unknown
    int require_index(const std::string& name) const; // throws unknown_component

    const Expr& rule(int i) const { return rules_[static_cast<std::size_t>(i)]; }

    // Sorted syntactic variable indices of rule i.
    const std::vector<int>& support(int i) const
    {
        return supports_[static_cast<std::size_t>(i)];
    }

    bool evaluate_local(int i, const Configuration& x) const;
    bool evaluate_local(const std::string& name, const Configuration& x) const;
    Configuration apply(const Configuration& x) const;

    // Perturbed network f/P: rules in dom(P) become constants, everything
    // else is shared with *this.
    BooleanNetwork perturbed(const PartialAssignment& perturbation) const;

    friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;

private:
    std::vector<std::string> components_;
    std::vector<Expr> rules_;            // resolved against components_
    std::vector<std::vector<int>> supports_;
    std::unordered_map<std::string, int> index_;

    void finalize(); // resolves rules, builds index and supports
};

// Resolves a name-keyed assignment against a network, returning
// (index, value) pairs sorted by index. Throws unknown_component.
std::vector<std::pair<int, bool>> indexed_assignment(const PartialAssignment& a,
                                                     const BooleanNetwork& f);

} // namespace bnr
