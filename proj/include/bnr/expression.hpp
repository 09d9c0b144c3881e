#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bnr {

// Immutable Boolean expression tree over named variables. Nodes are shared,
// so copying an expression (or a network) is cheap. Variables carry the
// component index of the owning network once resolved; evaluation requires a
// resolved tree.
class Expr {
public:
    enum class Kind : std::uint8_t { constant, variable, negation, conjunction, disjunction };

    Expr() = default;

    static Expr constant(bool value);
    static Expr variable(std::string name);
    static Expr negation(Expr operand);
    // Single-operand conjunctions/disjunctions collapse to the operand.
    static Expr conjunction(std::vector<Expr> operands);
    static Expr disjunction(std::vector<Expr> operands);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const;

    bool constant_value() const;
    const std::string& variable_name() const;
    int variable_index() const;  // -1 until resolved against a network
    const Expr& operand() const; // negation child
    std::span<const Expr> operands() const;

    // Value at x, where x[i] is the state of component i. All variables must
    // be resolved.
    bool evaluate(std::span<const std::uint8_t> x) const;

    // Sorted, duplicate-free indices of the variables appearing in the tree.
    std::vector<int> variable_indices() const;
    void collect_variable_names(std::vector<std::string>& out) const;

    // Copy of the tree with every variable index bound to its position in
    // `components`; an unknown name raises ErrorCode::undeclared.
    Expr resolved(const std::vector<std::string>& components) const;

    // BooleanNet syntax: '!', '&', '|', parentheses, '0'/'1'.
    std::string to_string() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace bnr
