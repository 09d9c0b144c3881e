#include "bnr/expression.hpp"

#include <algorithm>
#include <cassert>

#include "bnr/errors.hpp"

namespace bnr {

struct Expr::Node {
    Kind kind;
    bool value = false;      // constant
    std::string name;        // variable
    int index = -1;          // variable, resolved
    std::vector<Expr> kids;  // negation (1) / conjunction / disjunction (>= 2)
};

Expr Expr::constant(bool value)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::constant;
    node->value = value;
    return Expr(std::move(node));
}

Expr Expr::variable(std::string name)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::variable;
    node->name = std::move(name);
    return Expr(std::move(node));
}

Expr Expr::negation(Expr operand)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::negation;
    node->kids.push_back(std::move(operand));
    return Expr(std::move(node));
}

Expr Expr::conjunction(std::vector<Expr> operands)
{
    assert(!operands.empty());
    if (operands.size() == 1)
        return operands.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::conjunction;
    node->kids = std::move(operands);
    return Expr(std::move(node));
}

Expr Expr::disjunction(std::vector<Expr> operands)
{
    assert(!operands.empty());
    if (operands.size() == 1)
        return operands.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::disjunction;
    node->kids = std::move(operands);
    return Expr(std::move(node));
}

Expr::Kind Expr::kind() const { return node_->kind; }
bool Expr::constant_value() const { return node_->value; }
const std::string& Expr::variable_name() const { return node_->name; }
int Expr::variable_index() const { return node_->index; }
const Expr& Expr::operand() const { return node_->kids.front(); }
std::span<const Expr> Expr::operands() const { return node_->kids; }

bool Expr::evaluate(std::span<const std::uint8_t> x) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::constant:
        return n.value;
    case Kind::variable:
        assert(n.index >= 0);
        return x[static_cast<std::size_t>(n.index)] != 0;
    case Kind::negation:
        return !n.kids.front().evaluate(x);
    case Kind::conjunction:
        for (const Expr& kid : n.kids)
            if (!kid.evaluate(x))
                return false;
        return true;
    case Kind::disjunction:
        for (const Expr& kid : n.kids)
            if (kid.evaluate(x))
                return true;
        return false;
    }
    return false;
}

static void collect_indices(const Expr& e, std::vector<int>& out)
{
    switch (e.kind()) {
    case Expr::Kind::constant:
        break;
    case Expr::Kind::variable:
        out.push_back(e.variable_index());
        break;
    case Expr::Kind::negation:
        collect_indices(e.operand(), out);
        break;
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction:
        for (const Expr& kid : e.operands())
            collect_indices(kid, out);
        break;
    }
}

std::vector<int> Expr::variable_indices() const
{
    std::vector<int> out;
    collect_indices(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Expr::collect_variable_names(std::vector<std::string>& out) const
{
    switch (kind()) {
    case Kind::constant:
        break;
    case Kind::variable:
        out.push_back(variable_name());
        break;
    case Kind::negation:
        operand().collect_variable_names(out);
        break;
    case Kind::conjunction:
    case Kind::disjunction:
        for (const Expr& kid : operands())
            kid.collect_variable_names(out);
        break;
    }
}

Expr Expr::resolved(const std::vector<std::string>& components) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::constant:
        return *this;
    case Kind::variable: {
        auto it = std::find(components.begin(), components.end(), n.name);
        if (it == components.end())
            fail(ErrorCode::undeclared, "undeclared component '" + n.name + "'");
        auto node = std::make_shared<Node>(n);
        node->index = static_cast<int>(it - components.begin());
        return Expr(std::move(node));
    }
    case Kind::negation:
        return negation(n.kids.front().resolved(components));
    case Kind::conjunction:
    case Kind::disjunction: {
        std::vector<Expr> kids;
        kids.reserve(n.kids.size());
        for (const Expr& kid : n.kids)
            kids.push_back(kid.resolved(components));
        auto node = std::make_shared<Node>();
        node->kind = n.kind;
        node->kids = std::move(kids);
        return Expr(std::move(node));
    }
    }
    return *this;
}

// Precedence: | < & < ! < atom.
static int precedence(Expr::Kind k)
{
    switch (k) {
    case Expr::Kind::disjunction: return 0;
    case Expr::Kind::conjunction: return 1;
    case Expr::Kind::negation: return 2;
    default: return 3;
    }
}

static void print(const Expr& e, int parent_prec, std::string& out)
{
    const int prec = precedence(e.kind());
    const bool parens = prec < parent_prec;
    if (parens)
        out += '(';
    switch (e.kind()) {
    case Expr::Kind::constant:
        out += e.constant_value() ? '1' : '0';
        break;
    case Expr::Kind::variable:
        out += e.variable_name();
        break;
    case Expr::Kind::negation:
        out += '!';
        print(e.operand(), precedence(Expr::Kind::negation), out);
        break;
    case Expr::Kind::conjunction: {
        bool first = true;
        for (const Expr& kid : e.operands()) {
            if (!first)
                out += '&';
            print(kid, precedence(Expr::Kind::conjunction), out);
            first = false;
        }
        break;
    }
    case Expr::Kind::disjunction: {
        bool first = true;
        for (const Expr& kid : e.operands()) {
            if (!first)
                out += '|';
            print(kid, precedence(Expr::Kind::disjunction), out);
            first = false;
        }
        break;
    }
    }
    if (parens)
        out += ')';
}

std::string Expr::to_string() const
{
    std::string out;
    print(*this, 0, out);
    return out;
}

} // namespace bnr
