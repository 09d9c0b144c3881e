#include "bnr/network.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bnr/errors.hpp"

namespace bnr {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !is_ident_start(s[0]))
        return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Recursive-descent parser for one rule expression.
//   disj := conj ('|' conj)*
//   conj := lit ('&' lit)*
//   lit  := '!' lit | '0' | '1' | ident | '(' disj ')'
class ExprParser {
public:
    ExprParser(const std::string& text, int line) : text_(text), line_(line) {}

    Expr parse()
    {
        Expr e = parse_disj();
        skip_ws();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& what)
    {
        fail(ErrorCode::syntax, "line " + std::to_string(line_) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_disj()
    {
        std::vector<Expr> terms;
        terms.push_back(parse_conj());
        while (eat('|'))
            terms.push_back(parse_conj());
        return Expr::disjunction(std::move(terms));
    }

    Expr parse_conj()
    {
        std::vector<Expr> terms;
        terms.push_back(parse_lit());
        while (eat('&'))
            terms.push_back(parse_lit());
        return Expr::conjunction(std::move(terms));
    }

    Expr parse_lit()
    {
        skip_ws();
        if (pos_ >= text_.size())
            error("unexpected end of expression");
        char c = text_[pos_];
        if (c == '!') {
            ++pos_;
            return Expr::negation(parse_lit());
        }
        if (c == '(') {
            ++pos_;
            Expr e = parse_disj();
            if (!eat(')'))
                error("missing ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return Expr::constant(c == '1');
        }
        if (is_ident_start(c)) {
            std::size_t b = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                ++pos_;
            return Expr::variable(text_.substr(b, pos_ - b));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace

BooleanNetwork BooleanNetwork::parse(const std::string& text)
{
    std::vector<std::string> names;
    std::vector<Expr> rules;
    std::vector<int> lines;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_possible = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        std::size_t comma = t.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::syntax,
                 "line " + std::to_string(lineno) + ": expected 'target, expression'");
        const std::string target = trim(t.substr(0, comma));
        const std::string rhs = trim(t.substr(comma + 1));
        if (header_possible && lower(target) == "targets" && lower(rhs) == "factors") {
            header_possible = false;
            continue;
        }
        header_possible = false;
        if (!valid_identifier(target))
            fail(ErrorCode::syntax,
                 "line " + std::to_string(lineno) + ": invalid component name '" + target + "'");
        if (std::find(names.begin(), names.end(), target) != names.end())
            fail(ErrorCode::duplicate,
                 "line " + std::to_string(lineno) + ": component '" + target +
                     "' declared twice");
        names.push_back(target);
        rules.push_back(ExprParser(rhs, lineno).parse());
        lines.push_back(lineno);
    }

    BooleanNetwork f;
    f.components_ = std::move(names);
    f.rules_ = std::move(rules);
    // Resolution happens per rule so undeclared-variable errors can cite the
    // offending line.
    for (std::size_t i = 0; i < f.rules_.size(); ++i) {
        try {
            f.rules_[i] = f.rules_[i].resolved(f.components_);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::undeclared)
                throw;
            fail(ErrorCode::undeclared,
                 "line " + std::to_string(lines[i]) + ": " + e.what());
        }
    }
    f.finalize();
    return f;
}

BooleanNetwork BooleanNetwork::from_rules(
    const std::vector<std::pair<std::string, std::string>>& rules)
{
    std::string text;
    for (const auto& [name, rule] : rules)
        text += name + ", " + rule + "\n";
    return parse(text);
}

BooleanNetwork BooleanNetwork::from_expressions(std::vector<std::string> components,
                                                std::vector<Expr> rules)
{
    if (components.size() != rules.size())
        fail(ErrorCode::syntax, "component/rule count mismatch");
    BooleanNetwork f;
    f.components_ = std::move(components);
    for (std::size_t i = 0; i < f.components_.size(); ++i) {
        if (!valid_identifier(f.components_[i]))
            fail(ErrorCode::syntax, "invalid component name '" + f.components_[i] + "'");
        for (std::size_t j = i + 1; j < f.components_.size(); ++j)
            if (f.components_[i] == f.components_[j])
                fail(ErrorCode::duplicate,
                     "component '" + f.components_[i] + "' declared twice");
    }
    f.rules_.reserve(rules.size());
    for (Expr& rule : rules)
        f.rules_.push_back(rule.resolved(f.components_));
    f.finalize();
    return f;
}

void BooleanNetwork::finalize()
{
    index_.clear();
    for (int i = 0; i < size(); ++i)
        index_.emplace(components_[static_cast<std::size_t>(i)], i);
    supports_.clear();
    supports_.reserve(rules_.size());
    for (const Expr& rule : rules_)
        supports_.push_back(rule.variable_indices());
}

std::string BooleanNetwork::to_booleannet() const
{
    std::string out;
    for (int i = 0; i < size(); ++i) {
        out += components_[static_cast<std::size_t>(i)];
        out += ", ";
        out += rules_[static_cast<std::size_t>(i)].to_string();
        out += '\n';
    }
    return out;
}

int BooleanNetwork::index_of(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int BooleanNetwork::require_index(const std::string& name) const
{
    int i = index_of(name);
    if (i < 0)
        fail(ErrorCode::unknown_component, "unknown component '" + name + "'");
    return i;
}

bool BooleanNetwork::evaluate_local(int i, const Configuration& x) const
{
    return rules_[static_cast<std::size_t>(i)].evaluate(x.values());
}

bool BooleanNetwork::evaluate_local(const std::string& name, const Configuration& x) const
{
    return evaluate_local(require_index(name), x);
}

Configuration BooleanNetwork::apply(const Configuration& x) const
{
    Configuration y(size());
    for (int i = 0; i < size(); ++i)
        y.set(i, evaluate_local(i, x));
    return y;
}

BooleanNetwork BooleanNetwork::perturbed(const PartialAssignment& perturbation) const
{
    BooleanNetwork g = *this;
    for (const auto& [name, value] : perturbation) {
        int i = require_index(name);
        g.rules_[static_cast<std::size_t>(i)] = Expr::constant(value);
        g.supports_[static_cast<std::size_t>(i)].clear();
    }
    return g;
}

std::vector<std::pair<int, bool>> indexed_assignment(const PartialAssignment& a,
                                                     const BooleanNetwork& f)
{
    std::vector<std::pair<int, bool>> out;
    out.reserve(a.size());
    for (const auto& [name, value] : a)
        out.emplace_back(f.require_index(name), value);
    std::sort(out.begin(), out.end());
    return out;
}

bool assignment_less(const PartialAssignment& a, const PartialAssignment& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b; // std::map lexicographic on (key, value) pairs
}

bool is_submap(const PartialAssignment& sub, const PartialAssignment& sup)
{
    if (sub.size() > sup.size())
        return false;
    for (const auto& [name, value] : sub) {
        auto it = sup.find(name);
        if (it == sup.end() || it->second != value)
            return false;
    }
    return true;
}

} // namespace bnr
