#include "bnr/json_io.hpp"

#include "bnr/errors.hpp"

namespace bnr {

nlohmann::json assignment_to_json(const PartialAssignment& a)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : a)
        j[name] = value ? 1 : 0;
    return j;
}

nlohmann::json configuration_to_json(const Configuration& x, const BooleanNetwork& f)
{
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i < f.size(); ++i)
        j[f.component_name(i)] = x.get(i) ? 1 : 0;
    return j;
}

nlohmann::json attractor_to_json(const Subhypercube& h, const BooleanNetwork& f)
{
    nlohmann::json j = nlohmann::json::object();
    for (int i = 0; i < f.size(); ++i) {
        if (h.is_free(i))
            j[f.component_name(i)] = "*";
        else
            j[f.component_name(i)] = h.fixed_value(i) ? 1 : 0;
    }
    return j;
}

PartialAssignment assignment_from_json(const nlohmann::json& j, const BooleanNetwork& f)
{
    if (!j.is_object())
        fail(ErrorCode::syntax, "expected a JSON object");
    PartialAssignment a;
    for (const auto& [name, value] : j.items()) {
        f.require_index(name);
        if (!value.is_number_integer() ||
            (value.get<int>() != 0 && value.get<int>() != 1))
            fail(ErrorCode::syntax, "value of '" + name + "' must be 0 or 1");
        a[name] = value.get<int>() == 1;
    }
    return a;
}

PartialAssignment assignment_from_json_text(const std::string& text, const BooleanNetwork& f)
{
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(ErrorCode::syntax, "invalid JSON: " + text);
    return assignment_from_json(j, f);
}

Configuration configuration_from_json_text(const std::string& text, const BooleanNetwork& f)
{
    const PartialAssignment a = assignment_from_json_text(text, f);
    if (static_cast<int>(a.size()) != f.size())
        fail(ErrorCode::syntax, "configuration must assign every component");
    Configuration x(f.size());
    for (const auto& [name, value] : a)
        x.set(f.require_index(name), value);
    return x;
}

} // namespace bnr
