#include "bnr/dot_io.hpp"

namespace bnr {

std::string to_dot(const InfluenceGraph& g)
{
    std::string out = "digraph influence {\n";
    for (const std::string& node : g.nodes)
        out += "  \"" + node + "\";\n";
    for (const InfluenceEdge& e : g.edges) {
        out += "  \"" + e.source + "\" -> \"" + e.target + "\" [sign=" +
               (e.sign > 0 ? "1" : "-1") +
               ", arrowhead=" + (e.sign > 0 ? "normal" : "tee") + "];\n";
    }
    out += "}\n";
    return out;
}

namespace {

std::string bits(std::uint64_t code, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (code & (std::uint64_t{1} << (n - 1 - i)))
            s[static_cast<std::size_t>(i)] = '1';
    return s;
}

} // namespace

std::string to_dot(const AsyncStg& stg)
{
    std::string out = "digraph stg {\n";
    for (std::uint64_t node : stg.nodes)
        out += "  \"" + bits(node, stg.n) + "\";\n";
    for (const auto& [src, dst] : stg.edges)
        out += "  \"" + bits(src, stg.n) + "\" -> \"" + bits(dst, stg.n) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace bnr
