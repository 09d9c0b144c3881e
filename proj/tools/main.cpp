#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnr/dot_io.hpp"
#include "bnr/dynamics.hpp"
#include "bnr/ensemble.hpp"
#include "bnr/errors.hpp"
#include "bnr/json_io.hpp"
#include "bnr/network.hpp"
#include "bnr/reprogram.hpp"
#include "bnr/unate.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        bnr::fail(bnr::ErrorCode::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bnr::BooleanNetwork load_model(const std::string& path)
{
    return bnr::BooleanNetwork::parse(read_file(path));
}

void require_monotone(const bnr::BooleanNetwork& f)
{
    for (int i = 0; i < f.size(); ++i)
        if (!bnr::unateness_certificate(f, i))
            bnr::fail(bnr::ErrorCode::not_unate,
                      "local function of '" + f.component_name(i) +
                          "' is not unate; only locally-monotone networks are supported");
}

std::set<std::string> parse_exclude(const std::string& text)
{
    std::set<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.insert(item);
    return out;
}

struct ReprogramArgs {
    std::string model;
    std::string marker;
    int k = 0;
    bool fixpoints = false;
    bool allow_no_fixpoint = false;
    std::string reachable_from;
    std::string exclude;
};

int run_reprogram(const ReprogramArgs& args)
{
    const bnr::BooleanNetwork f = load_model(args.model);
    require_monotone(f);
    bnr::ReprogramQuery query;
    query.marker = bnr::assignment_from_json_text(args.marker, f);
    if (query.marker.empty())
        bnr::fail(bnr::ErrorCode::syntax, "marker must assign at least one component");
    query.max_size = args.k;
    query.exclude = parse_exclude(args.exclude);
    query.ensure_exists = !args.allow_no_fixpoint;
    if (!args.reachable_from.empty())
        query.source = bnr::assignment_from_json_text(args.reachable_from, f);
    if (args.fixpoints)
        query.problem = query.source ? bnr::Problem::p2 : bnr::Problem::p1;
    else
        query.problem = query.source ? bnr::Problem::p4 : bnr::Problem::p3;

    std::size_t found = 0;
    bnr::SolveOptions opts;
    opts.on_solution = [&](const bnr::PartialAssignment& p) {
        std::cout << bnr::assignment_to_json(p).dump() << "\n" << std::flush;
        ++found;
    };
    bnr::solve(f, query, opts);
    return found > 0 ? 0 : 1;
}

int run_fixpoints(const std::string& model)
{
    const bnr::BooleanNetwork f = load_model(model);
    require_monotone(f);
    const auto fps = bnr::fixed_points(f);
    for (const bnr::Configuration& x : fps)
        std::cout << bnr::configuration_to_json(x, f).dump() << "\n";
    return fps.empty() ? 1 : 0;
}

int run_attractors(const std::string& model)
{
    const bnr::BooleanNetwork f = load_model(model);
    const bnr::MpDynamics dyn(f);
    for (const bnr::Subhypercube& m : dyn.minimal_trap_spaces())
        std::cout << bnr::attractor_to_json(m, f).dump() << "\n";
    return 0;
}

int run_trapspace(const std::string& model, const std::string& config)
{
    const bnr::BooleanNetwork f = load_model(model);
    const bnr::MpDynamics dyn(f);
    const bnr::Configuration x = bnr::configuration_from_json_text(config, f);
    std::cout << bnr::attractor_to_json(dyn.smallest_trap_space(x), f).dump() << "\n";
    return 0;
}

int run_influence_graph(const std::string& model)
{
    const bnr::BooleanNetwork f = load_model(model);
    std::cout << bnr::to_dot(bnr::influence_graph(f));
    return 0;
}

struct EnsembleArgs {
    std::string domain;
    std::string verb;
    std::string marker;
    int k = 0;
    bool universal = false;
    bool existential = false;
    bool fixpoints = false;
    bool allow_no_fixpoint = false;
    std::string reachable_from;
    std::string exclude;
    bool exact = false;
    bool exact_given = false;
    int max_clauses = 0;
    bool max_clauses_given = false;
};

bnr::Domain load_domain(const EnsembleArgs& args)
{
    namespace fs = std::filesystem;
    if (fs::is_directory(args.domain)) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(args.domain))
            if (entry.path().extension() == ".bnet")
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
        if (files.empty())
            bnr::fail(bnr::ErrorCode::io, "no .bnet file in '" + args.domain + "'");
        bnr::ExplicitDomain members;
        for (const std::string& file : files)
            members.push_back(load_model(file));
        return members;
    }

    const std::string text = read_file(args.domain);
    std::istringstream in(text);
    std::string line;
    bool model_like = false;
    while (std::getline(in, line)) {
        std::string t = line;
        t.erase(0, t.find_first_not_of(" \t\r"));
        if (t.empty() || t[0] == '#')
            continue;
        model_like = t.rfind("---", 0) == 0 || t.find(',') != std::string::npos;
        break;
    }
    if (model_like) {
        bnr::ExplicitDomain members;
        for (auto& [name, f] : bnr::parse_multi_model(text))
            members.push_back(std::move(f));
        return members;
    }

    bnr::ImplicitDomain dom;
    dom.graph = bnr::parse_edge_list(text);
    const std::string sidecar = args.domain + ".json";
    if (fs::exists(sidecar)) {
        nlohmann::json j = nlohmann::json::parse(read_file(sidecar), nullptr, false);
        if (j.is_discarded() || !j.is_object())
            bnr::fail(bnr::ErrorCode::syntax, "invalid domain sidecar '" + sidecar + "'");
        if (j.contains("exact"))
            dom.exact = j["exact"].get<bool>();
        if (j.contains("max_clauses") && !j["max_clauses"].is_null())
            dom.max_clauses = j["max_clauses"].get<int>();
        if (j.contains("nodes")) {
            std::vector<std::string> nodes = j["nodes"].get<std::vector<std::string>>();
            for (const bnr::InfluenceEdge& e : dom.graph.edges) {
                if (std::find(nodes.begin(), nodes.end(), e.source) == nodes.end() ||
                    std::find(nodes.begin(), nodes.end(), e.target) == nodes.end())
                    bnr::fail(bnr::ErrorCode::syntax,
                              "sidecar node list misses an edge endpoint");
            }
            dom.graph.nodes = std::move(nodes);
        }
    }
    if (args.exact_given)
        dom.exact = args.exact;
    if (args.max_clauses_given)
        dom.max_clauses = args.max_clauses;
    return dom;
}

int run_ensemble(const EnsembleArgs& args)
{
    const bnr::Domain domain = load_domain(args);

    if (args.verb == "enumerate") {
        std::cout << bnr::serialize_multi_model(bnr::enumerate_domain(domain));
        return 0;
    }
    if (args.verb == "attractors") {
        const auto members = bnr::enumerate_domain(domain);
        const auto attractors = bnr::domain_attractors(domain);
        for (std::size_t i = 0; i < members.size(); ++i) {
            nlohmann::json j;
            j["network"] = "bn" + std::to_string(i);
            j["attractors"] = nlohmann::json::array();
            for (const bnr::Subhypercube& m : attractors[i])
                j["attractors"].push_back(bnr::attractor_to_json(m, members[i]));
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    if (args.verb != "reprogram")
        bnr::fail(bnr::ErrorCode::syntax,
                  "unknown verb '" + args.verb + "' (enumerate, attractors, reprogram)");

    if (args.universal == args.existential)
        bnr::fail(bnr::ErrorCode::syntax,
                  "reprogram requires exactly one of --universal / --existential");
    if (args.marker.empty())
        bnr::fail(bnr::ErrorCode::syntax, "reprogram requires a marker and k");

    const auto members = bnr::enumerate_domain(domain);
    if (members.empty())
        bnr::fail(bnr::ErrorCode::domain_too_large, "domain contains no network");
    const bnr::BooleanNetwork& reference = members.front();

    const bnr::PartialAssignment marker = bnr::assignment_from_json_text(args.marker, reference);
    if (marker.empty())
        bnr::fail(bnr::ErrorCode::syntax, "marker must assign at least one component");
    std::optional<bnr::PartialAssignment> source;
    if (!args.reachable_from.empty())
        source = bnr::assignment_from_json_text(args.reachable_from, reference);

    bnr::Problem problem;
    if (args.fixpoints)
        problem = source ? bnr::Problem::p2 : bnr::Problem::p1;
    else
        problem = source ? bnr::Problem::p4 : bnr::Problem::p3;
    const bnr::Quantifier quantifier =
        args.universal ? bnr::Quantifier::universal : bnr::Quantifier::existential;

    std::size_t found = 0;
    bnr::SolveOptions opts;
    opts.exclude = parse_exclude(args.exclude);
    opts.ensure_exists = !args.allow_no_fixpoint;
    opts.on_solution = [&](const bnr::PartialAssignment& p) {
        std::cout << bnr::assignment_to_json(p).dump() << "\n" << std::flush;
        ++found;
    };
    bnr::solve_ensemble(members, quantifier, problem, source, marker, args.k, opts);
    return found > 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Most Permissive Boolean network analysis and attractor reprogramming"};
    app.require_subcommand(1);

    ReprogramArgs rep;
    auto* cmd_rep = app.add_subcommand(
        "reprogram", "Enumerate minimal permanent perturbations enforcing a marker");
    cmd_rep->add_option("model", rep.model, "BooleanNet (.bnet) model file")->required();
    cmd_rep->add_option("marker", rep.marker, "marker as a JSON map, e.g. '{\"C\": 1}'")
        ->required();
    cmd_rep->add_option("k", rep.k, "maximum number of simultaneous perturbations")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_rep->add_flag("--fixpoints", rep.fixpoints,
                      "reprogram fixed points instead of attractors");
    cmd_rep->add_option("--reachable-from", rep.reachable_from,
                        "restrict to attractors/fixed points reachable from this "
                        "configuration (JSON map; omitted components are free)");
    cmd_rep->add_flag("--allow-no-fixpoint", rep.allow_no_fixpoint,
                      "do not require a fixed point to exist (fixed-point problems)");
    cmd_rep->add_option("--exclude", rep.exclude,
                        "comma-separated uncontrollable components");

    std::string model_arg;
    auto* cmd_fix = app.add_subcommand("fixpoints", "List the fixed points");
    cmd_fix->add_option("model", model_arg, "BooleanNet model file")->required();
    auto* cmd_att =
        app.add_subcommand("attractors", "List the attractors (minimal trap spaces)");
    cmd_att->add_option("model", model_arg, "BooleanNet model file")->required();

    std::string config_arg;
    auto* cmd_ts = app.add_subcommand("trapspace",
                                      "Smallest trap space containing a configuration");
    cmd_ts->add_option("model", model_arg, "BooleanNet model file")->required();
    cmd_ts->add_option("config", config_arg, "total configuration as a JSON map")->required();

    auto* cmd_ig = app.add_subcommand("influence-graph", "Influence graph as DOT");
    cmd_ig->add_option("model", model_arg, "BooleanNet model file")->required();

    EnsembleArgs ens;
    auto* cmd_ens = app.add_subcommand("ensemble", "Reason over an ensemble of networks");
    cmd_ens->add_option("domain", ens.domain,
                        "directory of .bnet files, multi-model file, or influence-graph "
                        "edge list")
        ->required();
    cmd_ens->add_option("verb", ens.verb, "enumerate | attractors | reprogram")->required();
    cmd_ens->add_option("marker", ens.marker, "marker as a JSON map (reprogram)");
    cmd_ens->add_option("k", ens.k, "maximum number of simultaneous perturbations")
        ->check(CLI::NonNegativeNumber);
    cmd_ens->add_flag("--universal", ens.universal,
                      "perturbations working for every network of the domain");
    cmd_ens->add_flag("--existential", ens.existential,
                      "perturbations working for at least one network");
    cmd_ens->add_flag("--fixpoints", ens.fixpoints, "fixed-point problems");
    cmd_ens->add_option("--reachable-from", ens.reachable_from,
                        "source configuration (JSON map)");
    cmd_ens->add_flag("--allow-no-fixpoint", ens.allow_no_fixpoint,
                      "drop the fixed-point existence clause (existential fixpoints)");
    cmd_ens->add_option("--exclude", ens.exclude, "comma-separated uncontrollable components");
    auto* exact_opt =
        cmd_ens->add_flag("--exact,!--no-exact", ens.exact,
                          "networks must have exactly the given influence graph");
    auto* mc_opt = cmd_ens->add_option("--max-clauses", ens.max_clauses,
                                       "cap on DNF clauses per local function")
                       ->check(CLI::Range(1, 1 << 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_rep))
            return run_reprogram(rep);
        if (app.got_subcommand(cmd_fix))
            return run_fixpoints(model_arg);
        if (app.got_subcommand(cmd_att))
            return run_attractors(model_arg);
        if (app.got_subcommand(cmd_ts))
            return run_trapspace(model_arg, config_arg);
        if (app.got_subcommand(cmd_ig))
            return run_influence_graph(model_arg);
        if (app.got_subcommand(cmd_ens)) {
            ens.exact_given = exact_opt->count() > 0;
            ens.max_clauses_given = mc_opt->count() > 0;
            return run_ensemble(ens);
        }
    } catch (const bnr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
