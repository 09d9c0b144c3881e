#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/testlib.hpp"

using namespace bnrtest;

#ifndef BNR_MODELS_DIR
#define BNR_MODELS_DIR "models"
#endif

namespace {

std::string model(const std::string& name)
{
    return std::string(BNR_MODELS_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cli golden transcripts")
{
    SUBCASE("P1 on example 1")
    {
        const CliResult r =
            run_cli("reprogram " + model("example1.bnet") + " '{\"C\": 1}' 2 --fixpoints");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{
                                       R"({"A":0})",
                                       R"({"B":0,"C":1})",
                                       R"({"A":1,"C":1})",
                                       R"({"B":1,"C":1})",
                                   });
    }
    SUBCASE("P2 on example 2")
    {
        const CliResult r = run_cli(
            "reprogram " + model("example2.bnet") +
            " '{\"C\": 1}' 2 --fixpoints --reachable-from "
            "'{\"A\": 1, \"B\": 1, \"C\": 0, \"D\": 0}'");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) ==
              std::multiset<std::string>{R"({"D":0})", R"({"C":1})"});
    }
    SUBCASE("P3 on example 3")
    {
        const CliResult r = run_cli("reprogram " + model("example3.bnet") + " '{\"C\": 1}' 3");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{
                                       R"({"C":1})",
                                       R"({"B":0,"D":0})",
                                       R"({"A":1,"D":0})",
                                   });
    }
    SUBCASE("P4 on example 3 with the four-component source")
    {
        const CliResult r = run_cli(
            "reprogram " + model("example3.bnet") +
            " '{\"C\": 1}' 3 --reachable-from "
            "'{\"A\": 1, \"B\": 0, \"C\": 0, \"D\": 0}'");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) ==
              std::multiset<std::string>{R"({"D":0})", R"({"C":1})"});
    }
}

TEST_CASE("cli flag-to-problem mapping")
{
    // On example 3 the four problems give pairwise different solution sets
    // for suitable queries; spot-check that each flag combination picks the
    // right problem.
    const std::string m3 = model("example3.bnet");
    const std::string z = " --reachable-from '{\"A\":1,\"B\":0,\"C\":0,\"D\":0,\"E\":0}'";

    const auto p1 = json_lines(run_cli("reprogram " + m3 + " '{\"C\":1}' 3 --fixpoints").out);
    const auto p2 =
        json_lines(run_cli("reprogram " + m3 + " '{\"C\":1}' 3 --fixpoints" + z).out);
    const auto p3 = json_lines(run_cli("reprogram " + m3 + " '{\"C\":1}' 3").out);
    const auto p4 = json_lines(run_cli("reprogram " + m3 + " '{\"C\":1}' 3" + z).out);

    CHECK(p1 == std::multiset<std::string>{R"({"D":0})", R"({"C":1})"});
    CHECK(p2 == std::multiset<std::string>{R"({"D":0})", R"({"C":1})"});
    CHECK(p3 == std::multiset<std::string>{R"({"C":1})", R"({"B":0,"D":0})",
                                           R"({"A":1,"D":0})"});
    CHECK(p4 == std::multiset<std::string>{R"({"D":0})", R"({"C":1})"});
    CHECK(p3 != p1);
}

TEST_CASE("cli analysis subcommands")
{
    SUBCASE("attractors of example 1")
    {
        const CliResult r = run_cli("attractors " + model("example1.bnet"));
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) ==
              std::multiset<std::string>{R"({"A":"*","B":"*","C":"*"})"});
    }
    SUBCASE("fixpoints of example 1: no line, exit 1")
    {
        const CliResult r = run_cli("fixpoints " + model("example1.bnet"));
        CHECK(r.exit_code == 1);
        CHECK(r.out.empty());
    }
    SUBCASE("fixpoints of example 2")
    {
        const CliResult r = run_cli("fixpoints " + model("example2.bnet"));
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{
                                       R"({"A":0,"B":0,"C":0,"D":1})",
                                       R"({"A":1,"B":1,"C":0,"D":1})",
                                       R"({"A":1,"B":1,"C":1,"D":0})",
                                   });
    }
    SUBCASE("trapspace of the all-zero configuration")
    {
        const CliResult r = run_cli("trapspace " + model("example1.bnet") +
                                    " '{\"A\":0,\"B\":0,\"C\":0}'");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) ==
              std::multiset<std::string>{R"({"A":"*","B":"*","C":"*"})"});
    }
    SUBCASE("influence graph as DOT")
    {
        const CliResult r = run_cli("influence-graph " + model("example1.bnet"));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("digraph influence") == 0);
        CHECK(r.out.find("\"A\" -> \"B\" [sign=-1, arrowhead=tee];") != std::string::npos);
        CHECK(r.out.find("\"B\" -> \"C\" [sign=1, arrowhead=normal];") != std::string::npos);
    }
}

TEST_CASE("cli ensemble subcommand")
{
    const std::string dom = model("fig7.ig");
    SUBCASE("enumerate lists four networks")
    {
        const CliResult r = run_cli("ensemble " + dom + " enumerate");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("--- bn0") == 0);
        CHECK(r.out.find("C, A|!B") != std::string::npos);
        CHECK(r.out.find("C, A&!B") != std::string::npos);
    }
    SUBCASE("universal attractor reprogramming")
    {
        const CliResult r = run_cli("ensemble " + dom + " reprogram '{\"D\": 1}' 2 --universal");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{
                                       R"({"C":1})",
                                       R"({"D":1})",
                                       R"({"A":1,"B":0})",
                                   });
    }
    SUBCASE("existential fixed-point reprogramming")
    {
        const CliResult r = run_cli("ensemble " + dom +
                                    " reprogram '{\"D\": 1}' 2 --existential --fixpoints");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{"{}"});
    }
    SUBCASE("universal fixed-point reprogramming")
    {
        const CliResult r =
            run_cli("ensemble " + dom + " reprogram '{\"D\": 1}' 2 --universal --fixpoints");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{
                                       R"({"A":1})",
                                       R"({"C":1})",
                                       R"({"D":1})",
                                   });
    }
    SUBCASE("a singleton ensemble behaves like the plain command")
    {
        const CliResult ens = run_cli("ensemble " + model("example3.bnet") +
                                      " reprogram '{\"C\": 1}' 3 --universal");
        const CliResult plain = run_cli("reprogram " + model("example3.bnet") + " '{\"C\": 1}' 3");
        CHECK(ens.exit_code == 0);
        CHECK(json_lines(ens.out) == json_lines(plain.out));
    }
    SUBCASE("the quantifier must be explicit")
    {
        CHECK(run_cli("ensemble " + dom + " reprogram '{\"D\": 1}' 2").exit_code == 2);
    }
    SUBCASE("sidecar flags can be overridden")
    {
        const CliResult loose = run_cli("ensemble " + dom + " enumerate --no-exact");
        CHECK(loose.exit_code == 0);
        std::size_t count = 0, pos = 0;
        while ((pos = loose.out.find("--- bn", pos)) != std::string::npos) {
            ++count;
            pos += 6;
        }
        CHECK(count == 108); // all networks below the influence graph
    }
    SUBCASE("directory ensembles")
    {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "bnr_ensemble_dir_test";
        fs::create_directories(dir);
        std::ofstream(dir / "m1.bnet") << "A, 1\nB, A\n";
        std::ofstream(dir / "m2.bnet") << "A, 0\nB, A\n";
        const CliResult r =
            run_cli("ensemble " + dir.string() + " reprogram '{\"B\": 1}' 1 --universal");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) ==
              std::multiset<std::string>{R"({"A":1})", R"({"B":1})"});
        fs::remove_all(dir);
    }
}

TEST_CASE("cli option handling")
{
    SUBCASE("--allow-no-fixpoint returns the empty perturbation on example 1")
    {
        const CliResult r = run_cli("reprogram " + model("example1.bnet") +
                                    " '{\"C\": 1}' 2 --fixpoints --allow-no-fixpoint");
        CHECK(r.exit_code == 0);
        CHECK(json_lines(r.out) == std::multiset<std::string>{"{}"});
    }
    SUBCASE("--exclude removes components from the candidates")
    {
        const CliResult r = run_cli("reprogram " + model("example1.bnet") +
                                    " '{\"C\": 1}' 2 --fixpoints --exclude A,C");
        CHECK(r.exit_code == 1);
        CHECK(r.out.empty()); // B alone cannot create a C=1 fixed point
        const CliResult r2 = run_cli("reprogram " + model("example1.bnet") +
                                     " '{\"C\": 1}' 2 --fixpoints --exclude A");
        CHECK(r2.exit_code == 0);
        CHECK(json_lines(r2.out) == std::multiset<std::string>{R"({"B":0,"C":1})",
                                                               R"({"B":1,"C":1})"});
    }
}

TEST_CASE("cli error handling and determinism")
{
    SUBCASE("exit 1 when no solution exists")
    {
        // k=0 and the wild-type violates the marker.
        const CliResult r =
            run_cli("reprogram " + model("example3.bnet") + " '{\"C\": 1}' 0");
        CHECK(r.exit_code == 1);
        CHECK(r.out.empty());
    }
    SUBCASE("exit 2 on parse and usage errors")
    {
        CHECK(run_cli("reprogram missing.bnet '{\"C\":1}' 2 2>/dev/null").exit_code == 2);
        CHECK(run_cli("reprogram " + model("example1.bnet") + " 'not json' 2 2>/dev/null")
                  .exit_code == 2);
        CHECK(run_cli("reprogram " + model("example1.bnet") + " '{\"Z\":1}' 2 2>/dev/null")
                  .exit_code == 2);
        CHECK(run_cli("reprogram " + model("example1.bnet") + " '{\"C\":2}' 2 2>/dev/null")
                  .exit_code == 2);
        CHECK(run_cli("reprogram " + model("example1.bnet") + " '{}' 2 2>/dev/null")
                  .exit_code == 2);
        CHECK(run_cli("nonsense 2>/dev/null").exit_code == 2);
        CHECK(run_cli("fixpoints 2>/dev/null").exit_code == 2);
    }
    SUBCASE("output lines parse back with the right value domains")
    {
        const CliResult sols =
            run_cli("reprogram " + model("example3.bnet") + " '{\"C\": 1}' 3");
        std::istringstream in(sols.out);
        std::string line;
        while (std::getline(in, line)) {
            const auto j = nlohmann::json::parse(line);
            REQUIRE(j.is_object());
            for (const auto& [key, value] : j.items()) {
                (void)key;
                CHECK(value.is_number_integer());
                CHECK((value == 0 || value == 1));
            }
        }
        const CliResult atts = run_cli("attractors " + model("example3.bnet"));
        std::istringstream in2(atts.out);
        while (std::getline(in2, line)) {
            const auto j = nlohmann::json::parse(line);
            REQUIRE(j.is_object());
            for (const auto& [key, value] : j.items()) {
                (void)key;
                CHECK((value == 0 || value == 1 || value == "*"));
            }
        }
    }
    SUBCASE("output is byte-identical across runs")
    {
        const std::string cmd =
            "reprogram " + model("example3.bnet") + " '{\"C\": 1}' 3 --fixpoints";
        const CliResult a = run_cli(cmd);
        const CliResult b = run_cli(cmd);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
        const CliResult c = run_cli("attractors " + model("example3.bnet"));
        const CliResult d = run_cli("attractors " + model("example3.bnet"));
        CHECK(c.out == d.out);
    }
}
