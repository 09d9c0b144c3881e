#include <doctest.h>

#include <random>

#include "bnr/dot_io.hpp"
#include "bnr/errors.hpp"
#include "bnr/network.hpp"
#include "bnr/unate.hpp"
#include "support/testlib.hpp"

using namespace bnr;
using namespace bnrtest;

TEST_CASE("booleannet parsing")
{
    SUBCASE("three-component example")
    {
        const BooleanNetwork f = BooleanNetwork::parse("A, B\nB, !A\nC, !A&B");
        CHECK(f.size() == 3);
        CHECK(f.components() == std::vector<std::string>{"A", "B", "C"});
        CHECK(f.rule(0).to_string() == "B");
        CHECK(f.rule(1).to_string() == "!A");
        CHECK(f.rule(2).to_string() == "!A&B");
    }
    SUBCASE("empty input gives the empty network")
    {
        CHECK(BooleanNetwork::parse("").size() == 0);
    }
    SUBCASE("comments, blank lines and header are skipped")
    {
        const BooleanNetwork f =
            BooleanNetwork::parse("# model\ntargets, factors\n\nA, 1\n  B ,  A \n");
        CHECK(f.size() == 2);
        CHECK(f.components() == std::vector<std::string>{"A", "B"});
    }
    SUBCASE("operator precedence: & over |, ! tightest")
    {
        const BooleanNetwork f = BooleanNetwork::parse("A, B\nB, A\nC, A | B & !A");
        Configuration x(3);
        x.set(0, false);
        x.set(1, true);
        CHECK(f.evaluate_local(2, x) == true); // A | (B & !A)
    }
    SUBCASE("undeclared variable")
    {
        CHECK_THROWS_WITH_AS(BooleanNetwork::parse("A, B"),
                             doctest::Contains("line 1"), Error);
        try {
            BooleanNetwork::parse("A, B");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::undeclared);
        }
    }
    SUBCASE("duplicate declaration")
    {
        try {
            BooleanNetwork::parse("A, 1\nA, 0");
            FAIL("expected duplicate error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::duplicate);
        }
    }
    SUBCASE("syntax errors carry line numbers")
    {
        try {
            BooleanNetwork::parse("A, 1\nB, A &\n");
            FAIL("expected syntax error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::syntax);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
        CHECK_THROWS_AS(BooleanNetwork::parse("A"), Error);
        CHECK_THROWS_AS(BooleanNetwork::parse("1A, 1"), Error);
        CHECK_THROWS_AS(BooleanNetwork::parse("A, (B"), Error);
        CHECK_THROWS_AS(BooleanNetwork::parse("A, 10"), Error);
    }
}

TEST_CASE("serialization round-trip")
{
    SUBCASE("example 1 matches its source lines")
    {
        CHECK(example1().to_booleannet() == "A, B\nB, !A\nC, !A&B\n");
    }
    SUBCASE("empty network serializes to nothing")
    {
        CHECK(BooleanNetwork().to_booleannet() == "");
    }
    SUBCASE("random networks are a parse/serialize fixpoint")
    {
        std::mt19937 rng(7);
        for (int round = 0; round < 60; ++round) {
            const BooleanNetwork f = random_unate_network(rng, 2 + round % 7, 3);
            const BooleanNetwork g = BooleanNetwork::parse(f.to_booleannet());
            CHECK(semantically_equal(f, g));
        }
    }
    SUBCASE("parenthesized negations survive")
    {
        const BooleanNetwork f = BooleanNetwork::parse("A, B\nB, !(A & B) | !B");
        const BooleanNetwork g = BooleanNetwork::parse(f.to_booleannet());
        CHECK(semantically_equal(f, g));
    }
}

TEST_CASE("evaluation and application")
{
    // f1 = !x2, f2 = !x1, f3 = !x1 & x2
    const BooleanNetwork f =
        BooleanNetwork::from_rules({{"x1", "!x2"}, {"x2", "!x1"}, {"x3", "!x1 & x2"}});
    const Configuration zero(3);

    CHECK(f.evaluate_local(2, zero) == false);
    CHECK(f.apply(zero).code() == 0b110); // f(000) = 110

    SUBCASE("constant rule evaluates to itself everywhere")
    {
        const BooleanNetwork c = BooleanNetwork::from_rules({{"A", "1"}, {"B", "A"}});
        for (std::uint64_t code = 0; code < 4; ++code)
            CHECK(c.evaluate_local(0, Configuration::from_code(2, code)) == true);
    }
    SUBCASE("truth-table evaluation")
    {
        const BooleanNetwork g = BooleanNetwork::from_rules(
            {{"x1", "x1 | (!x3 & x2)"}, {"x2", "x2"}, {"x3", "x3"}});
        Configuration x(3);
        x.set(1, true);
        CHECK(g.evaluate_local(0, x) == true); // (0,1,0) -> 1
    }
    SUBCASE("identity network is fixed everywhere")
    {
        const BooleanNetwork id =
            BooleanNetwork::from_rules({{"A", "A"}, {"B", "B"}, {"C", "C"}});
        for (std::uint64_t code = 0; code < 8; ++code) {
            const Configuration x = Configuration::from_code(3, code);
            CHECK(id.apply(x) == x);
        }
    }
    SUBCASE("apply agrees with per-component evaluation, exhaustively")
    {
        std::mt19937 rng(11);
        for (int round = 0; round < 20; ++round) {
            const BooleanNetwork g = random_unate_network(rng, 2 + round % 7, 3);
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.size()); ++code) {
                const Configuration x = Configuration::from_code(g.size(), code);
                const Configuration y = g.apply(x);
                for (int i = 0; i < g.size(); ++i)
                    CHECK(y.get(i) == g.evaluate_local(i, x));
            }
        }
    }
}

TEST_CASE("unateness certificates")
{
    SUBCASE("x1 | (!x3 & x2) is unate with signs +,+,-")
    {
        const BooleanNetwork f = BooleanNetwork::from_rules(
            {{"x1", "x1 | (!x3 & x2)"}, {"x2", "x2"}, {"x3", "x3"}});
        const auto cert = unateness_certificate(f, 0);
        REQUIRE(cert.has_value());
        CHECK((*cert)[0] == Sign::positive);
        CHECK((*cert)[1] == Sign::positive);
        CHECK((*cert)[2] == Sign::negative);
    }
    SUBCASE("xor is not unate")
    {
        const BooleanNetwork f = BooleanNetwork::from_rules(
            {{"x1", "(x2 & !x3) | (!x2 & x3)"}, {"x2", "x2"}, {"x3", "x3"}});
        CHECK(!unateness_certificate(f, 0).has_value());
        CHECK(!is_locally_monotone(f));
    }
    SUBCASE("constants have no used component")
    {
        const BooleanNetwork f = BooleanNetwork::from_rules({{"A", "1"}, {"B", "0"}});
        const auto cert = unateness_certificate(f, 0);
        REQUIRE(cert.has_value());
        CHECK((*cert)[0] == Sign::unused);
        CHECK((*cert)[1] == Sign::unused);
    }
    SUBCASE("syntactically redundant variables are unused")
    {
        // B appears in the rule but never changes its value.
        const BooleanNetwork f =
            BooleanNetwork::from_rules({{"A", "(A & B) | (A & !B)"}, {"B", "B"}});
        const auto cert = unateness_certificate(f, 0);
        REQUIRE(cert.has_value());
        CHECK((*cert)[1] == Sign::unused);
    }
    SUBCASE("example networks are locally monotone")
    {
        CHECK(is_locally_monotone(example1()));
        CHECK(is_locally_monotone(example2()));
        CHECK(is_locally_monotone(example3()));
        CHECK(is_locally_monotone(network_g()));
        CHECK(is_locally_monotone(BooleanNetwork())); // vacuous
    }
}

TEST_CASE("influence graph")
{
    SUBCASE("example 1")
    {
        const InfluenceGraph g = influence_graph(example1());
        CHECK(g.nodes == std::vector<std::string>{"A", "B", "C"});
        CHECK(g.edges.size() == 4);
        CHECK(g.has_edge("B", +1, "A"));
        CHECK(g.has_edge("A", -1, "B"));
        CHECK(g.has_edge("A", -1, "C"));
        CHECK(g.has_edge("B", +1, "C"));
    }
    SUBCASE("example 2")
    {
        const InfluenceGraph g = influence_graph(example2());
        CHECK(g.edges.size() == 6);
        CHECK(g.has_edge("B", +1, "A"));
        CHECK(g.has_edge("A", +1, "B"));
        CHECK(g.has_edge("A", +1, "C"));
        CHECK(g.has_edge("B", +1, "C"));
        CHECK(g.has_edge("D", -1, "C"));
        CHECK(g.has_edge("C", -1, "D"));
    }
    SUBCASE("constant network has no edge")
    {
        CHECK(influence_graph(BooleanNetwork::from_rules({{"A", "1"}, {"B", "0"}}))
                  .edges.empty());
    }
    SUBCASE("certificate signs agree with influence edges")
    {
        std::mt19937 rng(23);
        for (int round = 0; round < 25; ++round) {
            const BooleanNetwork f = random_unate_network(rng, 2 + round % 7, 3);
            const InfluenceGraph g = influence_graph(f);
            for (int i = 0; i < f.size(); ++i) {
                const auto cert = unateness_certificate(f, i);
                REQUIRE(cert.has_value());
                for (int j = 0; j < f.size(); ++j) {
                    const Sign s = (*cert)[static_cast<std::size_t>(j)];
                    CHECK(g.has_edge(f.component_name(j), +1, f.component_name(i)) ==
                          (s == Sign::positive));
                    CHECK(g.has_edge(f.component_name(j), -1, f.component_name(i)) ==
                          (s == Sign::negative));
                }
            }
        }
    }
    SUBCASE("a non-unate rule yields both signs as two edges")
    {
        const BooleanNetwork f = BooleanNetwork::from_rules(
            {{"x1", "(x2 & !x3) | (!x2 & x3)"}, {"x2", "x2"}, {"x3", "x3"}});
        const InfluenceGraph g = influence_graph(f);
        CHECK(g.has_edge("x2", +1, "x1"));
        CHECK(g.has_edge("x2", -1, "x1"));
        CHECK(g.has_edge("x3", +1, "x1"));
        CHECK(g.has_edge("x3", -1, "x1"));
    }
    SUBCASE("dot rendering")
    {
        const std::string dot = to_dot(influence_graph(example1()));
        CHECK(dot.find("digraph influence") != std::string::npos);
        CHECK(dot.find("\"A\" -> \"B\" [sign=-1, arrowhead=tee];") != std::string::npos);
        CHECK(dot.find("\"B\" -> \"A\" [sign=1, arrowhead=normal];") != std::string::npos);
    }
}

TEST_CASE("perturbation")
{
    const BooleanNetwork f = example3();
    SUBCASE("forced rules become constants, the rest stay put")
    {
        const BooleanNetwork p = f.perturbed({{"D", false}});
        CHECK(p.rule(p.require_index("D")).to_string() == "0");
        CHECK(p.rule(p.require_index("A")).to_string() == "!B");
        // the original is untouched
        CHECK(f.rule(f.require_index("D")).to_string() == "C|E");
    }
    SUBCASE("empty perturbation is the same network")
    {
        CHECK(semantically_equal(f, f.perturbed({})));
    }
    SUBCASE("unknown component")
    {
        CHECK_THROWS_AS(f.perturbed({{"Z", true}}), Error);
    }
    SUBCASE("perturbed components lose incoming influence")
    {
        const InfluenceGraph g = influence_graph(f.perturbed({{"D", false}}));
        for (const InfluenceEdge& e : g.edges)
            CHECK(e.target != "D");
    }
    SUBCASE("idempotence and forced values")
    {
        std::mt19937 rng(5);
        for (int round = 0; round < 15; ++round) {
            const BooleanNetwork g = random_unate_network(rng, 4, 3);
            const PartialAssignment p{{"n1", true}, {"n3", false}};
            const BooleanNetwork gp = g.perturbed(p);
            CHECK(semantically_equal(gp, gp.perturbed(p)));
            for (std::uint64_t code = 0; code < 16; ++code) {
                const Configuration x = Configuration::from_code(4, code);
                CHECK(gp.evaluate_local("n1", x) == true);
                CHECK(gp.evaluate_local("n3", x) == false);
            }
        }
    }
}
