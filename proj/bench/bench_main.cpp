// Compares the OpenMP kernels against their serial counterparts and the
// brute-force references: fixed-point search, minimal-trap-space scan, and
// the candidate-checking loop of the reprogramming solvers. Results are
// checked for equality while timing.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <omp.h>

#include "bnr/dynamics.hpp"
#include "bnr/network.hpp"
#include "bnr/reprogram.hpp"
#include "support/testlib.hpp"

using namespace bnr;
using Clock = std::chrono::steady_clock;

namespace {

#ifndef BNR_MODELS_DIR
#define BNR_MODELS_DIR "models"
#endif

template <typename Fn>
double time_of(Fn&& fn, int repeats = 1)
{
    const auto start = Clock::now();
    for (int r = 0; r < repeats; ++r)
        fn();
    return std::chrono::duration<double>(Clock::now() - start).count() / repeats;
}

void row(const char* name, double serial, double parallel, bool equal)
{
    std::printf("%-38s %10.3f ms %10.3f ms   x%-5.2f %s\n", name, serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

BooleanNetwork load(const std::string& name)
{
    std::ifstream in(std::string(BNR_MODELS_DIR) + "/" + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return BooleanNetwork::parse(buf.str());
}

} // namespace

int main()
{
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-38s %13s %13s   %-6s\n", "kernel", "serial", "parallel", "speedup");

    std::mt19937 rng(20230215);

    {
        const BooleanNetwork f = bnrtest::random_unate_network(rng, 20, 3);
        std::vector<Configuration> naive, serial, parallel;
        const double t_naive = time_of([&] { naive = bnrtest::naive_fixed_points(f); });
        const double t_serial =
            time_of([&] { serial = fixed_points(f, {24, false}); }, 200);
        const double t_parallel =
            time_of([&] { parallel = fixed_points(f, {24, true}); }, 200);
        row("fixed points n=20: naive vs kernel", t_naive, t_serial, naive == serial);
        row("fixed points n=20: serial vs omp", t_serial, t_parallel, serial == parallel);
    }

    {
        const BooleanNetwork f = bnrtest::random_unate_network(rng, 15, 3);
        std::vector<Subhypercube> serial, parallel;
        const double t_serial =
            time_of([&] { serial = MpDynamics(f, {24, false}).minimal_trap_spaces(); });
        const double t_parallel =
            time_of([&] { parallel = MpDynamics(f, {24, true}).minimal_trap_spaces(); });
        row("minimal trap spaces n=15", t_serial, t_parallel, serial == parallel);
    }

    {
        const BooleanNetwork f = load("erbb_g1s.bnet");
        const PartialAssignment marker{{"pRB", true}, {"p27", false}};
        SolutionSet serial, parallel;
        SolveOptions s;
        s.parallel = false;
        SolveOptions p;
        p.parallel = true;
        const double t_serial = time_of([&] { serial = solve_p1(f, marker, 3, s); });
        const double t_parallel = time_of([&] { parallel = solve_p1(f, marker, 3, p); });
        row("P1 solver, 20-node model, k=3", t_serial, t_parallel, serial == parallel);
    }

    {
        const BooleanNetwork f = bnrtest::example3();
        const PartialAssignment marker{{"C", true}};
        SolutionSet serial, parallel;
        SolveOptions s;
        s.parallel = false;
        SolveOptions p;
        p.parallel = true;
        const double t_serial = time_of([&] { serial = solve_p3(f, marker, 4, s); }, 20);
        const double t_parallel = time_of([&] { parallel = solve_p3(f, marker, 4, p); }, 20);
        row("P3 solver, 5-node model, k=4", t_serial, t_parallel, serial == parallel);
    }

    return 0;
}
