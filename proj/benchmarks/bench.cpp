#include <benchmark/benchmark.h>

#include "germinv/cotangent.hpp"
#include "germinv/io.hpp"
#include "germinv/pipeline.hpp"
#include "germinv/subalgebra.hpp"

using namespace germinv;

namespace {

const char* kE6 = "n = 2\nbranch b (t): x1 = t^3, x2 = t^4\nideal: f = x1^4 - x2^3\n";
const char* kSpace345 = "n = 3\nbranch b (t): x1 = t^3, x2 = t^4, x3 = t^5\n";
const char* kTacnode =
    "n = 2\nbranch a (t): x1 = t, x2 = t^2\nbranch b (s): x1 = s, x2 = -s^2\nideal: f = x2^2 - x1^4\n";

void BM_saturate(benchmark::State& state)
{
    Parametrization phi = parse_instance(kSpace345).phi;
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(saturate_algebra(phi.generators({N}), {N}).dim());
}
BENCHMARK(BM_saturate)->Arg(32)->Arg(64)->Arg(128);

void BM_delta_certify(benchmark::State& state)
{
    Parametrization phi = parse_instance(kE6).phi;
    for (auto _ : state) benchmark::DoNotOptimize(delta_and_conductor(phi, Options{}).delta);
}
BENCHMARK(BM_delta_certify);

void BM_ae_codim(benchmark::State& state)
{
    Parametrization phi = parse_instance(kSpace345).phi;
    SubalgebraResult sub = delta_and_conductor(phi, Options{});
    for (auto _ : state) benchmark::DoNotOptimize(ae_codim_oracle(phi, sub));
}
BENCHMARK(BM_ae_codim);

void BM_full_verify(benchmark::State& state)
{
    ProblemInstance inst = parse_instance(kTacnode);
    for (auto _ : state) benchmark::DoNotOptimize(run(inst, RunLevel::Verify).exit_code);
}
BENCHMARK(BM_full_verify);

void BM_monomial_family(benchmark::State& state)
{
    // (t^a, t^(a+1)) with growing conductor
    const long a = state.range(0);
    ProblemInstance inst;
    inst.phi.n = 2;
    Branch br;
    br.name = "b";
    br.param = "t";
    br.coord.push_back(Poly::monomial(a, Rat(1)));
    br.coord.push_back(Poly::monomial(a + 1, Rat(1)));
    inst.phi.branches.push_back(br);
    for (auto _ : state) benchmark::DoNotOptimize(run(inst, RunLevel::Codim).exit_code);
}
BENCHMARK(BM_monomial_family)->Arg(3)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
