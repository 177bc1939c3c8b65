#include <benchmark/benchmark.h>

#include "cmnet/commands.hpp"
#include "cmnet/config.hpp"
#include "cmnet/recurrence.hpp"
#include "cmnet/theorems.hpp"

using namespace cmnet;

namespace {

InstanceConfig instance()
{
    return parse_config("[field]\nN = -2\n[curve]\na2 = 1\na4 = -3\na6 = 1\n[point]\nP.x = -1\nP.y = 2\n"
                        "omegaP.x = 1/2\nomegaP.y = 0+1/4*w\n[support]\nprimes = 2, 3\n");
}

void net_fill(benchmark::State& state)
{
    InstanceConfig cfg = instance();
    const std::int64_t box = state.range(0);
    for (auto _ : state) {
        NetLattice L(cfg.base_pair());
        for (std::int64_t a = -box; a <= box; ++a) {
            for (std::int64_t b = -box; b <= box; ++b) {
                benchmark::DoNotOptimize(L.psi(a, b));
            }
        }
    }
}
BENCHMARK(net_fill)->Arg(3)->Arg(5)->Arg(7);

void valuation_fast_vs_division(benchmark::State& state)
{
    InstanceConfig cfg = instance();
    NetLattice L(cfg.base_pair());
    PrimeIdeal m = prime_from_generator(QFElem(L.params(), 1L, -1L));
    QFElem x = L.psi(6, 5);
    const bool fast = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast ? valuation(x, m) : valuation_by_division(x, m));
    }
}
BENCHMARK(valuation_fast_vs_division)->Arg(1)->Arg(0);

void g_values(benchmark::State& state)
{
    Instance inst(instance());
    PrimeIdeal m = prime_from_generator(QFElem(inst.net.params(), 1L, -1L));
    for (auto _ : state) {
        long sum = 0;
        for (int a = -4; a <= 4; ++a) {
            for (int b = -4; b <= 4; ++b) {
                sum += g_direct(inst.net, OrderElem(inst.net.params(), a, b), m);
            }
        }
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(g_values);

void recurrence_triple(benchmark::State& state)
{
    Instance inst(instance());
    MIdeal M = M_ideal(inst.net.base(), bad_primes(inst.net.base().curve, inst.support), 200);
    RecurrenceContext ctx(inst.net, inst.support, M.generator);
    const FieldParams& p = inst.net.params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.verify(OrderElem(p, 0, 2), OrderElem(p, 0, 1), OrderElem(p, 1, 0)));
    }
}
BENCHMARK(recurrence_triple);

}  // namespace

BENCHMARK_MAIN();
