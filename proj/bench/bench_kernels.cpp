// OpenMP kernels against their serial references.

#include "arboreal/curves.hpp"
#include "arboreal/galois.hpp"
#include "arboreal/index_sets.hpp"
#include "arboreal/tree_group.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace arboreal;

namespace {

const std::vector<unsigned long>& primes() {
    static const auto ps = odd_primes(2000);
    return ps;
}

void BM_FrobeniusParallel(benchmark::State& state) {
    QuadPair p = QuadPair::parse("1,0");
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_sample(p, 3, primes()));
}
void BM_FrobeniusSerial(benchmark::State& state) {
    QuadPair p = QuadPair::parse("1,0");
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_sample_serial(p, 3, primes()));
}

void BM_PointSearchParallel(benchmark::State& state) {
    CurveSpec c{QuadPair::parse("-2,0"), 1, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(naive_point_search(c, state.range(0)));
}
void BM_PointSearchSerial(benchmark::State& state) {
    CurveSpec c{QuadPair::parse("-2,0"), 1, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(naive_point_search_serial(c, state.range(0)));
}

void BM_NoncommutationParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_noncommutation(3));
}
void BM_NoncommutationSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_noncommutation_serial(3));
}

IndexFamily bertrand_prefix(std::uint64_t n) {
    std::vector<std::uint64_t> a(n);
    std::iota(a.begin(), a.end(), 1);
    return bertrand_family(a).first;
}

void BM_MCoprimeParallel(benchmark::State& state) {
    IndexFamily fam = bertrand_prefix(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(m_coprime_witness(fam, 0));
}
void BM_MCoprimeSerial(benchmark::State& state) {
    IndexFamily fam = bertrand_prefix(state.range(0));
    for (auto _ : state) {
        MCoprimeScan scan(0);
        for (const auto& m : fam.members()) scan.add(m);
        benchmark::DoNotOptimize(std::move(scan).finish());
    }
}

}  // namespace

BENCHMARK(BM_FrobeniusParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchParallel)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PointSearchSerial)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoncommutationParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoncommutationSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MCoprimeParallel)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MCoprimeSerial)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
