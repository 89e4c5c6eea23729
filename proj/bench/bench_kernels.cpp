#include <benchmark/benchmark.h>

#include "rstack/generators.hpp"
#include "rstack/homology.hpp"
#include "rstack/manifold.hpp"

namespace {

using namespace rstack;

SimplicialComplex fixture(int which) {
    switch (which) {
        case 0: return klee_novik(6, 1);
        case 1: return kuhnel_lassmann(5, 11);
        case 2: return cross_polytope(6);
        default: return stacked_sphere(5, 24, 7);
    }
}

void link_scan(benchmark::State& state, ExecPolicy policy) {
    const SimplicialComplex complex = fixture(static_cast<int>(state.range(0)));
    const std::vector<Face> faces = complex.all_faces();
    for (auto _ : state) benchmark::DoNotOptimize(link_betti_profiles(complex, faces, FieldSpec::rationals(), policy));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * faces.size()));
}

void betti(benchmark::State& state, ExecPolicy policy) {
    const SimplicialComplex complex = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // Fresh copy so the face cache is rebuilt each time for both policies.
        const SimplicialComplex copy = SimplicialComplex::from_faces(complex.universe(), complex.facets());
        benchmark::DoNotOptimize(betti_numbers(copy, FieldSpec::rationals(), policy));
    }
}

void BM_LinkScanSerial(benchmark::State& s) { link_scan(s, ExecPolicy::serial); }
void BM_LinkScanParallel(benchmark::State& s) { link_scan(s, ExecPolicy::parallel); }
void BM_BettiSerial(benchmark::State& s) { betti(s, ExecPolicy::serial); }
void BM_BettiParallel(benchmark::State& s) { betti(s, ExecPolicy::parallel); }

}  // namespace

BENCHMARK(BM_LinkScanSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkScanParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BettiParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
