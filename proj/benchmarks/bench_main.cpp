// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "frcodes/bounds.hpp"
#include "frcodes/constructions.hpp"
#include "frcodes/hierarchy.hpp"
#include "frcodes/storage.hpp"

namespace {

using namespace frcodes;

void BM_SupportedFileSize(benchmark::State& state) {
    const IncidenceStructure& s = fixture("example3-petersen");
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(supported_file_size(s, k));
}
BENCHMARK(BM_SupportedFileSize)->Arg(4)->Arg(6)->Arg(8)->Arg(11);

void BM_FullHierarchyDirect(benchmark::State& state) {
    const IncidenceStructure& s = fixture("example3-petersen");
    for (auto _ : state) benchmark::DoNotOptimize(full_hierarchy(s));
}
BENCHMARK(BM_FullHierarchyDirect);

void BM_FullHierarchyViaDual(benchmark::State& state) {
    const IncidenceStructure& s = fixture("example3-petersen");
    for (auto _ : state) benchmark::DoNotOptimize(hierarchy_via_dual(s));
}
BENCHMARK(BM_FullHierarchyViaDual);

void BM_CompleteGraphHierarchy(benchmark::State& state) {
    const FrCode code = complete_graph_code(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(full_hierarchy(code.structure()));
}
BENCHMARK(BM_CompleteGraphHierarchy)->Arg(5)->Arg(7)->Arg(9);

void BM_BoundReport(benchmark::State& state) {
    const FrParams p{15, 2, 10, 3};
    for (auto _ : state) benchmark::DoNotOptimize(bound_report(p));
}
BENCHMARK(BM_BoundReport);

void BM_EncodeAndPlace(benchmark::State& state) {
    const FrCode code(fixture("example3-petersen"));
    std::vector<std::uint8_t> file(6 * 1024);
    std::mt19937 rng(1);
    for (auto& b : file) b = static_cast<std::uint8_t>(rng());
    for (auto _ : state)
        benchmark::DoNotOptimize(StorageSystem::encode_and_place(code, file, 6));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(file.size()));
}
BENCHMARK(BM_EncodeAndPlace);

void BM_Reconstruct(benchmark::State& state) {
    const FrCode code(fixture("example3-petersen"));
    std::vector<std::uint8_t> file(6 * 1024);
    std::mt19937 rng(2);
    for (auto& b : file) b = static_cast<std::uint8_t>(rng());
    const StorageSystem sys = StorageSystem::encode_and_place(code, file, 6);
    const std::vector<int> nodes{0, 1, 2, 3, 4, 9};
    for (auto _ : state) benchmark::DoNotOptimize(sys.reconstruct_from(nodes));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(file.size()));
}
BENCHMARK(BM_Reconstruct);

}  // namespace

BENCHMARK_MAIN();
