#include <benchmark/benchmark.h>

#include "dimerlab/cluster.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/random.hpp"
#include "dimerlab/zigzag.hpp"
#include "support/fixtures.hpp"

using namespace dimerlab;

namespace {

void BM_Determinant(benchmark::State& state) {
    TorusGraph g = state.range(0) == 0 ? fixtures::hex4() : fixtures::square3x2();
    Rng rng(1);
    Weighting w = random_weighting(g, rng);
    std::vector<int> kappa = kasteleyn_orientation(g);
    for (auto _ : state) {
        KasteleynData kd = kasteleyn_matrix(g, w, kappa);
        benchmark::DoNotOptimize(kd.det.term_count());
    }
}
BENCHMARK(BM_Determinant)->Arg(0)->Arg(1);

void BM_Matchings(benchmark::State& state) {
    TorusGraph g = fixtures::square3x2();
    Weighting w = unit_weights(g);
    for (auto _ : state) {
        auto m = enumerate_matchings(g, w);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_Matchings);

void BM_Consistency(benchmark::State& state) {
    TorusGraph g = fixtures::hex4();
    for (auto _ : state) {
        ConsistencyResult r = check_consistency(g);
        benchmark::DoNotOptimize(r.consistent);
    }
}
BENCHMARK(BM_Consistency);

void BM_CommutativityPoint(benchmark::State& state) {
    TorusGraph g = fixtures::hex4();
    Rng rng(2);
    ClusterSeed seed = face_coordinates(g, random_weighting(g, rng));
    for (auto _ : state) {
        CommutativityReport rep = commutativity_check(g, seed);
        benchmark::DoNotOptimize(rep.all_zero);
    }
}
BENCHMARK(BM_CommutativityPoint);

}  // namespace

BENCHMARK_MAIN();
