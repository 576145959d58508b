#include "stackhom/builtins.hpp"
#include "stackhom/equivariant.hpp"
#include "stackhom/theories.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace stackhom;

namespace {

ExactMat random_int_matrix(long n, unsigned seed) {
    std::mt19937 rng(seed);
    ExactMat m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 21) - 10;
    return m;
}

void BM_snf_dense(benchmark::State& state) {
    ExactMat m = random_int_matrix(state.range(0), 42);
    for (auto _ : state) {
        SnfResult s = snf(m);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_snf_dense)->Arg(10)->Arg(20);

// the representative workload: sparse boundary matrices of subdivided models
void BM_snf_boundary(benchmark::State& state) {
    SimplicialComplex s2 = find_builtin("sphere2").file.complex();
    for (int i = 0; i < state.range(0); ++i) s2 = barycentric_subdivision(s2).sd;
    ExactMat d2 = s2.boundary_complex(Coefficients::integers()).differential(2);
    for (auto _ : state) {
        SnfResult s = snf(d2);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_snf_boundary)->Arg(1)->Arg(2);

void BM_rank_bareiss(benchmark::State& state) {
    ExactMat m = random_int_matrix(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank_over_field(m, Coefficients::rationals()));
}
BENCHMARK(BM_rank_bareiss)->Arg(20)->Arg(40)->Arg(80);

void BM_torus_homology(benchmark::State& state) {
    SimplicialComplex torus = find_builtin("torus").file.complex();
    for (auto _ : state) {
        ChainComplex cx = torus.boundary_complex(Coefficients::integers());
        benchmark::DoNotOptimize(cx.homology());
    }
}
BENCHMARK(BM_torus_homology);

void BM_subdivision(benchmark::State& state) {
    SimplicialComplex s2 = find_builtin("sphere2").file.complex();
    for (auto _ : state) {
        SubdivisionResult r = barycentric_subdivision(s2);
        benchmark::DoNotOptimize(r.sd.total_faces());
    }
}
BENCHMARK(BM_subdivision);

void BM_equivariant_antipodal(benchmark::State& state) {
    const Builtin& b = find_builtin("sphere2_antipodal");
    SimplicialPair p = b.file.pair();
    GroupAction a = *b.file.action(p.ambient());
    Coefficients f2 = Coefficients::prime_field(2);
    for (auto _ : state) {
        TheoryReport r = equivariant_homology(p, a, f2, -2, 2);
        benchmark::DoNotOptimize(r.groups.support());
    }
}
BENCHMARK(BM_equivariant_antipodal);

void BM_poincare_torus(benchmark::State& state) {
    const Builtin& b = find_builtin("torus");
    SimplicialComplex x = b.file.complex();
    auto o = b.file.orientation_signs(x);
    for (auto _ : state) {
        TheoryReport r = poincare_duality_check(x, o, Coefficients::rationals());
        benchmark::DoNotOptimize(r.all_pass());
    }
}
BENCHMARK(BM_poincare_torus);

} // namespace

BENCHMARK_MAIN();
