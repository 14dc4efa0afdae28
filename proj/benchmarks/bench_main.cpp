#include "scv/commutant.hpp"
#include "scv/corpus.hpp"
#include "scv/linalg.hpp"
#include "scv/modes.hpp"

#include <benchmark/benchmark.h>

using namespace scv;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    CorpusRng rng(seed);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(4) != 0)
                m.at(r, c) = rational_of(static_cast<long>(rng.below(9)) - 4,
                                         1 + static_cast<long>(rng.below(4)));
    return m;
}

ScPoint half_point() {
    Matrix a(2, 2);
    a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = a.at(1, 1) = rational_of(1, 2);
    return ScPoint::from_quadratic(QuadraticVector{2, a, Vector(2), Vector(2)});
}

void bm_rref(benchmark::State& state) {
    Matrix m = random_matrix(40, 60, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(bm_rref);

void bm_rank_mod_p(benchmark::State& state) {
    Matrix m = random_matrix(120, 200, 9);
    std::uint32_t p = certificate_primes()[0];
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, p).rank);
}
BENCHMARK(bm_rank_mod_p);

void bm_virasoro_mode(benchmark::State& state) {
    FockElement omega = conformal_vector(2, Vector(2));
    GradedBasis basis = basis_of_degree(2, 5);
    for (auto _ : state)
        for (std::size_t k = 0; k < basis.size(); ++k)
            benchmark::DoNotOptimize(
                virasoro_mode(omega, -1, FockElement::single(2, basis.at(k))));
}
BENCHMARK(bm_virasoro_mode);

void bm_bracket_pair(benchmark::State& state) {
    FockElement omega = half_point().state();
    for (auto _ : state) benchmark::DoNotOptimize(virasoro_bracket_check(omega, 3, 2).ok);
}
BENCHMARK(bm_bracket_pair);

void bm_commutant_profile(benchmark::State& state) {
    ScPoint p = half_point();
    for (auto _ : state) benchmark::DoNotOptimize(commutant_dims(p, 5).dims_commutant.size());
}
BENCHMARK(bm_commutant_profile);

}  // namespace

BENCHMARK_MAIN();
