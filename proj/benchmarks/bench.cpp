#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "gctk/affine_matrix.hpp"
#include "gctk/characters.hpp"
#include "gctk/grenet.hpp"
#include "gctk/hessian.hpp"
#include "gctk/kronecker.hpp"
#include "gctk/latin.hpp"
#include "gctk/partition.hpp"
#include "gctk/powersum.hpp"
#include "gctk/tomography.hpp"

namespace {

gctk::Partition P(std::vector<std::uint32_t> parts) { return gctk::Partition(std::move(parts)); }

/* Character of a hook shape at the full cycle, at growing degree; the memo
   is rebuilt per iteration so this measures the recursion itself. */
void BM_character_cold(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::vector<std::uint32_t> hook{n / 2 + 1};
    hook.insert(hook.end(), n - hook[0], 1);
    const gctk::Partition lam(hook);
    for (auto _ : state) {
        gctk::CharacterTable chi;
        mpz_class v = 0;
        for (const gctk::Partition& rho : gctk::enumerate_partitions(n))
            v += chi.character(lam, rho);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_character_cold)->Arg(12)->Arg(16)->Arg(20);

/* Same sums against a table that keeps its memo across iterations. */
void BM_character_warm(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    gctk::CharacterTable chi;
    const auto shapes = gctk::enumerate_partitions(n, 4);
    const auto classes = gctk::enumerate_partitions(n);
    for (auto _ : state) {
        mpz_class v = 0;
        for (const gctk::Partition& lam : shapes)
            for (const gctk::Partition& rho : classes) v += chi.character(lam, rho);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_character_warm)->Arg(12)->Arg(16);

void BM_outer_plethysm(benchmark::State& state) {
    const auto d = static_cast<std::uint32_t>(state.range(0));
    const auto n = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(gctk::outer_plethysm_h_h(d, n));
}
BENCHMARK(BM_outer_plethysm)->Args({4, 3})->Args({6, 3})->Args({12, 3});

void BM_pleth_coefficient(benchmark::State& state) {
    const gctk::Partition lam = P({6, 4, 2});
    gctk::CharacterTable chi;
    for (auto _ : state) benchmark::DoNotOptimize(gctk::pleth(3, 4, lam, 9, chi));
}
BENCHMARK(BM_pleth_coefficient);

void BM_kron_rect(benchmark::State& state) {
    const auto size = static_cast<std::uint32_t>(state.range(0));
    const gctk::Partition lam({size, size});  // 2-row rectangle, n = 2
    gctk::CharacterTable chi;
    for (auto _ : state) benchmark::DoNotOptimize(gctk::kron_rect(2, lam, chi));
}
BENCHMARK(BM_kron_rect)->Arg(4)->Arg(6)->Arg(8);

void BM_relation_count(benchmark::State& state) {
    const gctk::Partition lam = P({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(gctk::count_relations_t(lam, lam, lam));
}
BENCHMARK(BM_relation_count);

void BM_pyramid_count(benchmark::State& state) {
    const gctk::Partition lam = P({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(gctk::count_pyramids_p(lam, lam, lam));
}
BENCHMARK(BM_pyramid_count);

void BM_latin_census(benchmark::State& state) {
    const auto threads = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gctk::alon_tarsi_statistic(4, 5, threads));
}
BENCHMARK(BM_latin_census)->Arg(1)->Arg(4);

void BM_grenet_symbolic_verify(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    const gctk::AffineMatrix a = gctk::grenet_matrix(m, true);
    const gctk::SparsePoly per = gctk::permanent_poly(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gctk::verify_representation(a, per, gctk::VerifyMode::symbolic));
}
BENCHMARK(BM_grenet_symbolic_verify)->Arg(3)->Arg(4);

void BM_hessian_rank(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto hess = gctk::hessian(gctk::determinant_poly(n), n * n);
    std::vector<mpq_class> point(n * n, 0);
    for (std::uint32_t i = 0; i + 1 < n; ++i) point[gctk::matrix_var(n, i, i)] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(gctk::rank_at(hess, point));
}
BENCHMARK(BM_hessian_rank)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
