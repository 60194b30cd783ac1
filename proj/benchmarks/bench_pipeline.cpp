#include <benchmark/benchmark.h>

#include <pthue/companion.hpp>
#include <pthue/p31.hpp>
#include <pthue/skolem.hpp>

using namespace pthue;

namespace {

void BM_build_split_data(benchmark::State& state) {
    for (auto _ : state) {
        SplitData split = build_split_data(31, 6);
        benchmark::DoNotOptimize(split.alpha.residue.get_mpz_t());
    }
}
BENCHMARK(BM_build_split_data);

void BM_residue_sieve(benchmark::State& state) {
    SplitData split = build_split_data(31, 6);
    for (auto _ : state) {
        CompanionSequence seq;
        std::vector<long> surv = residue_sieve(split, seq);
        benchmark::DoNotOptimize(surv.data());
    }
}
BENCHMARK(BM_residue_sieve);

void BM_lambda_profile(benchmark::State& state) {
    SplitData split = build_split_data(31, 6);
    for (auto _ : state) {
        ValuationProfile prof = lambda_profile(split, 0);
        benchmark::DoNotOptimize(prof.entries.data());
    }
}
BENCHMARK(BM_lambda_profile);

void BM_companion_cycle_mod(benchmark::State& state) {
    for (auto _ : state) {
        auto aux = companion_cycle_mod(109, 1000000);
        benchmark::DoNotOptimize(aux->zeros.data());
    }
}
BENCHMARK(BM_companion_cycle_mod);

void BM_solve_thue(benchmark::State& state) {
    for (auto _ : state) {
        ThueCertificate cert = solve_thue(1);
        benchmark::DoNotOptimize(cert.doc);
    }
}
BENCHMARK(BM_solve_thue)->Unit(benchmark::kMillisecond);

void BM_search_extensions(benchmark::State& state) {
    P31Set s = P31Set::from({BigInt(1), BigInt(2), BigInt(13)});
    BigInt bound(state.range(0));
    for (auto _ : state) {
        ExtensionReport rep = search_extensions(s, bound);
        benchmark::DoNotOptimize(rep.candidates_checked);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_search_extensions)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_search_cubic_triangular(benchmark::State& state) {
    BigInt bound(state.range(0));
    for (auto _ : state) {
        std::vector<BigInt> hits = search_cubic_triangular(bound);
        benchmark::DoNotOptimize(hits.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_search_cubic_triangular)
    ->Arg(10000)
    ->Arg(100000)
    ->Unit(benchmark::kMillisecond);

void BM_validate_family(benchmark::State& state) {
    for (auto _ : state) {
        for (long a = 2; a <= 100; ++a) {
            ValidationResult res = validate_p31(family_claim1(BigInt(a)));
            benchmark::DoNotOptimize(res.valid);
        }
    }
    state.SetItemsProcessed(state.iterations() * 99);
}
BENCHMARK(BM_validate_family);

} // namespace

BENCHMARK_MAIN();
