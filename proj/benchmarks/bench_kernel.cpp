#include <benchmark/benchmark.h>

#include <pthue/integer_kernel.hpp>
#include <pthue/padic.hpp>
#include <pthue/padic_series.hpp>
#include <pthue/poly.hpp>

using namespace pthue;

namespace {

BigInt pow31(int k) {
    BigInt m;
    mpz_ui_pow_ui(m.get_mpz_t(), 31, static_cast<unsigned>(k));
    return m;
}

void BM_icbrt(benchmark::State& state) {
    BigInt n = BigInt("123456789123456789123456789123456789");
    for (auto _ : state) {
        IcbrtResult r = icbrt(n);
        benchmark::DoNotOptimize(r.root.get_mpz_t());
    }
}
BENCHMARK(BM_icbrt);

void BM_is_perfect_cube_small(benchmark::State& state) {
    BigInt n = 26000001;  // near the sizes the searches probe
    for (auto _ : state) {
        bool b = is_perfect_cube(n);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_is_perfect_cube_small);

void BM_mod_pow_table(benchmark::State& state) {
    BigInt m(961);
    for (auto _ : state) {
        BigInt r = mod_pow(BigInt(34), BigInt(30), m);
        benchmark::DoNotOptimize(r.get_mpz_t());
    }
}
BENCHMARK(BM_mod_pow_table);

void BM_mod_pow_big(benchmark::State& state) {
    BigInt base("987654321987654321987654321");
    BigInt exp("123456789123456789");
    BigInt m = pow31(6);
    for (auto _ : state) {
        BigInt r = mod_pow(base, exp, m);
        benchmark::DoNotOptimize(r.get_mpz_t());
    }
}
BENCHMARK(BM_mod_pow_big);

void BM_cbrt_interval(benchmark::State& state) {
    BigInt twenty(20);
    Rational w(1, 10000);
    for (auto _ : state) {
        RationalInterval e = cbrt_interval(twenty, w);
        benchmark::DoNotOptimize(e.lo.get_mpq_t());
    }
}
BENCHMARK(BM_cbrt_interval);

void BM_hensel_lift_k6(benchmark::State& state) {
    IntPoly f = unit_cubic();
    for (auto _ : state) {
        PadicInt lift = hensel_lift(f, 31, 3, 6);
        benchmark::DoNotOptimize(lift.residue.get_mpz_t());
    }
}
BENCHMARK(BM_hensel_lift_k6);

void BM_padic_log(benchmark::State& state) {
    PadicInt x = PadicInt::from_integer(31, 6, BigInt(1) + 31 * 12345);
    for (auto _ : state) {
        PadicInt lg = padic_log(x);
        benchmark::DoNotOptimize(lg.residue.get_mpz_t());
    }
}
BENCHMARK(BM_padic_log);

void BM_interpolation_series(benchmark::State& state) {
    PadicInt b = PadicInt::from_integer(31, 6, BigInt(31) * 54321);
    for (auto _ : state) {
        PadicSeries s = interpolation_series(b);
        benchmark::DoNotOptimize(s.coeffs.data());
    }
}
BENCHMARK(BM_interpolation_series);

void BM_series_eval(benchmark::State& state) {
    PadicInt b = PadicInt::from_integer(31, 6, BigInt(31) * 54321);
    PadicSeries s = interpolation_series(b);
    PadicInt arg = PadicInt::from_integer(31, 6, BigInt(7));
    for (auto _ : state) {
        PadicInt v = series_eval(s, arg);
        benchmark::DoNotOptimize(v.residue.get_mpz_t());
    }
}
BENCHMARK(BM_series_eval);

} // namespace

BENCHMARK_MAIN();
