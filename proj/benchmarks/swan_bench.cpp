#include <benchmark/benchmark.h>

#include <swan/conductor.hpp>
#include <swan/galois_oracle.hpp>
#include <swan/parse.hpp>
#include <swan/perfection.hpp>
#include <swan/random.hpp>

using namespace swan;

namespace {

Polynomial random_poly(Rng &rng, fp::Coeff p, std::size_t nvars, int terms, Polynomial::Exponent max_deg)
{
    Polynomial f(p, nvars);
    for (int i = 0; i < terms; ++i) {
        std::vector<Polynomial::Exponent> e(nvars);
        for (auto &x : e) {
            x = static_cast<Polynomial::Exponent>(rng.below(max_deg + 1));
        }
        f += Polynomial::monomial(p, e, static_cast<fp::Coeff>(1 + rng.below(p - 1)));
    }
    return f;
}

void BM_PolynomialMul(benchmark::State &state)
{
    Rng rng(1);
    const auto terms = static_cast<int>(state.range(0));
    const auto a = random_poly(rng, 5, 3, terms, 6);
    const auto b = random_poly(rng, 5, 3, terms, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolynomialMul)->Arg(8)->Arg(32)->Arg(128);

void BM_PolynomialGcd(benchmark::State &state)
{
    Rng rng(2);
    const auto g = random_poly(rng, 3, 2, 4, 3);
    const auto a = g * random_poly(rng, 3, 2, 4, 3);
    const auto b = g * random_poly(rng, 3, 2, 4, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd(a, b));
    }
}
BENCHMARK(BM_PolynomialGcd);

void BM_WittAdd(benchmark::State &state)
{
    const auto p = static_cast<fp::Coeff>(state.range(0));
    const auto k = FieldConfig::make(p, {"u1", "u2"});
    Rng rng(3);
    const auto a = random_witt(rng, k, 2, 20);
    const auto b = random_witt(rng, k, 2, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(witt_add(a, b));
    }
}
BENCHMARK(BM_WittAdd)->Arg(2)->Arg(3)->Arg(5);

void BM_Conductors(benchmark::State &state)
{
    const auto p = static_cast<fp::Coeff>(state.range(0));
    const auto k = FieldConfig::make(p, {"u1", "u2"});
    Rng rng(4);
    CharacterOptions opts;
    const auto chi = random_character(rng, k, opts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conductors(chi));
    }
}
BENCHMARK(BM_Conductors)->Arg(2)->Arg(3)->Arg(5);

void BM_VerifyTheorem(benchmark::State &state)
{
    const auto p = static_cast<fp::Coeff>(state.range(0));
    const auto k = FieldConfig::make(p, {"u1", "u2"});
    Rng rng(5);
    CharacterOptions opts;
    const auto chi = random_character(rng, k, opts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_theorem(chi));
    }
}
BENCHMARK(BM_VerifyTheorem)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_OracleBreak(benchmark::State &state)
{
    const auto k = FieldConfig::make(5, {"u1"});
    const auto a = parse_series("(u1 + 1)*t^-" + std::to_string(state.range(0)) + " + t^-1", k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ramification_break(a));
    }
}
BENCHMARK(BM_OracleBreak)->Arg(7)->Arg(19);

} // namespace
BENCHMARK_MAIN();
