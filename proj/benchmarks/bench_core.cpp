#include "gop/factor.hpp"
#include "gop/galochkin.hpp"
#include "gop/guess.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gop;

namespace {

Poly random_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<long> c(-9, 9);
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
    for (auto& x : v)
        x = make_rat(c(rng), 1 + (c(rng) + 9) % 4);
    if (v.back() == 0)
        v.back() = 1;
    return Poly(std::move(v));
}

DiffOp random_op(std::mt19937_64& rng, int order, int degree)
{
    std::vector<RatFunc> c;
    for (int i = 0; i <= order; ++i)
        c.emplace_back(random_poly(rng, degree), random_poly(rng, 1));
    return DiffOp(std::move(c));
}

void BM_op_mul(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const int order = static_cast<int>(state.range(0));
    const DiffOp a = random_op(rng, order, 3), b = random_op(rng, order, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(op_mul(a, b));
}
BENCHMARK(BM_op_mul)->DenseRange(1, 4);

void BM_poly_factor(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    Poly p(Rat(1));
    for (int i = 0; i < state.range(0); ++i)
        p *= random_poly(rng, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_factor(p));
    state.SetLabel("degree " + std::to_string(p.degree()));
}
BENCHMARK(BM_poly_factor)->DenseRange(1, 4);

void BM_denominator_sequence(benchmark::State& state)
{
    RatFunc a = RatFunc(Poly(make_rat(1, 2)), Poly::linear(1)) + RatFunc(Poly(make_rat(-1, 3)), Poly::linear(-2)) +
                RatFunc(Poly(make_rat(3, 4)), Poly::x());
    const CompanionSystem cs = companion(DiffOp::first_order(a));
    for (auto _ : state)
        benchmark::DoNotOptimize(denominator_sequence(cs, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_denominator_sequence)->Arg(10)->Arg(20)->Arg(40);

void BM_guess_ode(benchmark::State& state)
{
    // Expansion of (1 + z) / (1 - 3z + z^2).
    const auto n = static_cast<std::size_t>(state.range(0));
    const TruncSeries s = TruncSeries::from_coeffs(series_quotient(Poly::from_ints({1, 1}), Poly::from_ints({1, -3, 1}), n));
    for (auto _ : state)
        benchmark::DoNotOptimize(guess_ode(s, 2, 2, 10));
}
BENCHMARK(BM_guess_ode)->Arg(40)->Arg(80);

} // namespace

BENCHMARK_MAIN();
