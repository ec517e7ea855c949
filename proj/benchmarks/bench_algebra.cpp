#include <benchmark/benchmark.h>

#include <random>

#include "sbq/inversion.hpp"
#include "sbq/matrix.hpp"
#include "sbq/normalization.hpp"
#include "sbq/number.hpp"
#include "sbq/seminorm.hpp"

using sbq::Number;

namespace {

Number random_number(std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  Number::Coeffs c;
  for (double& v : c) v = dist(gen);
  return Number(c);
}

Number random_invertible(std::mt19937_64& gen) {
  for (;;) {
    const Number x = random_number(gen);
    const auto p = sbq::seminorm_pair(x);
    if (p.min_value() >= 0.1 * p.max_value()) return x;
  }
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const Number x = random_number(gen), y = random_number(gen);
  for (auto _ : state) {
    Number z = x * y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Mul);

void BM_MulViaLeftMatrix(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const Number x = random_number(gen), y = random_number(gen);
  for (auto _ : state) {
    Number z = sbq::left_matrix(x).apply(y);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_MulViaLeftMatrix);

void BM_SeminormPair(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const Number x = random_number(gen);
  for (auto _ : state) {
    auto p = sbq::seminorm_pair(x);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SeminormPair);

void BM_InverseClosedForm(benchmark::State& state) {
  std::mt19937_64 gen(4);
  const Number x = random_invertible(gen);
  for (auto _ : state) {
    Number xi = sbq::inverse(x);
    benchmark::DoNotOptimize(xi);
  }
}
BENCHMARK(BM_InverseClosedForm);

void BM_InversePivotedSolve(benchmark::State& state) {
  std::mt19937_64 gen(5);
  const Number x = random_invertible(gen);
  for (auto _ : state) {
    Number xi = sbq::inverse_solve(x);
    benchmark::DoNotOptimize(xi);
  }
}
BENCHMARK(BM_InversePivotedSolve);

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 gen(6);
  const Number x = random_invertible(gen);
  for (auto _ : state) {
    Number xn = sbq::normalize(x);
    benchmark::DoNotOptimize(xn);
  }
}
BENCHMARK(BM_Normalize);

void BM_Involute(benchmark::State& state) {
  std::mt19937_64 gen(7);
  const Number x = random_number(gen);
  const Number u = random_invertible(gen);
  for (auto _ : state) {
    Number r = sbq::involute(x, u);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Involute);

void BM_Power16(benchmark::State& state) {
  std::mt19937_64 gen(8);
  const Number x = random_number(gen) * 0.3;
  for (auto _ : state) {
    Number r = sbq::power(x, 16);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Power16);

}  // namespace

BENCHMARK_MAIN();
