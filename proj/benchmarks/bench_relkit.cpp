#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/frobenius.hpp"
#include "relkit/poisson.hpp"
#include "relkit/relgpd.hpp"
#include "relkit/symplin.hpp"

using namespace relkit;
using finrel::Carrier;
using finrel::Rel;
using linalg::Mat;

namespace {

const Budget kUnmetered{1ULL << 40};

Carrier carrier(int n) {
  std::vector<std::string> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back("x" + std::to_string(i));
  return Carrier(std::move(atoms));
}

Rel random_rel(std::mt19937_64& rng, const Carrier& a, const Carrier& b, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return Rel(a, b, std::move(pairs));
}

Mat random_skew(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = Rat(entry(rng));
      m.at(j, i) = -m.at(i, j);
    }
  return m;
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

void BM_ComposeDense(benchmark::State& state) {
  Carrier X = carrier(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  Rel r = random_rel(rng, X, X, 0.125);
  Rel s = random_rel(rng, X, X, 0.125);
  for (auto _ : state) benchmark::DoNotOptimize(finrel::compose(r, s, kUnmetered));
}
BENCHMARK(BM_ComposeDense)->Arg(16)->Arg(64)->Arg(128);

void BM_FrobeniusFailFast(benchmark::State& state) {
  Carrier X = carrier(3);
  Carrier XX = Carrier::product(X, X);
  std::mt19937_64 rng(2);
  std::vector<frobenius::FrobCandidate> batch;
  for (int i = 0; i < 256; ++i) {
    std::vector<std::pair<int, int>> pairs;
    long long mask = static_cast<long long>(rng() & ((1ULL << 27) - 1));
    for (int slot = 0; slot < 27; ++slot)
      if (mask & (1LL << slot)) pairs.emplace_back(slot / 3, slot % 3);
    batch.push_back({X, Rel(XX, X, std::move(pairs))});
  }
  frobenius::FrobOptions fast;
  fast.fail_fast = true;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius::check_frobenius_axioms(batch[i], fast));
    i = (i + 1) % batch.size();
  }
}
BENCHMARK(BM_FrobeniusFailFast);

void BM_FrobeniusGroupFull(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  auto cand = frobenius::from_groupoid(frobenius::group_groupoid(names, cyclic_table(n), 0),
                                       kUnmetered);
  frobenius::FrobOptions opt;
  opt.budget = kUnmetered;
  for (auto _ : state) benchmark::DoNotOptimize(frobenius::check_frobenius_axioms(cand, opt));
}
BENCHMARK(BM_FrobeniusGroupFull)->Arg(4)->Arg(8)->Arg(16);

void BM_ParityCore(benchmark::State& state) {
  auto cand = relgpd::parity_example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relgpd::check_core_axioms(cand, kUnmetered));
}
BENCHMARK(BM_ParityCore)->Arg(4)->Arg(8);

void BM_ParityReduce(benchmark::State& state) {
  auto cand = relgpd::parity_example(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relgpd::reduce_to_groupoid(cand, kUnmetered));
}
BENCHMARK(BM_ParityReduce)->Arg(4)->Arg(8);

void BM_Rref(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-5, 5);
  Mat m(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) m.at(i, j) = Rat(entry(rng));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_Orthogonal(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  symplin::SympSpace V = symplin::SympSpace::standard(2 * n);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> entry(-3, 3);
  Mat rows(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) rows.at(i, j) = Rat(entry(rng));
  symplin::Subspace W(2 * n, rows);
  for (auto _ : state) benchmark::DoNotOptimize(symplin::orthogonal(V, W));
}
BENCHMARK(BM_Orthogonal)->Arg(4)->Arg(8);

void BM_JacobiResidual(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::vector<Mat> blocks;
  for (int k = 0; k < n; ++k) blocks.push_back(random_skew(rng, n));
  auto p = poisson::from_structure_constants(n, blocks);
  for (auto _ : state) benchmark::DoNotOptimize(poisson::jacobi_residual(p));
}
BENCHMARK(BM_JacobiResidual)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
