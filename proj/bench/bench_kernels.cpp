#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qseries/kernels.hpp"

namespace k = qseries::kernels;

namespace {

constexpr std::uint32_t kM = 13;

std::vector<k::Residue> random_residues(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<k::Residue> v(n);
  for (auto& x : v) x = static_cast<k::Residue>(rng() % kM);
  return v;
}

void BM_ConvolveSerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_residues(n, 1), b = random_residues(n, 2);
  std::vector<k::Residue> out(n);
  for (auto _ : st) {
    k::convolve_serial(a, b, out, kM);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ConvolveOmp(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_residues(n, 1), b = random_residues(n, 2);
  std::vector<k::Residue> out(n);
  for (auto _ : st) {
    k::convolve_omp(a, b, out, kM);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ConvolveNtt(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_residues(n, 1), b = random_residues(n, 2);
  std::vector<k::Residue> out(n);
  for (auto _ : st) {
    k::convolve_ntt(a, b, out, kM);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_PartitionSerial(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    std::vector<k::Residue> p;
    k::partition_extend_serial(kM, p, n);
    benchmark::DoNotOptimize(p.data());
  }
}

void BM_PartitionBlocked(benchmark::State& st) {
  auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    std::vector<k::Residue> p;
    k::partition_extend_blocked(kM, p, n);
    benchmark::DoNotOptimize(p.data());
  }
}

struct HeckeFixture {
  std::vector<int> legendre;
  k::HeckeTerms terms;
  std::vector<k::Residue> in;
  std::vector<k::Residue> out;

  explicit HeckeFixture(std::size_t n) : legendre(59, 1), in(random_residues(n * 59 * 59, 3)), out(n) {
    legendre[0] = 0;
    terms = k::HeckeTerms{kM, 59, 7, 5, legendre};
  }
};

void BM_HeckeSerial(benchmark::State& st) {
  HeckeFixture f(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    k::hecke_serial(f.terms, f.in, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
}

void BM_HeckeOmp(benchmark::State& st) {
  HeckeFixture f(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    k::hecke_omp(f.terms, f.in, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
}

void BM_HistogramSerial(benchmark::State& st) {
  auto v = random_residues(static_cast<std::size_t>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(k::residue_histogram_serial(v, kM));
}

void BM_HistogramOmp(benchmark::State& st) {
  auto v = random_residues(static_cast<std::size_t>(st.range(0)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(k::residue_histogram_omp(v, kM));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);
BENCHMARK(BM_ConvolveOmp)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);
BENCHMARK(BM_ConvolveNtt)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_PartitionSerial)->RangeMultiplier(4)->Range(1 << 14, 1 << 20);
BENCHMARK(BM_PartitionBlocked)->RangeMultiplier(4)->Range(1 << 14, 1 << 20);
BENCHMARK(BM_HeckeSerial)->Arg(528)->Arg(2048);
BENCHMARK(BM_HeckeOmp)->Arg(528)->Arg(2048);
BENCHMARK(BM_HistogramSerial)->Arg(1 << 20)->Arg(1 << 23);
BENCHMARK(BM_HistogramOmp)->Arg(1 << 20)->Arg(1 << 23);

BENCHMARK_MAIN();
