#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Data-parallel inner loops. Every kernel has a plain serial form that is kept
// as the reference for tests and benchmarks; the other variants must produce
// bit-identical output.
namespace qseries::kernels {

using Residue = std::uint16_t;

// Truncated Cauchy product: out[n] = sum_{i+j=n} a[i] b[j] mod m for
// n < out.size(). Missing operand entries count as zero.
void convolve_serial(std::span<const Residue> a, std::span<const Residue> b,
                     std::span<Residue> out, std::uint32_t m);
void convolve_omp(std::span<const Residue> a, std::span<const Residue> b,
                  std::span<Residue> out, std::uint32_t m);
void convolve_ntt(std::span<const Residue> a, std::span<const Residue> b,
                  std::span<Residue> out, std::uint32_t m);
// One operand is sparse: cost is nnz(sparse) * out.size().
void convolve_sparse(std::span<const Residue> sparse, std::span<const Residue> dense,
                     std::span<Residue> out, std::uint32_t m);
// Picks one of the above by operand shape.
void convolve(std::span<const Residue> a, std::span<const Residue> b,
              std::span<Residue> out, std::uint32_t m);

// Extends p (p(n) mod m for n < p.size()) to n < limit with Euler's
// pentagonal recurrence. An empty p is seeded with p(0) = 1.
void partition_extend_serial(std::uint32_t m, std::vector<Residue>& p, std::size_t limit);
// Same recurrence, blocked: the far pentagonal terms of a block only read
// finished entries and are accumulated in parallel.
void partition_extend_blocked(std::uint32_t m, std::vector<Residue>& p, std::size_t limit);

// Coefficient map of the weight lambda + 1/2 operator T(l^2):
//   out[n] = in[l^2 n] + middle * legendre[n mod l] * in[n]
//            + outer * in[n / l^2]   (last term only when l^2 | n)
// with middle and outer already reduced mod m (signs folded in).
struct HeckeTerms {
  std::uint32_t m;
  std::uint64_t ell;
  std::uint64_t middle;
  std::uint64_t outer;
  std::span<const int> legendre;  // (r | l) for r in [0, l)
};
void hecke_serial(const HeckeTerms& t, std::span<const Residue> in, std::span<Residue> out);
void hecke_omp(const HeckeTerms& t, std::span<const Residue> in, std::span<Residue> out);

// counts[r] = #{ i : values[i] == r }, r < m.
std::vector<std::uint64_t> residue_histogram_serial(std::span<const Residue> values,
                                                    std::uint32_t m);
std::vector<std::uint64_t> residue_histogram_omp(std::span<const Residue> values,
                                                 std::uint32_t m);

}  // namespace qseries::kernels
