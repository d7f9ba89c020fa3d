#include "qseries/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <string>

#include "qseries/error.hpp"

namespace qseries::kernels {
namespace {

constexpr std::size_t kSchoolbookLimit = 2048;
constexpr std::size_t kSparseLimit = 48;

// NTT-friendly primes; their product exceeds every convolution value that a
// block of at most 2^21 terms with residues below 2^16 can produce.
constexpr std::uint32_t kNttPrimes[2] = {998244353u, 469762049u};
constexpr std::uint32_t kNttRoot = 3;
constexpr std::size_t kNttBlock = std::size_t{1} << 21;

std::uint32_t pow_u32(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

void ntt(std::vector<std::uint32_t>& a, bool inverse, std::uint32_t p) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = pow_u32(kNttRoot, (p - 1) / len, p);
    if (inverse) w = pow_u32(w, p - 2, p);
    const std::size_t half = len / 2;
    std::vector<std::uint32_t> roots(half);
    roots[0] = 1;
    for (std::size_t k = 1; k < half; ++k) {
      roots[k] = static_cast<std::uint32_t>(std::uint64_t{roots[k - 1]} * w % p);
    }
#pragma omp parallel for schedule(static) if (n >= (1u << 16))
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t u = a[i + k];
        const std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t{a[i + k + half]} * roots[k] % p);
        a[i + k] = u + v >= p ? u + v - p : u + v;
        a[i + k + half] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_u32(n, p - 2, p);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % p);
  }
}

// Full linear convolution of two short blocks, accumulated into acc[offset + k]
// as exact integers (below 2^63) for k < acc_len.
void ntt_block(std::span<const Residue> a, std::span<const Residue> b, std::uint64_t* acc,
               std::size_t acc_len, std::uint32_t m) {
  const std::size_t need = std::min(acc_len, a.size() + b.size() - 1);
  std::size_t size = 1;
  while (size < a.size() + b.size() - 1) size <<= 1;

  std::array<std::vector<std::uint32_t>, 2> res;
  for (int t = 0; t < 2; ++t) {
    const std::uint32_t p = kNttPrimes[t];
    std::vector<std::uint32_t> fa(size, 0), fb(size, 0);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    ntt(fa, false, p);
    ntt(fb, false, p);
    for (std::size_t i = 0; i < size; ++i) {
      fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * fb[i] % p);
    }
    ntt(fa, true, p);
    res[t] = std::move(fa);
  }
  const std::uint64_t p1 = kNttPrimes[0], p2 = kNttPrimes[1];
  const std::uint64_t inv_p1 = pow_u32(p1 % p2, p2 - 2, static_cast<std::uint32_t>(p2));
  for (std::size_t k = 0; k < need; ++k) {
    const std::uint64_t r1 = res[0][k], r2 = res[1][k];
    const std::uint64_t t = (r2 + p2 - r1 % p2) % p2 * inv_p1 % p2;
    const std::uint64_t value = r1 + p1 * t;
    acc[k] = (acc[k] + value % m) % m;
  }
}

}  // namespace

void convolve_serial(std::span<const Residue> a, std::span<const Residue> b,
                     std::span<Residue> out, std::uint32_t m) {
  const std::size_t n_out = out.size();
  std::vector<std::uint64_t> acc(n_out, 0);
  const std::size_t na = std::min(a.size(), n_out);
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    const std::size_t nb = std::min(b.size(), n_out - i);
    for (std::size_t j = 0; j < nb; ++j) acc[i + j] += ai * b[j];
  }
  for (std::size_t n = 0; n < n_out; ++n) out[n] = static_cast<Residue>(acc[n] % m);
}

void convolve_omp(std::span<const Residue> a, std::span<const Residue> b,
                  std::span<Residue> out, std::uint32_t m) {
  const std::size_t n_out = out.size();
  const std::int64_t n_signed = static_cast<std::int64_t>(n_out);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t ns = 0; ns < n_signed; ++ns) {
    const std::size_t n = static_cast<std::size_t>(ns);
    const std::size_t lo = n >= b.size() ? n - b.size() + 1 : 0;
    const std::size_t hi = std::min(n, a.size() ? a.size() - 1 : 0);
    std::uint64_t s = 0;
    if (!a.empty()) {
      for (std::size_t i = lo; i <= hi; ++i) s += std::uint64_t{a[i]} * b[n - i];
    }
    out[n] = static_cast<Residue>(s % m);
  }
}

void convolve_ntt(std::span<const Residue> a, std::span<const Residue> b,
                  std::span<Residue> out, std::uint32_t m) {
  const std::size_t n_out = out.size();
  a = a.first(std::min(a.size(), n_out));
  b = b.first(std::min(b.size(), n_out));
  std::vector<std::uint64_t> acc(n_out, 0);
  if (!a.empty() && !b.empty()) {
    // Split both operands into blocks so every transform stays within the
    // primes' 2-adic range and below the exact-CRT bound.
    for (std::size_t ia = 0; ia < a.size(); ia += kNttBlock) {
      const auto ablk = a.subspan(ia, std::min(kNttBlock, a.size() - ia));
      for (std::size_t ib = 0; ib < b.size() && ia + ib < n_out; ib += kNttBlock) {
        const auto bblk = b.subspan(ib, std::min(kNttBlock, b.size() - ib));
        ntt_block(ablk, bblk, acc.data() + ia + ib, n_out - ia - ib, m);
      }
    }
  }
  for (std::size_t n = 0; n < n_out; ++n) out[n] = static_cast<Residue>(acc[n]);
}

void convolve_sparse(std::span<const Residue> sparse, std::span<const Residue> dense,
                     std::span<Residue> out, std::uint32_t m) {
  const std::size_t n_out = out.size();
  std::vector<std::uint64_t> acc(n_out, 0);
  for (std::size_t i = 0; i < std::min(sparse.size(), n_out); ++i) {
    const std::uint64_t c = sparse[i];
    if (c == 0) continue;
    const std::size_t nb = std::min(dense.size(), n_out - i);
    std::uint64_t* dst = acc.data() + i;
    for (std::size_t j = 0; j < nb; ++j) dst[j] += c * dense[j];
  }
  for (std::size_t n = 0; n < n_out; ++n) out[n] = static_cast<Residue>(acc[n] % m);
}

void convolve(std::span<const Residue> a, std::span<const Residue> b, std::span<Residue> out,
              std::uint32_t m) {
  const std::size_t n_out = out.size();
  a = a.first(std::min(a.size(), n_out));
  b = b.first(std::min(b.size(), n_out));
  auto nnz = [](std::span<const Residue> s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](Residue r) { return r != 0; }));
  };
  const std::size_t za = nnz(a), zb = nnz(b);
  if (std::min(za, zb) <= kSparseLimit) {
    if (za <= zb) {
      convolve_sparse(a, b, out, m);
    } else {
      convolve_sparse(b, a, out, m);
    }
  } else if (n_out <= kSchoolbookLimit) {
    convolve_omp(a, b, out, m);
  } else {
    convolve_ntt(a, b, out, m);
  }
}

void partition_extend_serial(std::uint32_t m, std::vector<Residue>& p, std::size_t limit) {
  if (p.empty() && limit > 0) p.push_back(static_cast<Residue>(1 % m));
  p.reserve(limit);
  for (std::size_t n = p.size(); n < limit; ++n) {
    std::int64_t s = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t sign = (k & 1) ? 1 : -1;
      s += sign * p[n - g1];
      const std::size_t g2 = g1 + k;
      if (g2 <= n) s += sign * p[n - g2];
    }
    s %= m;
    if (s < 0) s += m;
    p.push_back(static_cast<Residue>(s));
  }
}

void partition_extend_blocked(std::uint32_t m, std::vector<Residue>& p, std::size_t limit) {
  if (limit <= p.size()) return;
  if (p.empty()) p.push_back(static_cast<Residue>(1 % m));
  const std::size_t start = p.size();
  if (limit <= start) return;

  // generalized pentagonal numbers up to limit, ascending, with their signs
  std::vector<std::size_t> gen;
  std::vector<int> sgn;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 >= limit) break;
    const int s = (k & 1) ? 1 : -1;
    gen.push_back(g1);
    sgn.push_back(s);
    if (g1 + k < limit) {
      gen.push_back(g1 + k);
      sgn.push_back(s);
    }
  }
  // int32 accumulators hold at most gen.size() terms of size < m
  if (static_cast<double>(gen.size()) * (m - 1) >= 2147483647.0) {
    partition_extend_serial(m, p, limit);
    return;
  }

  constexpr std::size_t kBlock = 4096;
  constexpr std::size_t kChunk = 512;
  p.resize(limit);
  std::vector<std::int32_t> acc(kBlock);
  Residue* pv = p.data();
  const std::int64_t mm = m;

  for (std::size_t block = start; block < limit; block += kBlock) {
    const std::size_t end = std::min(block + kBlock, limit);
    const std::size_t len = end - block;
    std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(len), 0);
    // terms with g >= len only read entries below block
    const std::size_t far = static_cast<std::size_t>(
        std::lower_bound(gen.begin(), gen.end(), len) - gen.begin());
    const std::int64_t chunks = static_cast<std::int64_t>((len + kChunk - 1) / kChunk);

#pragma omp parallel for schedule(static) if (block > (1u << 16))
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::size_t c_lo = block + static_cast<std::size_t>(c) * kChunk;
      const std::size_t c_hi = std::min(c_lo + kChunk, end);
      std::int32_t* a = acc.data() + (c_lo - block);
      for (std::size_t t = far; t < gen.size(); ++t) {
        const std::size_t g = gen[t];
        if (g >= c_hi) break;
        const std::size_t lo = std::max(c_lo, g);
        const Residue* src = pv + (lo - g);
        std::int32_t* dst = a + (lo - c_lo);
        const std::size_t cnt = c_hi - lo;
        if (sgn[t] > 0) {
          for (std::size_t i = 0; i < cnt; ++i) dst[i] += src[i];
        } else {
          for (std::size_t i = 0; i < cnt; ++i) dst[i] -= src[i];
        }
      }
    }

    for (std::size_t n = block; n < end; ++n) {
      std::int64_t s = acc[n - block];
      for (std::size_t t = 0; t < far && gen[t] <= n; ++t) {
        s += sgn[t] * static_cast<std::int64_t>(pv[n - gen[t]]);
      }
      s %= mm;
      if (s < 0) s += mm;
      pv[n] = static_cast<Residue>(s);
    }
  }
}

namespace {

inline Residue hecke_one(const HeckeTerms& t, std::span<const Residue> in, std::size_t n,
                         std::uint64_t ell2) {
  std::uint64_t v = in[n * ell2];
  const int leg = t.legendre[n % t.ell];
  if (leg != 0) {
    const std::uint64_t term = t.middle * in[n] % t.m;
    v += leg > 0 ? term : t.m - term;
  }
  if (n % ell2 == 0) v += t.outer * in[n / ell2] % t.m;
  return static_cast<Residue>(v % t.m);
}

}  // namespace

void hecke_serial(const HeckeTerms& t, std::span<const Residue> in, std::span<Residue> out) {
  const std::uint64_t ell2 = t.ell * t.ell;
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = hecke_one(t, in, n, ell2);
}

void hecke_omp(const HeckeTerms& t, std::span<const Residue> in, std::span<Residue> out) {
  const std::uint64_t ell2 = t.ell * t.ell;
  const std::int64_t n_out = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n_out > 4096)
  for (std::int64_t n = 0; n < n_out; ++n) {
    out[static_cast<std::size_t>(n)] = hecke_one(t, in, static_cast<std::size_t>(n), ell2);
  }
}

std::vector<std::uint64_t> residue_histogram_serial(std::span<const Residue> values,
                                                    std::uint32_t m) {
  std::vector<std::uint64_t> counts(m, 0);
  for (Residue v : values) ++counts[v];
  return counts;
}

std::vector<std::uint64_t> residue_histogram_omp(std::span<const Residue> values,
                                                 std::uint32_t m) {
  std::vector<std::uint64_t> counts(m, 0);
  const std::int64_t n = static_cast<std::int64_t>(values.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(m, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) ++local[values[static_cast<std::size_t>(i)]];
#pragma omp critical
    for (std::uint32_t r = 0; r < m; ++r) counts[r] += local[r];
  }
  return counts;
}

}  // namespace qseries::kernels
