#include "qseries/newman.hpp"

#include <algorithm>

#include "qseries/error.hpp"
#include "qseries/kernels.hpp"

namespace qseries {

namespace {

std::uint64_t witness_class(std::uint32_t m) { return (24 - m % 24) % 24; }

std::uint64_t argument(std::uint32_t m, std::uint64_t n) { return (std::uint64_t{m} * n + 1) / 24; }

void require_m(std::uint32_t m) {
  check_modulus(m);
  if (m < 5) throw DomainError("good-prime search needs a prime m >= 5");
}

}  // namespace

std::uint64_t default_t_max(std::uint32_t m, std::size_t budget) {
  require_m(m);
  std::uint64_t s = witness_class(m);
  if (budget == 0 || argument(m, s) >= budget) return 0;
  // (m (s + 24 t) + 1) / 24 = (m s + 1)/24 + m t
  return (budget - 1 - argument(m, s)) / m;
}

GoodPrimeCertificate good_prime_search(std::uint32_t m, std::uint64_t t_max, PartitionStore& store) {
  require_m(m);
  GoodPrimeCertificate cert;
  cert.m = m;
  const std::uint64_t s = witness_class(m);
  const std::uint64_t last_arg = argument(m, s + 24 * t_max);
  if (!store.affordable(last_arg + 1)) {
    throw BudgetError("t_max = " + std::to_string(t_max) + " reaches p(" + std::to_string(last_arg) +
                      "), beyond the budget");
  }

  std::vector<std::optional<Witness>> found(m);
  std::size_t remaining = m;
  std::size_t chunk = 1 << 14;
  const PartitionTable* table = nullptr;
  for (std::uint64_t t = 0; t <= t_max && remaining > 0; ++t) {
    std::uint64_t n = s + 24 * t;
    std::uint64_t arg = argument(m, n);
    if (table == nullptr || arg >= table->size()) {
      chunk = std::max<std::size_t>(chunk, 2 * (arg + 1));
      table = &store.table(m, std::min<std::size_t>(chunk, last_arg + 1));
    }
    Residue v = (*table)[arg];
    cert.search_bound = n;
    if (!found[v]) {
      found[v] = Witness{v, n, arg, v};
      --remaining;
    }
  }
  for (std::uint32_t r = 0; r < m; ++r) {
    if (found[r]) cert.witnesses.push_back(*found[r]);
    else cert.missing.push_back(static_cast<Residue>(r));
  }
  cert.complete = cert.missing.empty();
  return cert;
}

bool reverify_certificate(const GoodPrimeCertificate& c) {
  std::uint64_t top = 0;
  for (const auto& w : c.witnesses) top = std::max(top, w.partition_argument);
  PartitionTable fresh = partition_table_serial(c.m, top + 1);
  return std::all_of(c.witnesses.begin(), c.witnesses.end(), [&](const Witness& w) {
    return (std::uint64_t{c.m} * w.n_r) % 24 == 23 && w.partition_argument == argument(c.m, w.n_r) &&
           fresh[w.partition_argument] == w.r && w.value == w.r;
  });
}

CensusReport residue_census(std::uint32_t m, std::uint64_t X, PartitionStore& store) {
  check_modulus(m);
  CensusReport rep;
  rep.m = m;
  rep.X = X;
  const PartitionTable& p = store.table(m, X + 1);
  rep.counts = kernels::residue_histogram_omp(p.values().subspan(0, X + 1), m);
  if (m == 5 || m == 7 || m == 11) {
    // p(m n + b) = 0 (mod m) with 24 b = 1 (mod m)
    std::uint64_t b = m == 5 ? 4 : m == 7 ? 5 : 6;
    rep.progression_count = X >= b ? (X - b) / m + 1 : 0;
    rep.progression_bound_holds = rep.counts[0] >= *rep.progression_count;
  }
  return rep;
}

}  // namespace qseries
