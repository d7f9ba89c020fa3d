#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qseries/partition.hpp"

// Good-prime search over the class n = -1/m (mod 24) and residue censuses of
// p(n) mod m.
namespace qseries {

struct Witness {
  Residue r = 0;
  std::uint64_t n_r = 0;
  std::uint64_t partition_argument = 0;  // (m n_r + 1) / 24
  Residue value = 0;                      // p(partition_argument) mod m
};

struct GoodPrimeCertificate {
  std::uint32_t m = 0;
  std::vector<Witness> witnesses;  // sorted by r; smallest n_r per residue
  std::uint64_t search_bound = 0;  // largest n examined
  bool complete = false;
  std::vector<Residue> missing;
};

// Largest t with (m (s + 24 t) + 1)/24 below the budget, s the class of n.
std::uint64_t default_t_max(std::uint32_t m, std::size_t budget = kDefaultPartitionBudget);

// Scans n = s + 24 t for t = 0..t_max in order and stops once every residue
// has a witness.
GoodPrimeCertificate good_prime_search(std::uint32_t m, std::uint64_t t_max, PartitionStore& store);

// Recomputes each witness from a fresh table; true when all check out.
bool reverify_certificate(const GoodPrimeCertificate& c);

struct CensusReport {
  std::uint32_t m = 0;
  std::uint64_t X = 0;
  std::vector<std::uint64_t> counts;  // #{0 <= n <= X : p(n) = r (mod m)}
  // m = 5, 7, 11: indices n <= X in m n + b, which must all count toward r = 0
  std::optional<std::uint64_t> progression_count;
  std::optional<bool> progression_bound_holds;
};

CensusReport residue_census(std::uint32_t m, std::uint64_t X, PartitionStore& store);

}  // namespace qseries
