#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qseries/fpseries.hpp"

namespace qseries {

// p(n) mod m for 0 <= n < size(), built by the pentagonal recurrence.
class PartitionTable {
 public:
  PartitionTable(std::uint32_t modulus, std::size_t limit);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }
  Residue operator[](std::size_t n) const noexcept { return values_[n]; }
  // Throws PrecisionError when n >= size().
  Residue at(std::size_t n) const;
  std::span<const Residue> values() const noexcept { return values_; }

  // Grows the table in place; spans from values() are invalidated.
  void extend(std::size_t limit);
  FpSeries as_series() const { return FpSeries(modulus_, values_); }

  static PartitionTable from_series(const FpSeries& s);

 private:
  PartitionTable(std::uint32_t modulus, std::vector<Residue> values);
  std::uint32_t modulus_;
  std::vector<Residue> values_;
};

// Reference construction with the serial kernel, for tests and benchmarks.
PartitionTable partition_table_serial(std::uint32_t modulus, std::size_t limit);

// Default ceiling on partition-table length (arguments below 10^7).
inline constexpr std::size_t kDefaultPartitionBudget = 10'000'001;

// Per-modulus tables that grow on demand, optionally persisted as ".fps"
// files in a cache directory. Not thread-safe; share the tables it returns.
class PartitionStore {
 public:
  explicit PartitionStore(std::size_t budget = kDefaultPartitionBudget,
                          std::optional<std::filesystem::path> cache_dir = std::nullopt);

  // Table for modulus m holding at least `limit` entries. Throws BudgetError
  // beyond the budget. The reference stays valid; its contents may grow.
  const PartitionTable& table(std::uint32_t m, std::size_t limit);
  // Whether a table of `limit` entries fits the budget.
  bool affordable(std::size_t limit) const noexcept { return limit <= budget_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::optional<PartitionTable> load_cached(std::uint32_t m, std::size_t limit) const;
  void save_cached(const PartitionTable& t) const;

  std::size_t budget_;
  std::optional<std::filesystem::path> cache_dir_;
  std::map<std::uint32_t, PartitionTable> tables_;
};

}  // namespace qseries
