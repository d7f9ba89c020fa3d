#include "qseries/partition.hpp"

#include <regex>
#include <string>

#include "qseries/error.hpp"
#include "qseries/fps_io.hpp"
#include "qseries/kernels.hpp"

namespace qseries {

PartitionTable::PartitionTable(std::uint32_t modulus, std::size_t limit) : modulus_(modulus) {
  check_modulus(modulus);
  kernels::partition_extend_blocked(modulus, values_, limit);
}

PartitionTable::PartitionTable(std::uint32_t modulus, std::vector<Residue> values)
    : modulus_(modulus), values_(std::move(values)) {}

Residue PartitionTable::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw PrecisionError("partition table mod " + std::to_string(modulus_) + " has " +
                         std::to_string(values_.size()) + " entries; p(" + std::to_string(n) +
                         ") requested");
  }
  return values_[n];
}

void PartitionTable::extend(std::size_t limit) {
  kernels::partition_extend_blocked(modulus_, values_, limit);
}

PartitionTable PartitionTable::from_series(const FpSeries& s) {
  const auto c = s.coeffs();
  return PartitionTable(s.modulus(), std::vector<Residue>(c.begin(), c.end()));
}

PartitionTable partition_table_serial(std::uint32_t modulus, std::size_t limit) {
  check_modulus(modulus);
  std::vector<Residue> v;
  kernels::partition_extend_serial(modulus, v, limit);
  return PartitionTable::from_series(FpSeries(modulus, std::move(v)));
}

PartitionStore::PartitionStore(std::size_t budget, std::optional<std::filesystem::path> cache_dir)
    : budget_(budget), cache_dir_(std::move(cache_dir)) {
  if (cache_dir_) std::filesystem::create_directories(*cache_dir_);
}

const PartitionTable& PartitionStore::table(std::uint32_t m, std::size_t limit) {
  if (limit > budget_) {
    throw BudgetError("partition table mod " + std::to_string(m) + " of " + std::to_string(limit) +
                      " entries exceeds budget " + std::to_string(budget_));
  }
  auto it = tables_.find(m);
  if (it == tables_.end()) {
    if (auto cached = load_cached(m, limit)) {
      it = tables_.emplace(m, std::move(*cached)).first;
    } else {
      it = tables_.emplace(m, PartitionTable(m, limit)).first;
      save_cached(it->second);
    }
  }
  if (it->second.size() < limit) {
    // grow geometrically so repeated small extensions stay cheap
    const std::size_t target = std::min(budget_, std::max(limit, it->second.size() + it->second.size() / 2));
    if (auto cached = load_cached(m, target)) {
      it->second = std::move(*cached);
    } else {
      it->second.extend(target);
      save_cached(it->second);
    }
  }
  return it->second;
}

std::optional<PartitionTable> PartitionStore::load_cached(std::uint32_t m, std::size_t limit) const {
  if (!cache_dir_) return std::nullopt;
  const std::regex name("p_m" + std::to_string(m) + "_k0_N([0-9]+)\\.fps");
  std::optional<std::filesystem::path> best;
  std::size_t best_n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*cache_dir_)) {
    std::smatch match;
    const std::string file = entry.path().filename().string();
    if (!std::regex_match(file, match, name)) continue;
    const std::size_t n = std::stoull(match[1].str());
    if (n >= limit && (!best || n < best_n)) {
      best = entry.path();
      best_n = n;
    }
  }
  if (!best) return std::nullopt;
  try {
    FpSeries s = read_fps(*best);
    if (s.modulus() != m || s.precision() != best_n) throw FormatError("header disagrees with file name");
    return PartitionTable::from_series(s);
  } catch (const FormatError&) {
    // corrupt cache entries are discarded and rebuilt
    std::error_code ec;
    std::filesystem::remove(*best, ec);
    return std::nullopt;
  }
}

void PartitionStore::save_cached(const PartitionTable& t) const {
  if (!cache_dir_) return;
  const auto path = *cache_dir_ / ("p_m" + std::to_string(t.modulus()) + "_k0_N" +
                                   std::to_string(t.size()) + ".fps");
  write_fps(path, t.as_series());
}

}  // namespace qseries
