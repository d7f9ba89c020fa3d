#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/fpseries.hpp"
#include "qseries/hecke.hpp"
#include "qseries/partition.hpp"

// F(m,k;z) = sum_{m^k n = -1 (24)} p((m^k n + 1)/24) q^n mod m: construction
// routes, Ramanujan-cycle detection and the explicit m <= 23 identities.
namespace qseries {

enum class Route { Definition, Eta, Iterate };
std::string to_string(Route route);
Route parse_route(std::string_view name);

// Partition-table length the definition route needs for F(m,k) mod q^N.
std::size_t f_series_partition_limit(std::uint32_t m, unsigned k, std::size_t N);

// Definition route over an existing table (throws PrecisionError if short).
FpSeries f_series_from_table(std::uint32_t m, unsigned k, std::size_t N, const PartitionTable& p);

// Definition: reads the partition table. Eta: the Delta^delta quotient
// (k <= 2). Iterate: U(m) applied k-1 times to F(m,1) at precision m^{k-1} N.
FpSeries f_series(std::uint32_t m, unsigned k, std::size_t N, Route route, PartitionStore& store);

// Weight (m^2 - m - 1)/2, level 576m and character chi chi_m^{k-1} that
// F(m,k) carries for every prime m >= 5.
unsigned general_weight_num(std::uint32_t m);
std::uint64_t general_level(std::uint32_t m);
CharacterSpec general_character(std::uint32_t m, unsigned k);
std::uint64_t general_sturm_bound(std::uint32_t m);

// eta^r(24z) E4(24z)^e4 E6(24z)^e6, of weight (r + 8 e4 + 12 e6) / 2 on
// Gamma_0(576) with character chi.
struct EtaModel {
  unsigned r;
  unsigned e4;
  unsigned e6;
  unsigned weight_num() const noexcept { return r + 8 * e4 + 12 * e6; }
  std::string name() const;
};
FpSeries model_series(const EtaModel& model, std::size_t N, std::uint32_t m);

// The explicit Ramanujan cycles for m = 13, 17, 19, 23:
//   F(m, 2k+1) = odd_coef  * multiplier^k * odd model,
//   F(m, 2k+2) = even_coef * multiplier^k * even model.
struct ExplicitCycle {
  std::uint32_t m;
  EtaModel odd;
  EtaModel even;
  Residue odd_coef;
  Residue even_coef;
  Residue multiplier;
  // Delta^{(m^2-1)/24} | U(m) = delta_coef * E4^delta_e4 * Delta, when known
  std::optional<Residue> delta_coef;
  unsigned delta_e4 = 0;
  // leading terms (degree, coefficient) of F(m,1), when tabulated
  std::vector<std::pair<std::size_t, Residue>> leading;

  // odd model | U(m) = up * even model, even model | U(m) = down * odd model
  Residue up() const;
  Residue down() const;
  const EtaModel& model(unsigned k) const { return k % 2 == 1 ? odd : even; }
  // coefficient of F(m,k) on model(k)
  Residue coefficient(unsigned k) const;
};
std::optional<ExplicitCycle> explicit_cycle(std::uint32_t m);

// F(m,k) tagged with the smallest known weight: the eta-model weight at level
// 576 when an explicit cycle exists, otherwise the general weight and level.
HalfIntegralForm standard_form(std::uint32_t m, unsigned k, FpSeries series);
// coefficient(k) * model(k) at precision N.
FpSeries explicit_member(const ExplicitCycle& c, unsigned k, std::size_t N);

struct IdentityEvidence {
  std::string identity;
  std::string method;  // "sturm", "chain", "leading", "direct"
  std::uint32_t m = 0;
  unsigned weight_num = 0;
  std::uint64_t level = 0;
  std::uint64_t bound = 0;
  Mode mode = Mode::Rigorous;
  bool holds = false;
  std::optional<std::size_t> first_disagreement;
};

// Every explicit identity for m in {5, 7, 11, 13, 17, 19, 23}, in order;
// stops after the first failure, which is then the last entry. Direct
// partition checks are capped at direct_limit table entries and labelled
// Heuristic when that forces a truncation below the Sturm bound.
std::vector<IdentityEvidence> verify_section4(std::uint32_t m, PartitionStore& store,
                                              std::size_t direct_limit = 4'100'000);

struct CycleReport {
  std::uint32_t m = 0;
  std::size_t truncation = 0;
  bool found = false;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  std::uint64_t bound = 0;  // 48 (m^3 - 2m - 1)
  std::string route = "iterate";
  Mode mode = Mode::Heuristic;
  std::uint64_t rigorous_truncation = 0;  // general Sturm bound for F(m,k)
  // F(m, d+1) = sum_i relation[i] F(m, i+1) at the truncation, d = dimension
  std::size_t dimension = 0;
  std::vector<Residue> relation;
  std::vector<std::uint64_t> fingerprint_points;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> fingerprints;  // (k, digest)
  std::vector<std::uint64_t> direct_confirmations;
  std::string note;

  // F(m,1..d) at the truncation; not serialized
  std::vector<FpSeries> basis;
};

// Finds the first linear relation among F(m,1), F(m,2), ... at truncation N
// (each computed by repeated U(m)), then follows the induced U(m) dynamics on
// coordinates for k <= k_max to find the minimal preperiod and period. The
// sequence is indexed from k = 1. N = 0 tries the general Sturm bound first
// and falls back to 2000 when that exceeds the store budget.
CycleReport detect_cycle(std::uint32_t m, std::size_t N, std::uint64_t k_max, PartitionStore& store,
                         std::size_t direct_limit = 4'100'000);

// Coordinates of F(m,k) on the report's basis.
std::vector<Residue> cycle_coordinates(const CycleReport& report, std::uint64_t k);
// F(m,k) at the report's truncation, reconstructed from the basis.
FpSeries cycle_member(const CycleReport& report, std::uint64_t k);

struct CorollaryEvidence {
  int corollary = 0;
  std::uint32_t m = 0;
  int family = 0;  // 1: odd power of m, 2: even power
  unsigned k = 0;
  std::size_t n = 0;
  std::uint64_t argument = 0;
  bool skipped = false;
  Residue lhs = 0;  // p(argument) mod m
  Residue rhs = 0;  // coefficient * multiplier^k * product coefficient
  bool holds = false;
};

// For which = 9, 10, 11, 12 (m = 13, 17, 19, 23):
//   p((m^{2k+1}(24n + r) + 1)/24) = odd_coef * multiplier^k * [q^n] P_odd,
//   p((m^{2k+2}(24n + 23) + 1)/24) = even_coef * multiplier^k * [q^n] P_even,
// with r the odd model's eta exponent and P the model with 24z replaced by z.
// Both sides are computed independently for k <= k_max, n <= n_max;
// arguments beyond the store budget are reported as skipped.
std::vector<CorollaryEvidence> corollary_check(int which, unsigned k_max, std::size_t n_max,
                                               PartitionStore& store);

struct SpotCheck {
  std::string label;
  std::uint64_t argument = 0;
  Residue expected = 0;
  Residue value = 0;
  bool skipped = false;
  bool holds = false;
};
// p((23^{2k+1}+1)/24) = 5^k, p((23^{2k+3}+1)/24) = 5^{k+1},
// p((1367*23^{2k+2}+1)/24) = 0, p((1297*23^{2k+1}+1)/24) = 0 (mod 23) for
// every k whose argument fits the store budget.
std::vector<SpotCheck> mod23_spot_checks(PartitionStore& store, unsigned k_max = 2);

}  // namespace qseries
