#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/hecke.hpp"
#include "qseries/partition.hpp"

namespace qseries {

// gcd(a n + b, ell) = 1, or no condition when ell == 0.
struct SideCondition {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t ell = 0;

  static SideCondition none() { return {}; }
  bool is_none() const noexcept { return ell == 0; }
  bool admits(std::uint64_t n) const noexcept;
  // "none" or "gcd(24n + 1, 59) = 1"
  std::string text() const;
  static SideCondition parse(std::string_view text);

  bool operator==(const SideCondition&) const = default;
};

struct Provenance {
  std::uint64_t ell = 0;
  unsigned k = 0;
  std::string mode = "RIGOROUS";  // RIGOROUS, HEURISTIC or EXTERNAL
  std::uint64_t bound = 0;

  bool operator==(const Provenance&) const = default;
};

// p(A n + B) = target (mod m) for every n >= 0 admitted by side_condition.
struct CongruenceClaim {
  std::uint32_t m = 0;
  std::uint64_t A = 1;
  std::uint64_t B = 0;
  Residue target = 0;
  SideCondition side_condition;
  Provenance provenance;
  std::optional<std::uint64_t> verified_to;

  bool operator==(const CongruenceClaim&) const = default;
};

struct ScanEntry {
  std::uint64_t ell = 0;
  HeckeEvidence evidence;
  bool serre_candidate = false;  // ell = -1 (mod 576 m)
  std::uint64_t residue_class = 0;  // ell mod 576 m
};

struct ScanReport {
  std::uint32_t m = 0;
  unsigned k = 1;
  Mode mode = Mode::Rigorous;
  std::uint64_t bound = 0;
  bool degenerate = false;  // F(m,k) = 0, so every ell annihilates
  std::string source;       // how F(m,k) was obtained
  std::vector<ScanEntry> entries;  // sorted by ell

  std::vector<std::uint64_t> hits() const;
};

// Tests every prime ell in [lmin, lmax] coprime to 576m on f. Rigorous mode
// checks through the Sturm bound of f and needs precision l_max^2 * bound + 1;
// Heuristic mode checks through truncated_bound.
ScanReport scan_annihilators(const HalfIntegralForm& f, std::uint64_t lmin, std::uint64_t lmax, Mode mode,
                             std::uint64_t truncated_bound = 0);

// Builds F(m,k) at the precision the scan needs and runs it. For k > 1 with
// an explicit cycle the k-th member is a known multiple of an eta model, which
// is scanned instead; for m = 5, 7, 11 the scan is degenerate.
ScanReport scan_f_series(std::uint32_t m, unsigned k, std::uint64_t lmin, std::uint64_t lmax, Mode mode,
                         std::uint64_t truncated_bound, PartitionStore& store);

// Claims following from F(m,k) | T(l^2) = 0: with s = -(m^k l^3)^{-1} mod 24,
//   p(m^k l^3 n + (m^k l^3 s + 1)/24) = 0 when gcd(24n + s, l) = 1,
// and the same split into the l - 1 admissible classes mod l. For m = 5, 7, 11
// the plain progression p(m^k n + (m^k s' + 1)/24) = 0 is emitted first.
std::vector<CongruenceClaim> derive_progression(std::uint32_t m, unsigned k, std::uint64_t ell,
                                                std::string mode = "RIGOROUS", std::uint64_t bound = 0);

enum class VerifyStatus { Pass, Fail, Partial };
std::string to_string(VerifyStatus s);

struct ClaimReport {
  CongruenceClaim claim;
  VerifyStatus status = VerifyStatus::Pass;
  std::uint64_t n_max = 0;
  std::uint64_t checked = 0;  // admissible n actually tested
  std::optional<std::uint64_t> verified_to;  // every admissible n <= this passed
  std::optional<std::uint64_t> counterexample;
  Residue value = 0;  // p(A n + B) at the counterexample
};

// Checks every admissible n <= n_max whose argument fits the store budget.
ClaimReport verify_claim(const CongruenceClaim& claim, std::uint64_t n_max, PartitionStore& store);
// Same for many claims, one table per modulus, in parallel over claims.
std::vector<ClaimReport> verify_claims(const std::vector<CongruenceClaim>& claims, std::uint64_t n_max,
                                       PartitionStore& store);

struct EigenEntry {
  EigenResult result;
  std::vector<CongruenceClaim> claims;
};

// eigen_check for every prime ell in range coprime to 576m on F(m,k). Where
// lambda(l) = e l^{lambda-1} with e = +-1, every n with
// chi(l) ((-1)^lambda n | l) = e has a(l^2 n) = 0, which gives
//   p(m^k l^3 t + (m^k l^2 c + 1)/24) = 0
// for each such class c mod 24 l.
std::vector<EigenEntry> eigen_scan(const HalfIntegralForm& f, unsigned k, std::uint64_t lmin, std::uint64_t lmax,
                                   Mode mode, std::uint64_t truncated_bound = 0);

}  // namespace qseries
