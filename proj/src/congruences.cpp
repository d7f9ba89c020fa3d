#include "qseries/congruences.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include "qseries/arith.hpp"
#include "qseries/cycles.hpp"
#include "qseries/error.hpp"

namespace qseries {

bool SideCondition::admits(std::uint64_t n) const noexcept {
  if (ell == 0) return true;
  std::uint64_t v = (mul_mod(a % ell, n % ell, ell) + b % ell) % ell;
  return std::gcd(v, ell) == 1;
}

std::string SideCondition::text() const {
  if (ell == 0) return "none";
  return "gcd(" + std::to_string(a) + "n + " + std::to_string(b) + ", " + std::to_string(ell) + ") = 1";
}

SideCondition SideCondition::parse(std::string_view text) {
  std::string t(text);
  if (t == "none") return none();
  static const std::regex re(R"(gcd\((\d+)n \+ (\d+), (\d+)\) = 1)");
  std::smatch mt;
  if (!std::regex_match(t, mt, re)) throw FormatError("unrecognised side condition '" + t + "'");
  SideCondition c{std::stoull(mt[1]), std::stoull(mt[2]), std::stoull(mt[3])};
  if (c.ell == 0) throw FormatError("side condition modulus must be positive");
  return c;
}

std::vector<std::uint64_t> ScanReport::hits() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries)
    if (e.evidence.certificate.result) out.push_back(e.ell);
  return out;
}

namespace {

std::vector<std::uint64_t> coprime_primes(std::uint64_t lmin, std::uint64_t lmax, std::uint64_t level) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t ell : primes_in(lmin, lmax))
    if (level % ell != 0) out.push_back(ell);
  return out;
}

std::uint64_t checked_bound(const HalfIntegralForm& f, Mode mode, std::uint64_t truncated_bound) {
  if (mode == Mode::Rigorous) return sturm_bound(f.weight_num, f.level);
  if (truncated_bound == 0) throw DomainError("heuristic mode needs a positive truncated bound");
  return truncated_bound;
}

std::uint64_t f_level(std::uint32_t m) { return 576 * std::uint64_t{m}; }

}  // namespace

ScanReport scan_annihilators(const HalfIntegralForm& f, std::uint64_t lmin, std::uint64_t lmax, Mode mode,
                             std::uint64_t truncated_bound) {
  const std::uint32_t m = f.modulus();
  ScanReport report;
  report.m = m;
  report.mode = mode;
  report.bound = checked_bound(f, mode, truncated_bound);
  report.degenerate = f.series.is_zero();

  const std::uint64_t serre = f_level(m);
  std::vector<std::uint64_t> ells = coprime_primes(lmin, lmax, serre);
  if (!ells.empty()) {
    std::size_t need = hecke_input_precision(ells.back(), report.bound);
    if (f.series.precision() < need)
      throw PrecisionError("scan to l = " + std::to_string(ells.back()) + " needs precision " + std::to_string(need) +
                           ", have " + std::to_string(f.series.precision()));
  }

  report.entries.resize(ells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < ells.size(); ++i) {
    std::uint64_t ell = ells[i];
    HalfIntegralForm g{f.series.truncated(hecke_input_precision(ell, report.bound)), f.weight_num, f.level,
                       f.character};
    ScanEntry& e = report.entries[i];
    e.ell = ell;
    e.evidence = annihilation_evidence(g, ell, mode, report.bound);
    e.residue_class = ell % serre;
    e.serre_candidate = e.residue_class == serre - 1;
  }
  return report;
}

ScanReport scan_f_series(std::uint32_t m, unsigned k, std::uint64_t lmin, std::uint64_t lmax, Mode mode,
                         std::uint64_t truncated_bound, PartitionStore& store) {
  if (k == 0) throw DomainError("k must be positive");
  auto largest = [&](std::uint64_t level) {
    auto ells = coprime_primes(lmin, lmax, level);
    return ells.empty() ? std::uint64_t{0} : ells.back();
  };

  if (m == 5 || m == 7 || m == 11) {
    // F(m,k) vanishes identically; certify F(m,1) = 0 through the general
    // Sturm bound, then every ell acts on the zero form
    std::uint64_t bound = general_sturm_bound(m);
    FpSeries f = f_series(m, 1, bound + 1, Route::Definition, store);
    if (!f.is_zero()) throw Error("F(" + std::to_string(m) + ",1) is not zero");
    std::size_t P = hecke_input_precision(std::max<std::uint64_t>(largest(f_level(m)), 1), 1);
    ScanReport r = scan_annihilators(standard_form(m, k, FpSeries(m, P)), lmin, lmax, Mode::Heuristic, 1);
    r.k = k;
    r.mode = Mode::Rigorous;
    r.bound = bound;
    r.degenerate = true;
    r.source = "F(m,1) = 0 through the general Sturm bound";
    for (auto& e : r.entries) {
      e.evidence.certificate.mode = r.mode;
      e.evidence.certificate.bound_checked = bound;
      e.evidence.weight_num = general_weight_num(m);
      e.evidence.level = general_level(m);
    }
    return r;
  }

  auto cycle = explicit_cycle(m);
  std::uint64_t ell_max = largest(f_level(m));
  if (ell_max == 0) ell_max = 1;

  HalfIntegralForm probe = standard_form(m, k, FpSeries(m, 1));
  std::uint64_t bound = checked_bound(probe, mode, truncated_bound);
  std::size_t P = hecke_input_precision(ell_max, bound);

  ScanReport r;
  std::string source;
  if (k > 1 && cycle) {
    // F(m,k) is coefficient(k) times the parity model
    r = scan_annihilators(standard_form(m, k, explicit_member(*cycle, k, P)), lmin, lmax, mode, truncated_bound);
    source = "F(m,k) = " + std::to_string(cycle->coefficient(k)) + " " + cycle->model(k).name();
  } else {
    std::size_t need = f_series_partition_limit(m, k, P);
    if (!store.affordable(need))
      throw BudgetError("F(" + std::to_string(m) + "," + std::to_string(k) + ") at precision " + std::to_string(P) +
                        " needs " + std::to_string(need) + " partition values");
    r = scan_annihilators(standard_form(m, k, f_series(m, k, P, Route::Definition, store)), lmin, lmax, mode,
                          truncated_bound);
    source = "partition table";
  }
  r.k = k;
  r.source = source;
  return r;
}

std::vector<CongruenceClaim> derive_progression(std::uint32_t m, unsigned k, std::uint64_t ell, std::string mode,
                                                std::uint64_t bound) {
  check_modulus(m);
  if (m < 5) throw DomainError("m must be at least 5");
  if (k == 0) throw DomainError("k must be positive");
  if (ell < 5 || !is_prime(ell) || ell == m) throw DomainError("l must be a prime coprime to 6m");

  const std::uint64_t mk = checked_pow(m, k);
  const std::uint64_t A3 = checked_mul(mk, checked_pow(ell, 3));
  const std::uint64_t A4 = checked_mul(A3, ell);
  // n' = s (mod 24) makes m^k l^3 n' = -1 (mod 24)
  const std::uint64_t s = (24 - A3 % 24) % 24;
  const Provenance prov{ell, k, mode, bound};

  std::vector<CongruenceClaim> out;
  if (m == 5 || m == 7 || m == 11) {
    std::uint64_t s0 = (24 - mk % 24) % 24;
    out.push_back({m, mk, (checked_mul(mk, s0) + 1) / 24, 0, SideCondition::none(), prov, std::nullopt});
  }
  out.push_back({m, A3, (checked_mul(A3, s) + 1) / 24, 0, SideCondition{24, s, ell}, prov, std::nullopt});
  for (std::uint64_t r = 1; r < ell; ++r) {
    auto c = crt(s, 24, r, ell);
    if (!c) throw Error("inconsistent class system for l = " + std::to_string(ell));
    out.push_back({m, A4, (checked_mul(A3, *c) + 1) / 24, 0, SideCondition::none(), prov, std::nullopt});
  }
  return out;
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::Partial: return "PARTIAL";
  }
  return "FAIL";
}

namespace {

// Largest admissible n <= n_max whose argument fits below `limit`.
std::uint64_t reachable_n(const CongruenceClaim& c, std::uint64_t n_max, std::size_t limit) {
  if (c.B >= limit) return 0;
  std::uint64_t n = (limit - 1 - c.B) / c.A;
  return std::min(n, n_max);
}

// Checks admissible n <= n_max with A n + B < budget; the table must cover
// that range. Depends only on the budget, never on how far p has grown.
ClaimReport check_on_table(const CongruenceClaim& claim, std::uint64_t n_max, const PartitionTable& p,
                           std::size_t budget) {
  ClaimReport r;
  r.claim = claim;
  r.n_max = n_max;
  const bool any = claim.B < budget;
  const std::uint64_t top = reachable_n(claim, n_max, budget);
  if (any) {
    for (std::uint64_t n = 0; n <= top; ++n) {
      if (!claim.side_condition.admits(n)) continue;
      ++r.checked;
      Residue v = p.at(claim.A * n + claim.B);
      if (v != claim.target) {
        r.status = VerifyStatus::Fail;
        r.counterexample = n;
        r.value = v;
        if (n > 0) r.verified_to = n - 1;
        r.claim.verified_to = r.verified_to;
        return r;
      }
    }
    r.verified_to = top;
  }
  r.status = any && top == n_max ? VerifyStatus::Pass : VerifyStatus::Partial;
  r.claim.verified_to = r.verified_to;
  return r;
}

void validate(const CongruenceClaim& c) {
  check_modulus(c.m);
  if (c.A == 0) throw DomainError("claim coefficient A must be positive");
  if (c.target >= c.m) throw DomainError("claim target must lie in [0, m)");
}

std::size_t table_need(const CongruenceClaim& c, std::uint64_t n_max, std::size_t budget) {
  if (c.B >= budget) return 0;
  std::uint64_t top = reachable_n(c, n_max, budget);
  return c.A * top + c.B + 1;
}

}  // namespace

ClaimReport verify_claim(const CongruenceClaim& claim, std::uint64_t n_max, PartitionStore& store) {
  validate(claim);
  std::size_t need = std::max<std::size_t>(table_need(claim, n_max, store.budget()), 1);
  return check_on_table(claim, n_max, store.table(claim.m, need), store.budget());
}

std::vector<ClaimReport> verify_claims(const std::vector<CongruenceClaim>& claims, std::uint64_t n_max,
                                       PartitionStore& store) {
  std::map<std::uint32_t, std::size_t> need;
  for (const auto& c : claims) {
    validate(c);
    auto& slot = need[c.m];
    slot = std::max<std::size_t>({slot, table_need(c, n_max, store.budget()), 1});
  }
  std::map<std::uint32_t, const PartitionTable*> tables;
  for (auto [m, n] : need) tables[m] = &store.table(m, n);

  std::vector<ClaimReport> out(claims.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < claims.size(); ++i)
    out[i] = check_on_table(claims[i], n_max, *tables.at(claims[i].m), store.budget());
  return out;
}

std::vector<EigenEntry> eigen_scan(const HalfIntegralForm& f, unsigned k, std::uint64_t lmin, std::uint64_t lmax,
                                   Mode mode, std::uint64_t truncated_bound) {
  const std::uint32_t m = f.modulus();
  const std::uint64_t bound = checked_bound(f, mode, truncated_bound);
  std::vector<std::uint64_t> ells = coprime_primes(lmin, lmax, f_level(m));
  if (!ells.empty() && f.series.precision() < hecke_input_precision(ells.back(), bound))
    throw PrecisionError("eigen scan to l = " + std::to_string(ells.back()) + " needs precision " +
                         std::to_string(hecke_input_precision(ells.back(), bound)));

  std::vector<EigenEntry> out(ells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < ells.size(); ++i) {
    std::uint64_t ell = ells[i];
    HalfIntegralForm g{f.series.truncated(hecke_input_precision(ell, bound)), f.weight_num, f.level, f.character};
    out[i].result = eigen_check(g, ell, mode, bound);
  }

  const std::uint64_t mk = checked_pow(m, k);
  const unsigned lam = f.lambda();
  for (auto& entry : out) {
    const EigenResult& res = entry.result;
    if (!res.eigenvalue || !res.sign_condition) continue;
    const std::uint64_t ell = res.ell;
    const std::uint64_t p = pow_mod_signed(ell % m, static_cast<std::int64_t>(lam) - 1, m);
    const int eps = *res.eigenvalue == p ? 1 : -1;
    const int chi = eval_character(f.character, static_cast<std::int64_t>(ell));
    const std::uint64_t A2 = checked_mul(mk, ell * ell);
    const std::uint64_t s = (24 - mk % 24) % 24;
    for (std::uint64_t r = 1; r < ell; ++r) {
      std::int64_t top = lam % 2 == 0 ? static_cast<std::int64_t>(r) : -static_cast<std::int64_t>(r);
      if (chi * kronecker(top, static_cast<std::int64_t>(ell)) != eps) continue;
      auto c = crt(s, 24, r, ell);
      if (!c) throw Error("inconsistent class system for l = " + std::to_string(ell));
      entry.claims.push_back({m, checked_mul(A2, ell), (checked_mul(A2, *c) + 1) / 24, 0, SideCondition::none(),
                              Provenance{ell, k, to_string(res.mode), res.bound_checked}, std::nullopt});
    }
  }
  return out;
}

}  // namespace qseries
