#include "qseries/hecke.hpp"

#include <vector>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/kernels.hpp"

namespace qseries {
namespace {

struct PreparedHecke {
  std::vector<int> legendre;
  kernels::HeckeTerms terms;
  std::size_t out_precision;
};

PreparedHecke prepare(const HalfIntegralForm& f, std::uint64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw DomainError("T(l^2): l must be an odd prime, got " + std::to_string(ell));
  if (f.level % ell == 0) {
    throw DomainError("T(l^2): l = " + std::to_string(ell) + " divides the level " + std::to_string(f.level));
  }
  const std::uint32_t m = f.modulus();
  const std::uint64_t ell2 = checked_mul(ell, ell);
  PreparedHecke h;
  h.out_precision = f.series.precision() == 0 ? 0 : (f.series.precision() - 1) / ell2 + 1;
  if (h.out_precision == 0) throw PrecisionError("T(l^2): empty input");

  const unsigned lambda = f.lambda();
  const int chi = eval_character(f.character, static_cast<std::int64_t>(ell));
  // ((-1)^lambda n | l) = ((-1) | l)^lambda (n | l)
  const int minus_one = (lambda % 2 == 1) ? kronecker(-1, static_cast<std::int64_t>(ell)) : 1;
  const std::int64_t mid_sign = static_cast<std::int64_t>(chi) * minus_one;
  const std::uint64_t ell_mod = ell % m;

  // l^e mod m for signed e; a negative power of l needs m not to divide l
  auto ell_pow = [&](std::int64_t e) -> std::uint64_t {
    if (e >= 0) return pow_mod(ell_mod, static_cast<std::uint64_t>(e), m);
    if (ell_mod == 0) throw DomainError("T(l^2): negative power of l with m | l");
    return pow_mod_signed(ell_mod, e, m);
  };
  const auto lam = static_cast<std::int64_t>(lambda);
  const std::uint64_t middle = mid_sign == 0 ? 0 : reduce(mid_sign * static_cast<std::int64_t>(ell_pow(lam - 1)), m);
  // chi(l^2) = chi(l)^2, which is 1 unless chi(l) = 0
  const std::uint64_t outer = chi == 0 ? 0 : ell_pow(2 * lam - 1);
  h.legendre.resize(ell);
  for (std::uint64_t r = 0; r < ell; ++r) {
    h.legendre[r] = kronecker(static_cast<std::int64_t>(r), static_cast<std::int64_t>(ell));
  }
  h.terms = kernels::HeckeTerms{m, ell, middle, outer, {}};
  return h;
}

HalfIntegralForm apply(const HalfIntegralForm& f, std::uint64_t ell, bool parallel,
                       std::size_t max_out) {
  PreparedHecke h = prepare(f, ell);
  h.terms.legendre = h.legendre;
  const std::size_t n = std::min(h.out_precision, max_out);
  std::vector<Residue> out(n);
  if (parallel) {
    kernels::hecke_omp(h.terms, f.series.coeffs(), out);
  } else {
    kernels::hecke_serial(h.terms, f.series.coeffs(), out);
  }
  return HalfIntegralForm{FpSeries(f.modulus(), std::move(out)), f.weight_num, f.level, f.character};
}

}  // namespace

std::int64_t quadratic_discriminant(std::uint32_t m) {
  return m % 4 == 1 ? static_cast<std::int64_t>(m) : 4 * static_cast<std::int64_t>(m);
}

int eval_character(const CharacterSpec& c, std::int64_t n) {
  int v = 1;
  if (c.base12) v *= kronecker(12, n);
  if (c.m_exponent > 0) {
    const int chi_m = kronecker(quadratic_discriminant(c.m), n);
    // chi_m is quadratic: only the parity of the exponent matters unless it vanishes
    v *= (c.m_exponent % 2 == 1) ? chi_m : chi_m * chi_m;
  }
  return v;
}

HalfIntegralForm make_form(FpSeries series, unsigned weight_num, std::uint64_t level,
                           CharacterSpec character) {
  if (weight_num % 2 == 0) throw DomainError("half-integral form needs an odd weight numerator");
  if (level == 0 || level % 4 != 0) throw DomainError("half-integral form needs 4 | level");
  return HalfIntegralForm{std::move(series), weight_num, level, character};
}

HalfIntegralForm hecke_t_ell2(const HalfIntegralForm& f, std::uint64_t ell) {
  return apply(f, ell, true, SIZE_MAX);
}

HalfIntegralForm hecke_t_ell2_serial(const HalfIntegralForm& f, std::uint64_t ell) {
  return apply(f, ell, false, SIZE_MAX);
}

std::uint64_t gamma0_index(std::uint64_t level) {
  if (level == 0) throw DomainError("level must be positive");
  std::uint64_t index = level;
  for (std::uint64_t p : prime_divisors(level)) index = index / p * (p + 1);
  return index;
}

std::uint64_t sturm_bound(unsigned weight_num, std::uint64_t level) {
  return checked_mul(weight_num, gamma0_index(level)) / 24;
}

std::string to_string(Mode mode) { return mode == Mode::Rigorous ? "RIGOROUS" : "HEURISTIC"; }

namespace {

ZeroCertificate check_zero(const FpSeries& s, std::uint64_t bound, Mode mode) {
  if (s.precision() <= bound) {
    throw PrecisionError("certify_zero: bound " + std::to_string(bound) + " needs precision " +
                         std::to_string(bound + 1) + ", have " + std::to_string(s.precision()));
  }
  ZeroCertificate c;
  c.mode = mode;
  c.bound_checked = bound;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (s[n] != 0) {
      c.first_nonzero_degree = n;
      break;
    }
  }
  c.result = !c.first_nonzero_degree.has_value();
  return c;
}

std::uint64_t effective_bound(const HalfIntegralForm& f, Mode mode, std::uint64_t truncated_bound) {
  if (mode == Mode::Rigorous) return sturm_bound(f.weight_num, f.level);
  if (truncated_bound == 0) throw DomainError("heuristic mode needs a positive bound");
  return truncated_bound;
}

}  // namespace

ZeroCertificate certify_zero(const HalfIntegralForm& f) {
  return check_zero(f.series, sturm_bound(f.weight_num, f.level), Mode::Rigorous);
}

ZeroCertificate certify_zero_truncated(const HalfIntegralForm& f, std::uint64_t bound) {
  return check_zero(f.series, bound, Mode::Heuristic);
}

std::size_t hecke_input_precision(std::uint64_t ell, std::uint64_t bound) {
  return checked_add(checked_mul(checked_mul(ell, ell), bound), 1);
}

HeckeEvidence annihilation_evidence(const HalfIntegralForm& f, std::uint64_t ell, Mode mode,
                                    std::uint64_t truncated_bound) {
  const std::uint64_t bound = effective_bound(f, mode, truncated_bound);
  if (f.series.precision() < hecke_input_precision(ell, bound)) {
    throw PrecisionError("T(" + std::to_string(ell) + "^2) through degree " + std::to_string(bound) +
                         " needs precision " + std::to_string(hecke_input_precision(ell, bound)) +
                         ", have " + std::to_string(f.series.precision()));
  }
  const HalfIntegralForm g = apply(f, ell, true, bound + 1);
  HeckeEvidence e;
  e.ell = ell;
  e.m = f.modulus();
  e.weight_num = f.weight_num;
  e.level = f.level;
  e.certificate = check_zero(g.series, bound, mode);
  return e;
}

EigenResult eigen_check(const HalfIntegralForm& f, std::uint64_t ell, Mode mode,
                        std::uint64_t truncated_bound) {
  const std::uint64_t bound = effective_bound(f, mode, truncated_bound);
  if (f.series.precision() < hecke_input_precision(ell, bound)) {
    throw PrecisionError("eigen_check: T(" + std::to_string(ell) + "^2) needs precision " +
                         std::to_string(hecke_input_precision(ell, bound)));
  }
  const std::uint32_t m = f.modulus();
  const auto lead = f.series.truncated(bound + 1).first_nonzero();
  if (!lead) throw DomainError("eigen_check: form vanishes through the bound");

  const FpSeries g = apply(f, ell, true, bound + 1).series;
  EigenResult r;
  r.ell = ell;
  r.mode = mode;
  r.bound_checked = bound;
  const std::uint64_t candidate = std::uint64_t{g[*lead]} * inv_mod(f.series[*lead], m) % m;
  const FpSeries expected = scale(f.series.truncated(bound + 1), static_cast<std::int64_t>(candidate));
  r.mismatch_degree = first_difference(g, expected, bound);
  if (!r.mismatch_degree) {
    r.eigenvalue = static_cast<Residue>(candidate);
    const std::uint64_t e = (static_cast<std::uint64_t>(m) * m - m - 4) / 2;
    const std::uint64_t target = pow_mod(ell % m, e, m);
    r.sign_condition = candidate != 0 && (candidate == target || candidate == (m - target) % m);
  }
  return r;
}

}  // namespace qseries
