#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qseries/fpseries.hpp"

namespace qseries {

// chi^{[base12]} * chi_m^{m_exponent}, where chi = (12|.) is the quadratic
// character of conductor 12 and chi_m is the Kronecker character of Q(sqrt m).
struct CharacterSpec {
  bool base12 = true;
  unsigned m_exponent = 0;
  std::uint32_t m = 0;
};

// Discriminant of Q(sqrt m): m when m = 1 (mod 4), else 4m.
std::int64_t quadratic_discriminant(std::uint32_t m);
int eval_character(const CharacterSpec& c, std::int64_t n);

// A q-expansion tagged as a form of weight weight_num / 2 on Gamma_0(level).
struct HalfIntegralForm {
  FpSeries series;
  unsigned weight_num;
  std::uint64_t level;
  CharacterSpec character;

  // lambda with weight = lambda + 1/2.
  unsigned lambda() const noexcept { return (weight_num - 1) / 2; }
  std::uint32_t modulus() const noexcept { return series.modulus(); }
};

// Validates the odd weight and 4 | level.
HalfIntegralForm make_form(FpSeries series, unsigned weight_num, std::uint64_t level,
                           CharacterSpec character);

// Half-integral weight Hecke operator T(l^2):
//   a(l^2 n) + chi(l) ((-1)^lambda n | l) l^{lambda-1} a(n) + chi(l^2) l^{2 lambda - 1} a(n / l^2).
// Output precision ceil(N / l^2). Throws DomainError when l is not an odd
// prime or divides the level.
HalfIntegralForm hecke_t_ell2(const HalfIntegralForm& f, std::uint64_t ell);
// Serial reference of the same map, for tests and benchmarks.
HalfIntegralForm hecke_t_ell2_serial(const HalfIntegralForm& f, std::uint64_t ell);

// floor(weight * index / 12) with index = [SL2(Z) : Gamma_0(level)];
// weight_num is twice the weight, so integral weights pass 2k.
std::uint64_t sturm_bound(unsigned weight_num, std::uint64_t level);
std::uint64_t gamma0_index(std::uint64_t level);

enum class Mode { Rigorous, Heuristic };
std::string to_string(Mode mode);

struct ZeroCertificate {
  bool result = false;
  Mode mode = Mode::Rigorous;
  std::uint64_t bound_checked = 0;
  std::optional<std::size_t> first_nonzero_degree;
};

// Coefficients 0..sturm_bound all vanish. Throws PrecisionError when the
// series is shorter than the bound.
ZeroCertificate certify_zero(const HalfIntegralForm& f);
// Exploratory variant at a caller-chosen bound; labelled Heuristic.
ZeroCertificate certify_zero_truncated(const HalfIntegralForm& f, std::uint64_t bound);

// Input precision T(l^2) needs for an output known through degree `bound`.
std::size_t hecke_input_precision(std::uint64_t ell, std::uint64_t bound);

struct HeckeEvidence {
  std::uint64_t ell = 0;
  std::uint32_t m = 0;
  unsigned weight_num = 0;
  std::uint64_t level = 0;
  ZeroCertificate certificate;
};

// certify_zero(f | T(l^2)) in the requested mode (truncated bound used only
// for Heuristic mode).
HeckeEvidence annihilation_evidence(const HalfIntegralForm& f, std::uint64_t ell, Mode mode,
                                    std::uint64_t truncated_bound = 0);

struct EigenResult {
  std::uint64_t ell = 0;
  Mode mode = Mode::Rigorous;
  std::uint64_t bound_checked = 0;
  std::optional<Residue> eigenvalue;          // empty: not an eigenform
  std::optional<std::size_t> mismatch_degree;  // first failure of f|T = lambda f
  // eigenvalue = +-l^{(m^2-m-4)/2} (mod m)
  bool sign_condition = false;
};

// Finds lambda(l) with f | T(l^2) = lambda(l) f through the bound.
EigenResult eigen_check(const HalfIntegralForm& f, std::uint64_t ell, Mode mode = Mode::Rigorous,
                        std::uint64_t truncated_bound = 0);

}  // namespace qseries
