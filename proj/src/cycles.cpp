#include "qseries/cycles.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/fingerprint.hpp"
#include "qseries/forms.hpp"

namespace qseries {

namespace {

constexpr std::uint64_t kBaseLevel = 576;
constexpr std::size_t kFallbackTruncation = 2000;
constexpr std::size_t kMaxDimension = 64;
constexpr std::size_t kMaxFingerprints = 512;

void require_m(std::uint32_t m) {
  check_modulus(m);
  if (m < 5) throw DomainError("F(m,k) needs a prime m >= 5");
}

// Residue class of n mod 24 supporting F(m,k): m^k n = -1 (mod 24).
std::uint64_t support_class(std::uint32_t m, unsigned k) {
  std::uint64_t mk = pow_mod(m, k, 24);
  return (24 - mk) % 24;  // units mod 24 are their own inverses
}

// Largest T <= want with need(T) <= limit, or 0 when even T = 1 is too large.
template <class Need>
std::size_t largest_affordable(std::size_t want, std::size_t limit, Need need) {
  std::size_t lo = 0, hi = want;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo + 1) / 2;
    std::size_t cost;
    try {
      cost = need(mid);
    } catch (const OverflowError&) {
      cost = limit + 1;
    }
    if (cost <= limit) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::size_t iterate_need(std::uint32_t m, unsigned k, std::size_t T) {
  std::uint64_t P = checked_mul(checked_pow(m, k - 1), T);
  return f_series_partition_limit(m, 1, P);
}

}  // namespace

std::string to_string(Route route) {
  switch (route) {
    case Route::Definition: return "definition";
    case Route::Eta: return "eta";
    case Route::Iterate: return "iterate";
  }
  return "definition";
}

Route parse_route(std::string_view name) {
  if (name == "definition") return Route::Definition;
  if (name == "eta") return Route::Eta;
  if (name == "iterate") return Route::Iterate;
  throw DomainError("unknown route '" + std::string(name) + "'");
}

std::size_t f_series_partition_limit(std::uint32_t m, unsigned k, std::size_t N) {
  if (N == 0) return 1;
  std::uint64_t mk = checked_pow(m, k);
  return checked_add(checked_add(checked_mul(mk, N - 1), 1) / 24, 1);
}

FpSeries f_series_from_table(std::uint32_t m, unsigned k, std::size_t N, const PartitionTable& p) {
  require_m(m);
  if (p.modulus() != m) throw ModulusError("partition table modulus differs from m");
  if (k == 0) throw DomainError("k must be positive");
  std::uint64_t mk = checked_pow(m, k);
  std::uint64_t s = support_class(m, k);
  std::vector<Residue> c(N, 0);
  for (std::uint64_t n = s; n < N; n += 24) {
    std::uint64_t arg = (checked_mul(mk, n) + 1) / 24;
    c[n] = p.at(arg);
  }
  return FpSeries(m, std::move(c));
}

FpSeries f_series(std::uint32_t m, unsigned k, std::size_t N, Route route, PartitionStore& store) {
  require_m(m);
  if (k == 0) throw DomainError("k must be positive");
  switch (route) {
    case Route::Definition:
      return f_series_from_table(m, k, N, store.table(m, f_series_partition_limit(m, k, N)));
    case Route::Eta:
      if (k > 2) throw DomainError("the eta route is limited to k <= 2");
      return a_series(m, k, N);
    case Route::Iterate: {
      std::size_t P = checked_mul(checked_pow(m, k - 1), N);
      FpSeries f = f_series_from_table(m, 1, P, store.table(m, f_series_partition_limit(m, 1, P)));
      for (unsigned j = 1; j < k; ++j) f = u_op(f, m);
      return f;
    }
  }
  throw DomainError("unknown route");
}

unsigned general_weight_num(std::uint32_t m) { return m * m - m - 1; }
std::uint64_t general_level(std::uint32_t m) { return kBaseLevel * m; }

CharacterSpec general_character(std::uint32_t m, unsigned k) {
  return CharacterSpec{true, (k + 1) % 2, m};
}

std::uint64_t general_sturm_bound(std::uint32_t m) {
  return sturm_bound(general_weight_num(m), general_level(m));
}

std::string EtaModel::name() const {
  std::string s = "eta^" + std::to_string(r) + "(24z)";
  if (e4 == 1) s += " E4(24z)";
  else if (e4 > 1) s += " E4(24z)^" + std::to_string(e4);
  if (e6 == 1) s += " E6(24z)";
  else if (e6 > 1) s += " E6(24z)^" + std::to_string(e6);
  return s;
}

FpSeries model_series(const EtaModel& model, std::size_t N, std::uint32_t m) {
  return eta_eisenstein_24z(model.r, model.e4, model.e6, N, m);
}

Residue ExplicitCycle::up() const {
  return static_cast<Residue>(mul_mod(even_coef, inv_mod(odd_coef, m), m));
}

Residue ExplicitCycle::down() const {
  return static_cast<Residue>(mul_mod(mul_mod(odd_coef, multiplier, m), inv_mod(even_coef, m), m));
}

Residue ExplicitCycle::coefficient(unsigned k) const {
  if (k == 0) throw DomainError("k must be positive");
  Residue c = k % 2 == 1 ? odd_coef : even_coef;
  return static_cast<Residue>(mul_mod(c, pow_mod(multiplier, (k - 1) / 2, m), m));
}

std::optional<ExplicitCycle> explicit_cycle(std::uint32_t m) {
  switch (m) {
    case 13:
      return ExplicitCycle{13, {11, 0, 0}, {23, 0, 0}, 11, 10, 6, 11, 0, {{11, 11}, {35, 9}}};
    case 17:
      return ExplicitCycle{17, {7, 1, 0}, {23, 1, 0}, 7, 15, 6, 7, 1, {{7, 7}, {31, 16}}};
    case 19:
      return ExplicitCycle{19, {5, 0, 1}, {23, 0, 1}, 5, 11, 10, std::nullopt, 0, {}};
    case 23:
      return ExplicitCycle{23, {1, 1, 1}, {23, 1, 1}, 1, 5, 5, std::nullopt, 0, {}};
    default:
      return std::nullopt;
  }
}

HalfIntegralForm standard_form(std::uint32_t m, unsigned k, FpSeries series) {
  if (auto c = explicit_cycle(m)) {
    return make_form(std::move(series), c->model(k).weight_num(), kBaseLevel, CharacterSpec{true, 0, m});
  }
  return make_form(std::move(series), general_weight_num(m), general_level(m), general_character(m, k));
}

FpSeries explicit_member(const ExplicitCycle& c, unsigned k, std::size_t N) {
  return scale(model_series(c.model(k), N, c.m), c.coefficient(k));
}

namespace {

struct Section {
  std::uint32_t m;
  PartitionStore& store;
  std::size_t limit;
  std::vector<IdentityEvidence> out;

  bool failed() const { return !out.empty() && !out.back().holds; }

  void compare(std::string identity, std::string method, const FpSeries& a, const FpSeries& b,
               unsigned weight_num, std::uint64_t level, std::uint64_t bound, Mode mode) {
    IdentityEvidence e;
    e.identity = std::move(identity);
    e.method = std::move(method);
    e.m = m;
    e.weight_num = weight_num;
    e.level = level;
    e.bound = bound;
    e.mode = mode;
    e.first_disagreement = first_difference(a, b, bound);
    e.holds = !e.first_disagreement.has_value();
    out.push_back(std::move(e));
  }

  // F(m,k) through repeated U(m) against `claim(N)` through degree `bound`,
  // truncated if the partition table would exceed the limit.
  template <class Claim>
  void direct(std::string identity, unsigned k, unsigned weight_num, std::uint64_t level,
              std::uint64_t bound, Claim claim) {
    std::size_t T = largest_affordable(bound + 1, limit, [&](std::size_t t) { return iterate_need(m, k, t); });
    if (T == 0) T = 1;
    FpSeries f = f_series(m, k, T, Route::Iterate, store);
    Mode mode = T > bound ? Mode::Rigorous : Mode::Heuristic;
    compare(std::move(identity), "direct", f, claim(T), weight_num, level, std::min<std::uint64_t>(bound, T - 1),
            mode);
  }
};

std::string f_name(std::uint32_t m, unsigned k) {
  return "F(" + std::to_string(m) + "," + std::to_string(k) + ")";
}

}  // namespace

std::vector<IdentityEvidence> verify_section4(std::uint32_t m, PartitionStore& store, std::size_t direct_limit) {
  require_m(m);
  Section s{m, store, std::min(direct_limit, store.budget()), {}};

  if (m == 5 || m == 7 || m == 11) {
    std::uint64_t bound = general_sturm_bound(m);
    for (unsigned k = 1; k <= 3 && !s.failed(); ++k) {
      s.direct(f_name(m, k) + " = 0", k, general_weight_num(m), general_level(m), bound,
               [&](std::size_t T) { return FpSeries(m, T); });
    }
    return std::move(s.out);
  }

  auto c = explicit_cycle(m);
  if (!c) throw DomainError("no explicit identities are tabulated for m = " + std::to_string(m));

  if (c->delta_coef) {
    std::uint64_t delta = (std::uint64_t{m} * m - 1) / 24;
    unsigned weight = static_cast<unsigned>(24 * delta);
    std::uint64_t bound = sturm_bound(weight, 1);
    std::size_t N = bound + 1;
    FpSeries lhs = u_op(pow(delta_series(m * N, m), delta), m);
    FpSeries rhs = delta_series(N, m);
    if (c->delta_e4 > 0) rhs = mul(rhs, pow(eisenstein(4, N, m), c->delta_e4));
    rhs = scale(rhs, *c->delta_coef);
    std::string e4 = c->delta_e4 == 0 ? "" : c->delta_e4 == 1 ? "E4 " : "E4^" + std::to_string(c->delta_e4) + " ";
    s.compare("Delta^" + std::to_string(delta) + " | U(" + std::to_string(m) + ") = " +
                  std::to_string(*c->delta_coef) + " " + e4 + "Delta",
              "sturm", lhs, rhs, weight, 1, bound, Mode::Rigorous);
    if (s.failed()) return std::move(s.out);
  }

  const unsigned w_odd = c->odd.weight_num();
  const unsigned w_even = c->even.weight_num();
  const std::uint64_t b_odd = sturm_bound(w_odd, kBaseLevel);
  const std::uint64_t b_even = sturm_bound(w_even, kBaseLevel);
  const std::uint64_t b_pair = std::max(b_odd, b_even);
  const unsigned w_pair = std::max(w_odd, w_even);

  // F(m,1) against the odd model, straight from the partition table
  {
    std::size_t N = b_odd + 1;
    FpSeries f = f_series(m, 1, N, Route::Definition, store);
    s.compare(f_name(m, 1) + " = " + std::to_string(c->odd_coef) + " " + c->odd.name(), "sturm", f,
              explicit_member(*c, 1, N), w_odd, kBaseLevel, b_odd, Mode::Rigorous);
    if (s.failed()) return std::move(s.out);
    if (!c->leading.empty()) {
      std::size_t last = c->leading.back().first;
      std::vector<std::pair<std::size_t, Residue>> seen;
      for (std::size_t n = 0; n <= last; ++n)
        if (f[n] != 0) seen.emplace_back(n, f[n]);
      IdentityEvidence e;
      e.identity = f_name(m, 1) + " leading terms";
      for (auto [d, a] : c->leading) e.identity += " " + std::to_string(a) + "q^" + std::to_string(d);
      e.method = "leading";
      e.m = m;
      e.weight_num = w_odd;
      e.level = kBaseLevel;
      e.bound = last;
      e.mode = Mode::Rigorous;
      e.holds = seen == c->leading;
      if (!e.holds) {
        for (std::size_t i = 0; i < std::max(seen.size(), c->leading.size()); ++i) {
          if (i >= seen.size() || i >= c->leading.size() || seen[i] != c->leading[i]) {
            e.first_disagreement = std::min(i < seen.size() ? seen[i].first : last,
                                            i < c->leading.size() ? c->leading[i].first : last);
            break;
          }
        }
      }
      s.out.push_back(std::move(e));
      if (s.failed()) return std::move(s.out);
    }
  }

  // the two U(m) relations between the models
  {
    std::size_t N = b_pair + 1;
    FpSeries odd = model_series(c->odd, m * N, m);
    FpSeries even = model_series(c->even, m * N, m);
    std::string U = " | U(" + std::to_string(m) + ") = ";
    s.compare(c->odd.name() + U + std::to_string(c->up()) + " " + c->even.name(), "sturm", u_op(odd, m),
              scale(even.truncated(N), c->up()), w_pair, kBaseLevel, b_pair, Mode::Rigorous);
    if (s.failed()) return std::move(s.out);
    s.compare(c->even.name() + U + std::to_string(c->down()) + " " + c->odd.name(), "sturm", u_op(even, m),
              scale(odd.truncated(N), c->down()), w_pair, kBaseLevel, b_pair, Mode::Rigorous);
    if (s.failed()) return std::move(s.out);
  }

  // F(m, 2k+1) and F(m, 2k+2) for k = 0, 1, 2: the chain step from each
  // claimed member to the next, then the member itself by iteration
  for (unsigned j = 1; j <= 6; ++j) {
    std::string claim = f_name(m, j) + " = " + std::to_string(c->coefficient(j)) + " " + c->model(j).name();
    if (j > 1) {
      std::size_t N = b_pair + 1;
      s.compare(claim + " (from " + f_name(m, j - 1) + " | U(" + std::to_string(m) + "))", "chain",
                u_op(explicit_member(*c, j - 1, m * N), m), explicit_member(*c, j, N), w_pair, kBaseLevel,
                b_pair, Mode::Rigorous);
      if (s.failed()) return std::move(s.out);
    }
    unsigned w = c->model(j).weight_num();
    s.direct(claim, j, w, kBaseLevel, sturm_bound(w, kBaseLevel),
             [&](std::size_t T) { return explicit_member(*c, j, T); });
    if (s.failed()) return std::move(s.out);
  }
  return std::move(s.out);
}

namespace {

Residue inv_residue(Residue a, std::uint32_t m) { return static_cast<Residue>(inv_mod(a, m)); }

// Row-reduced span of F(m,1..d), tracking each reduced row as a combination
// of the original vectors.
class SpanTracker {
 public:
  explicit SpanTracker(std::uint32_t m) : m_(m) {}

  // Reduces v (the next original vector) against the span. Returns the
  // combination expressing v in earlier vectors when v lies in the span;
  // otherwise adds v and returns nothing.
  std::optional<std::vector<Residue>> add(std::span<const Residue> v) {
    std::size_t idx = count_++;
    std::vector<Residue> row(v.begin(), v.end());
    std::vector<Residue> combo(idx + 1, 0);
    combo[idx] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (row[p] == 0) continue;
      std::uint64_t f = mul_mod(row[p], inv_residue(rows_[r][p], m_), m_);
      axpy(row, rows_[r], f);
      axpy(combo, combos_[r], f);
    }
    auto it = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
    if (it == row.end()) {
      // 0 = sum combo[i] v_i with combo[idx] = 1
      std::vector<Residue> rel(idx);
      for (std::size_t i = 0; i < idx; ++i) rel[i] = static_cast<Residue>((m_ - combo[i]) % m_);
      return rel;
    }
    pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
    rows_.push_back(std::move(row));
    combos_.push_back(std::move(combo));
    return std::nullopt;
  }

 private:
  // x -= f * y over the common length
  void axpy(std::vector<Residue>& x, const std::vector<Residue>& y, std::uint64_t f) const {
    std::uint64_t nf = (m_ - f) % m_;
    for (std::size_t i = 0; i < y.size(); ++i)
      x[i] = static_cast<Residue>((x[i] + nf * y[i]) % m_);
  }

  std::uint32_t m_;
  std::size_t count_ = 0;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::vector<Residue>> combos_;
  std::vector<std::size_t> pivots_;
};

std::vector<Residue> companion_step(const std::vector<Residue>& x, const std::vector<Residue>& rel,
                                    std::uint32_t m) {
  std::size_t d = rel.size();
  std::vector<Residue> y(d, 0);
  if (d == 0) return y;
  for (std::size_t i = 1; i < d; ++i) y[i] = x[i - 1];
  for (std::size_t i = 0; i < d; ++i) y[i] = static_cast<Residue>((y[i] + std::uint64_t{x[d - 1]} * rel[i]) % m);
  return y;
}

// Dimension search at truncation T; empty when the budget runs out first.
std::optional<std::pair<std::vector<FpSeries>, std::vector<Residue>>> find_relation(
    std::uint32_t m, std::size_t T, PartitionStore& store, std::string& note) {
  SpanTracker span(m);
  std::vector<FpSeries> basis;
  for (unsigned j = 1; j <= kMaxDimension + 1; ++j) {
    std::size_t need;
    try {
      need = iterate_need(m, j, T);
    } catch (const OverflowError&) {
      need = store.budget() + 1;
    }
    if (!store.affordable(need)) {
      note = "F(m," + std::to_string(j) + ") at truncation " + std::to_string(T) +
             " needs " + std::to_string(need) + " partition values, beyond the budget";
      return std::nullopt;
    }
    FpSeries f = f_series(m, j, T, Route::Iterate, store);
    if (auto rel = span.add(f.coeffs())) return std::make_pair(std::move(basis), std::move(*rel));
    basis.push_back(std::move(f));
  }
  note = "no relation among the first " + std::to_string(kMaxDimension + 1) + " members";
  return std::nullopt;
}

}  // namespace

std::vector<Residue> cycle_coordinates(const CycleReport& report, std::uint64_t k) {
  if (k == 0) throw DomainError("k must be positive");
  std::size_t d = report.dimension;
  if (d == 0) return {};
  if (report.found && k > report.preperiod + report.period)
    k = report.preperiod + 1 + (k - report.preperiod - 1) % report.period;
  std::vector<Residue> x(d, 0);
  if (k <= d) {
    x[k - 1] = 1;
    return x;
  }
  x[d - 1] = 1;
  for (std::uint64_t j = d; j < k; ++j) x = companion_step(x, report.relation, report.m);
  return x;
}

FpSeries cycle_member(const CycleReport& report, std::uint64_t k) {
  std::vector<Residue> x = cycle_coordinates(report, k);
  FpSeries out(report.m, report.truncation);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = add(out, scale(report.basis[i], x[i]));
  return out;
}

CycleReport detect_cycle(std::uint32_t m, std::size_t N, std::uint64_t k_max, PartitionStore& store,
                         std::size_t direct_limit) {
  require_m(m);
  if (k_max < 2) throw DomainError("k_max must be at least 2");
  CycleReport r;
  r.m = m;
  r.bound = 48 * (std::uint64_t{m} * m * m - 2 * m - 1);
  r.rigorous_truncation = general_sturm_bound(m);

  std::vector<std::size_t> candidates;
  if (N == 0) candidates = {static_cast<std::size_t>(r.rigorous_truncation + 1), kFallbackTruncation};
  else candidates = {N};

  std::optional<std::pair<std::vector<FpSeries>, std::vector<Residue>>> rel;
  std::string note;
  for (std::size_t T : candidates) {
    r.truncation = T;
    rel = find_relation(m, T, store, note);
    if (rel) break;
  }
  if (!rel) {
    r.note = note;
    return r;
  }
  r.basis = std::move(rel->first);
  r.relation = std::move(rel->second);
  r.dimension = r.relation.size();

  // Rigorous when the truncation passes the Sturm bound and the relation
  // only involves members sharing the character of F(m, d+1).
  bool same_character = true;
  for (std::size_t i = 0; i < r.dimension; ++i)
    if (r.relation[i] != 0 && (i + 1) % 2 != (r.dimension + 1) % 2) same_character = false;
  r.mode = r.truncation > r.rigorous_truncation && same_character ? Mode::Rigorous : Mode::Heuristic;

  std::map<std::vector<Residue>, std::uint64_t> seen;
  std::vector<Residue> x;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    if (k <= r.dimension) {
      x.assign(r.dimension, 0);
      x[k - 1] = 1;
    } else {
      x = k == 1 ? std::vector<Residue>{} : companion_step(x, r.relation, m);
    }
    auto [it, inserted] = seen.emplace(x, k);
    if (!inserted) {
      r.found = true;
      r.preperiod = it->second - 1;
      r.period = k - it->second;
      break;
    }
  }
  if (!r.found) {
    r.note = "no repeat among F(m,1..k_max)";
    return r;
  }
  if (r.period > r.bound || r.preperiod > r.bound) r.note = "cycle exceeds 48(m^3 - 2m - 1)";

  r.fingerprint_points = fingerprint_points(1);
  std::uint64_t last = std::min<std::uint64_t>(r.preperiod + r.period + 1, kMaxFingerprints);
  for (std::uint64_t k = 1; k <= last; ++k)
    r.fingerprints.emplace_back(k, fingerprint(cycle_member(r, k), r.fingerprint_points[0]));

  // members 1..d+1 were computed directly; confirm later ones while the
  // table stays within the direct limit
  for (std::uint64_t k = 1; k <= r.dimension + 1; ++k) r.direct_confirmations.push_back(k);
  std::size_t limit = std::min(direct_limit, store.budget());
  for (std::uint64_t k = r.dimension + 2; k <= last; ++k) {
    std::size_t need;
    try {
      need = iterate_need(m, static_cast<unsigned>(k), r.truncation);
    } catch (const OverflowError&) {
      break;
    }
    if (need > limit) break;
    FpSeries f = f_series(m, static_cast<unsigned>(k), r.truncation, Route::Iterate, store);
    if (f != cycle_member(r, k)) {
      r.found = false;
      r.note = "direct computation of F(m," + std::to_string(k) + ") disagrees with the relation";
      return r;
    }
    r.direct_confirmations.push_back(k);
  }
  return r;
}

std::vector<CorollaryEvidence> corollary_check(int which, unsigned k_max, std::size_t n_max, PartitionStore& store) {
  static const std::map<int, std::uint32_t> moduli{{9, 13}, {10, 17}, {11, 19}, {12, 23}};
  auto found = moduli.find(which);
  if (found == moduli.end()) throw DomainError("corollary must be 9, 10, 11 or 12");
  const std::uint32_t m = found->second;
  const ExplicitCycle c = *explicit_cycle(m);

  auto product = [&](const EtaModel& model) {
    std::size_t N = n_max + 1;
    FpSeries p = pow(euler_product(m, N), model.r);
    if (model.e4) p = mul(p, pow(eisenstein(4, N, m), model.e4));
    if (model.e6) p = mul(p, pow(eisenstein(6, N, m), model.e6));
    return p;
  };
  const FpSeries p_odd = product(c.odd);
  const FpSeries p_even = product(c.even);

  std::vector<CorollaryEvidence> out;
  std::size_t max_arg = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (int family = 1; family <= 2; ++family) {
      unsigned e = family == 1 ? 2 * k + 1 : 2 * k + 2;
      std::uint64_t r = family == 1 ? c.odd.r : 23;
      for (std::size_t n = 0; n <= n_max; ++n) {
        CorollaryEvidence ev;
        ev.corollary = which;
        ev.m = m;
        ev.family = family;
        ev.k = k;
        ev.n = n;
        try {
          ev.argument = (checked_mul(checked_pow(m, e), checked_add(24 * n, r)) + 1) / 24;
          ev.skipped = !store.affordable(ev.argument + 1);
        } catch (const OverflowError&) {
          ev.skipped = true;
        }
        const FpSeries& prod = family == 1 ? p_odd : p_even;
        ev.rhs = static_cast<Residue>(mul_mod(c.coefficient(e), prod[n], m));
        if (!ev.skipped) max_arg = std::max<std::size_t>(max_arg, ev.argument);
        out.push_back(ev);
      }
    }
  }
  const PartitionTable& p = store.table(m, max_arg + 1);
  for (auto& ev : out) {
    if (ev.skipped) continue;
    ev.lhs = p[ev.argument];
    ev.holds = ev.lhs == ev.rhs;
  }
  return out;
}

std::vector<SpotCheck> mod23_spot_checks(PartitionStore& store, unsigned k_max) {
  constexpr std::uint32_t m = 23;
  struct Family {
    std::string label;
    std::uint64_t factor;
    unsigned offset;  // exponent 2k + offset
    int five_shift;   // expected 5^{k + five_shift}, or zero when negative
  };
  const std::vector<Family> families{
      {"p((23^(2k+1) + 1)/24) = 5^k", 1, 1, 0},
      {"p((23^(2k+3) + 1)/24) = 5^(k+1)", 1, 3, 1},
      {"p((1367*23^(2k+2) + 1)/24) = 0", 1367, 2, -1},
      {"p((1297*23^(2k+1) + 1)/24) = 0", 1297, 1, -1},
  };
  std::vector<SpotCheck> out;
  std::size_t max_arg = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (const auto& f : families) {
      SpotCheck s;
      s.label = f.label + ", k = " + std::to_string(k);
      s.expected = f.five_shift < 0 ? 0 : static_cast<Residue>(pow_mod(5, k + f.five_shift, m));
      try {
        s.argument = (checked_mul(f.factor, checked_pow(m, 2 * k + f.offset)) + 1) / 24;
        s.skipped = !store.affordable(s.argument + 1);
      } catch (const OverflowError&) {
        s.skipped = true;
      }
      if (!s.skipped) max_arg = std::max<std::size_t>(max_arg, s.argument);
      out.push_back(s);
    }
  }
  const PartitionTable& p = store.table(m, max_arg + 1);
  for (auto& s : out) {
    if (s.skipped) continue;
    s.value = p[s.argument];
    s.holds = s.value == s.expected;
  }
  return out;
}

}  // namespace qseries
