#include "qseries/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <omp.h>

#include <CLI11.hpp>

#include "qseries/arith.hpp"
#include "qseries/congruences.hpp"
#include "qseries/cycles.hpp"
#include "qseries/error.hpp"
#include "qseries/fingerprint.hpp"
#include "qseries/forms.hpp"
#include "qseries/fps_io.hpp"
#include "qseries/newman.hpp"
#include "qseries/partition.hpp"
#include "qseries/report.hpp"

namespace qseries::cli {

namespace {

using report::Json;

constexpr std::size_t kInlineCoefficients = 10000;

std::optional<std::filesystem::path> cache_root(const JobConfig& cfg) {
  if (!cfg.cache_dir.empty()) return std::filesystem::path(cfg.cache_dir);
  if (const char* env = std::getenv("QSERIES_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

Mode parse_mode(const std::string& s) {
  if (s == "rigorous") return Mode::Rigorous;
  if (s == "truncated") return Mode::Heuristic;
  throw DomainError("mode must be 'rigorous' or 'truncated'");
}

class Job {
 public:
  Job(const JobConfig& cfg, std::ostream& out)
      : cfg_(cfg),
        store_(cfg.budget ? cfg.budget : kDefaultPartitionBudget, cache_root(cfg)),
        out_(&out) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot open output file " + cfg.out);
      out_ = &file_;
    }
  }

  void emit(const Json& j) { *out_ << j.dump() << '\n'; }

  int dispatch() {
    const std::string& c = cfg_.command;
    if (c == "pseries") return pseries();
    if (c == "fseries") return fseries();
    if (c == "scan") return scan();
    if (c == "eigen") return eigen();
    if (c == "cycle") return cycle();
    if (c == "verify-claims") return verify();
    if (c == "good-prime") return good_prime();
    if (c == "census") return census();
    if (c == "section4") return section4();
    if (c == "corollary") return corollary();
    if (c == "spot-checks") return spot_checks();
    throw DomainError("unknown command " + c);
  }

 private:
  Json series_record(const std::string& kind, const FpSeries& s) {
    Json j;
    j["kind"] = kind;
    j["m"] = s.modulus();
    j["N"] = s.precision();
    auto pts = fingerprint_points(1);
    j["fingerprint_point"] = pts[0];
    j["fingerprint"] = fingerprint(s, pts[0]);
    if (s.precision() <= kInlineCoefficients) j["coefficients"] = s.coeffs();
    if (!cfg_.fps.empty()) {
      write_fps(cfg_.fps, s);
      j["fps"] = cfg_.fps;
    }
    return j;
  }

  int pseries() {
    std::size_t N = cfg_.N ? cfg_.N : 100;
    const PartitionTable& p = store_.table(cfg_.m, N);
    emit(series_record("pseries", FpSeries(cfg_.m, std::vector<Residue>(p.values().begin(), p.values().begin() + N))));
    return 0;
  }

  int fseries() {
    std::size_t N = cfg_.N ? cfg_.N : 100;
    Route route = parse_route(cfg_.route);
    std::optional<FpSeries> s;
    std::optional<std::filesystem::path> path;
    if (auto root = cache_root(cfg_)) {
      std::filesystem::create_directories(*root);
      path = *root / ("f_m" + std::to_string(cfg_.m) + "_k" + std::to_string(cfg_.k) + "_N" + std::to_string(N) +
                      ".fps");
      if (std::filesystem::exists(*path)) {
        try {
          FpSeries cached = read_fps(*path);
          if (cached.modulus() == cfg_.m && cached.precision() == N) s = std::move(cached);
        } catch (const FormatError&) {
        }
        if (!s) std::filesystem::remove(*path);
      }
    }
    if (!s) {
      s = f_series(cfg_.m, cfg_.k, N, route, store_);
      if (path) write_fps(*path, *s);
    }
    Json j = series_record("fseries", *s);
    j["k"] = cfg_.k;
    j["route"] = to_string(route);
    emit(j);
    return 0;
  }

  int scan() {
    Mode mode = parse_mode(cfg_.mode);
    ScanReport r = scan_f_series(cfg_.m, cfg_.k, cfg_.lmin, cfg_.lmax, mode, cfg_.trunc, store_);
    for (const auto& e : r.entries) {
      Json j{{"kind", "hecke"}};
      j.update(report::to_json(e));
      emit(j);
    }
    Json s;
    s["kind"] = "scan_summary";
    s["m"] = r.m;
    s["k"] = r.k;
    s["lmin"] = cfg_.lmin;
    s["lmax"] = cfg_.lmax;
    s["mode"] = to_string(r.mode);
    s["bound"] = r.bound;
    s["degenerate"] = r.degenerate;
    s["source"] = r.source;
    s["tested"] = r.entries.size();
    s["hits"] = r.hits();
    emit(s);
    if (cfg_.derive) {
      for (std::uint64_t ell : r.hits()) {
        for (const auto& c : derive_progression(r.m, r.k, ell, to_string(r.mode), r.bound)) emit(report::to_json(c));
      }
    }
    return 0;
  }

  int eigen() {
    Mode mode = parse_mode(cfg_.mode);
    std::uint64_t lmax_coprime = 0;
    for (std::uint64_t ell : primes_in(cfg_.lmin, cfg_.lmax))
      if ((576 * std::uint64_t{cfg_.m}) % ell != 0) lmax_coprime = ell;
    HalfIntegralForm probe = standard_form(cfg_.m, cfg_.k, FpSeries(cfg_.m, 1));
    std::uint64_t bound = mode == Mode::Rigorous ? sturm_bound(probe.weight_num, probe.level) : cfg_.trunc;
    std::size_t P = hecke_input_precision(std::max<std::uint64_t>(lmax_coprime, 1), bound);
    FpSeries f = f_series(cfg_.m, cfg_.k, P, Route::Definition, store_);
    auto entries = eigen_scan(standard_form(cfg_.m, cfg_.k, std::move(f)), cfg_.k, cfg_.lmin, cfg_.lmax, mode,
                              cfg_.trunc);
    for (const auto& e : entries) {
      Json j{{"kind", "eigen"}};
      j.update(report::to_json(e.result));
      j["m"] = cfg_.m;
      j["claims"] = e.claims.size();
      emit(j);
      for (const auto& c : e.claims) emit(report::to_json(c));
    }
    return 0;
  }

  int cycle() {
    std::uint64_t k_max = cfg_.k_max ? cfg_.k_max : 1000;
    CycleReport r = detect_cycle(cfg_.m, cfg_.N, k_max, store_);
    Json j{{"kind", "cycle"}};
    j.update(report::to_json(r));
    emit(j);
    return r.found ? 0 : 1;
  }

  int verify() {
    std::ifstream in(cfg_.claims_file);
    if (!in) throw Error("cannot read claims file " + cfg_.claims_file);
    std::vector<CongruenceClaim> claims;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw FormatError("claims line " + std::to_string(lineno) + ": " + e.what());
      }
      // scan output mixes claim lines with evidence; keep only claims
      if (j.contains("kind") && !j.contains("A")) continue;
      claims.push_back(report::claim_from_json(j));
    }
    std::uint64_t n_max = cfg_.n_max.value_or(20);
    bool failed = false;
    for (const auto& r : verify_claims(claims, n_max, store_)) {
      Json j{{"kind", "claim"}};
      j.update(report::to_json(r));
      emit(j);
      failed |= r.status == VerifyStatus::Fail;
    }
    return failed ? 1 : 0;
  }

  int good_prime() {
    std::uint64_t t_max = cfg_.t_max.value_or(default_t_max(cfg_.m, store_.budget()));
    GoodPrimeCertificate c = good_prime_search(cfg_.m, t_max, store_);
    bool ok = reverify_certificate(c);
    Json j{{"kind", "good_prime"}};
    j.update(report::to_json(c));
    j["t_max"] = t_max;
    j["reverified"] = ok;
    emit(j);
    return ok ? 0 : 1;
  }

  int census() {
    CensusReport r = residue_census(cfg_.m, cfg_.X, store_);
    Json j{{"kind", "census"}};
    j.update(report::to_json(r));
    emit(j);
    return r.progression_bound_holds.value_or(true) ? 0 : 1;
  }

  int section4() {
    auto ev = verify_section4(cfg_.m, store_);
    bool ok = true;
    for (const auto& e : ev) {
      Json j{{"kind", "identity"}};
      j.update(report::to_json(e));
      emit(j);
      ok &= e.holds;
    }
    emit(Json{{"kind", "identity_summary"}, {"m", cfg_.m}, {"checked", ev.size()}, {"result", ok ? "PASS" : "FAIL"}});
    return ok ? 0 : 1;
  }

  int corollary() {
    unsigned k_max = cfg_.k_max ? static_cast<unsigned>(cfg_.k_max) : (cfg_.which == 12 ? 0 : 1);
    std::size_t n_max = cfg_.n_max.value_or(30);
    auto ev = corollary_check(cfg_.which, k_max, n_max, store_);
    std::size_t pass = 0, skipped = 0, fail = 0;
    for (const auto& e : ev) {
      Json j{{"kind", "corollary"}};
      j.update(report::to_json(e));
      emit(j);
      if (e.skipped) ++skipped;
      else if (e.holds) ++pass;
      else ++fail;
    }
    emit(Json{{"kind", "corollary_summary"},
              {"corollary", cfg_.which},
              {"passed", pass},
              {"failed", fail},
              {"skipped", skipped},
              {"result", fail == 0 ? "PASS" : "FAIL"}});
    return fail == 0 ? 0 : 1;
  }

  int spot_checks() {
    unsigned k_max = cfg_.k_max ? static_cast<unsigned>(cfg_.k_max) : 2;
    bool ok = true;
    for (const auto& s : mod23_spot_checks(store_, k_max)) {
      Json j{{"kind", "spot_check"}};
      j.update(report::to_json(s));
      emit(j);
      ok &= s.skipped || s.holds;
    }
    return ok ? 0 : 1;
  }

  const JobConfig& cfg_;
  PartitionStore store_;
  std::ofstream file_;
  std::ostream* out_;
};

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Finite-field q-series engine for partition congruences", "qseries"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "OpenMP thread count (0: default)");
  app.add_option("--cache-dir", cfg.cache_dir, "series cache directory (default: $QSERIES_CACHE)");
  app.add_option("--out", cfg.out, "write JSON lines to this file");
  app.add_option("--budget", cfg.budget, "partition-table length ceiling");

  auto add_m = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--m", cfg.m, "prime modulus");
    if (required) o->required();
  };

  auto* pseries = app.add_subcommand("pseries", "partition series p(n) mod m");
  add_m(pseries);
  pseries->add_option("--N", cfg.N, "precision (default 100)");
  pseries->add_option("--fps", cfg.fps, "also write the series as .fps");

  auto* fseries = app.add_subcommand("fseries", "F(m,k) by one construction route");
  add_m(fseries);
  fseries->add_option("--k", cfg.k, "k >= 1");
  fseries->add_option("--N", cfg.N, "precision (default 100)");
  fseries->add_option("--route", cfg.route, "definition | eta | iterate")
      ->check(CLI::IsMember({"definition", "eta", "iterate"}));
  fseries->add_option("--fps", cfg.fps, "also write the series as .fps");

  auto* scan = app.add_subcommand("scan", "annihilating primes l with F(m,k) | T(l^2) = 0");
  add_m(scan);
  scan->add_option("--k", cfg.k, "k >= 1");
  scan->add_option("--lmin", cfg.lmin, "smallest l");
  scan->add_option("--lmax", cfg.lmax, "largest l");
  scan->add_option("--mode", cfg.mode, "rigorous | truncated")->check(CLI::IsMember({"rigorous", "truncated"}));
  scan->add_option("--trunc", cfg.trunc, "checked bound in truncated mode");
  scan->add_flag("--derive", cfg.derive, "also emit the congruence claims of every hit");

  auto* eigen = app.add_subcommand("eigen", "Hecke eigenvalues of F(m,k) and the claims they imply");
  add_m(eigen);
  eigen->add_option("--k", cfg.k, "k >= 1");
  eigen->add_option("--lmin", cfg.lmin, "smallest l");
  eigen->add_option("--lmax", cfg.lmax, "largest l");
  eigen->add_option("--mode", cfg.mode, "rigorous | truncated")->check(CLI::IsMember({"rigorous", "truncated"}));
  eigen->add_option("--trunc", cfg.trunc, "checked bound in truncated mode");

  auto* cycle = app.add_subcommand("cycle", "preperiod and period of k -> F(m,k)");
  add_m(cycle);
  cycle->add_option("--kmax", cfg.k_max, "largest k examined (default 1000)");
  cycle->add_option("--N", cfg.N, "truncation (default: Sturm bound if affordable, else 2000)");

  auto* verify = app.add_subcommand("verify-claims", "check claims (JSON lines) against p(n)");
  verify->add_option("file", cfg.claims_file, "claims file")->required();
  verify->add_option("--nmax", cfg.n_max, "largest n (default 20)");

  auto* good = app.add_subcommand("good-prime", "witnesses p((m n_r + 1)/24) = r for every r");
  add_m(good);
  good->add_option("--tmax", cfg.t_max, "largest t in n = s + 24t (default: budget)");

  auto* census = app.add_subcommand("census", "counts of p(n) mod m over n <= X");
  add_m(census);
  census->add_option("--X", cfg.X, "largest n");

  auto* section4 = app.add_subcommand("section4", "the explicit identities for m <= 23");
  add_m(section4);

  auto* corollary = app.add_subcommand("corollary", "partition congruences from the explicit cycles");
  corollary->add_option("--which", cfg.which, "9, 10, 11 or 12")->required()->check(CLI::Range(9, 12));
  corollary->add_option("--kmax", cfg.k_max, "largest k");
  corollary->add_option("--nmax", cfg.n_max, "largest n (default 30)");

  auto* spot = app.add_subcommand("spot-checks", "values of p at the mod 23 sequences");
  spot->add_option("--kmax", cfg.k_max, "largest k (default 2)");

  std::vector<const char*> argv{"qseries"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    Job job(cfg, out);
    return job.dispatch();
  } catch (const Error& e) {
    error_json(err, e.kind(), e.what());
  } catch (const std::exception& e) {
    error_json(err, "internal", e.what());
  }
  return 2;
}

}  // namespace qseries::cli
