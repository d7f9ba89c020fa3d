#include <gtest/gtest.h>

#include <algorithm>

#include "qseries/arith.hpp"
#include "qseries/congruences.hpp"
#include "qseries/cycles.hpp"
#include "qseries/error.hpp"
#include "qseries/forms.hpp"
#include "qseries/report.hpp"

using namespace qseries;

namespace {

PartitionStore& shared_store() {
  static PartitionStore store;
  return store;
}

CongruenceClaim plain(std::uint32_t m, std::uint64_t A, std::uint64_t B) {
  CongruenceClaim c;
  c.m = m;
  c.A = A;
  c.B = B;
  return c;
}

}  // namespace

TEST(Congruences, DerivesFiftyNineFamily) {
  auto claims = derive_progression(13, 1, 59);
  ASSERT_EQ(claims.size(), 59u);
  const auto& master = claims.front();
  EXPECT_EQ(master.A, 13u * 59 * 59 * 59);
  EXPECT_EQ(master.B, 111247u);
  EXPECT_EQ(master.side_condition.text(), "gcd(24n + 1, 59) = 1");
  EXPECT_EQ(24 * 111247 - 1, 13 * 59 * 59 * 59);

  const std::uint64_t A4 = 13ull * 59 * 59 * 59 * 59;
  auto hit = std::find_if(claims.begin(), claims.end(),
                          [&](const CongruenceClaim& c) { return c.A == A4 && c.B == 111247; });
  ASSERT_NE(hit, claims.end());
  EXPECT_TRUE(hit->side_condition.is_none());
  EXPECT_EQ(hit->provenance.mode, "RIGOROUS");
  EXPECT_EQ(hit->provenance.ell, 59u);
  for (const auto& c : claims) {
    EXPECT_EQ((24 * c.B) % 13, 1u);
    EXPECT_EQ(c.target, 0);
  }
  // the per-class progressions tile the admissible residues of the master one
  std::vector<std::uint64_t> covered;
  for (std::size_t i = 1; i < claims.size(); ++i) {
    ASSERT_EQ((claims[i].B - master.B) % master.A, 0u);
    covered.push_back((claims[i].B - master.B) / master.A % 59);
  }
  std::sort(covered.begin(), covered.end());
  std::vector<std::uint64_t> admissible;
  for (std::uint64_t n = 0; n < 59; ++n)
    if (master.side_condition.admits(n)) admissible.push_back(n);
  EXPECT_EQ(covered, admissible);

  EXPECT_THROW(derive_progression(13, 1, 13), DomainError);
  EXPECT_THROW(derive_progression(13, 1, 3), DomainError);
  EXPECT_THROW(derive_progression(13, 0, 59), DomainError);
}

TEST(Congruences, DegenerateFamilies) {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> expected{{5, 4}, {7, 5}, {11, 6}};
  for (auto [m, b] : expected) {
    auto claims = derive_progression(m, 1, 59);
    EXPECT_EQ(claims.front().A, m);
    EXPECT_EQ(claims.front().B, b);
    EXPECT_TRUE(claims.front().side_condition.is_none());
  }
}

TEST(Congruences, VerifiesKnownAndFalseClaims) {
  auto& store = shared_store();
  auto r = verify_claim(plain(5, 5, 4), 10000, store);
  EXPECT_EQ(r.status, VerifyStatus::Pass);
  EXPECT_EQ(r.verified_to, 10000u);
  EXPECT_EQ(r.checked, 10001u);

  auto bad = verify_claim(plain(7, 7, 1), 100, store);
  EXPECT_EQ(bad.status, VerifyStatus::Fail);
  EXPECT_EQ(bad.counterexample, 0u);
  EXPECT_EQ(bad.value, 1);
  EXPECT_FALSE(bad.verified_to.has_value());

  auto ext = plain(13, 11 * 11 * 11 * 13, 237);
  ext.provenance.mode = "EXTERNAL";
  auto er = verify_claim(ext, 100, store);
  EXPECT_EQ(er.status, VerifyStatus::Pass);
  EXPECT_EQ(er.verified_to, 100u);

  auto shifted = plain(13, 17303, 238);
  EXPECT_EQ(verify_claim(shifted, 100, store).status, VerifyStatus::Fail);
}

TEST(Congruences, FiftyNineClaimAtDeskScale) {
  auto& store = shared_store();
  auto claims = derive_progression(13, 1, 59);
  const std::uint64_t A4 = 13ull * 59 * 59 * 59 * 59;
  auto c = *std::find_if(claims.begin(), claims.end(),
                         [&](const CongruenceClaim& x) { return x.A == A4 && x.B == 111247; });
  auto r = verify_claim(c, 20, store);
  EXPECT_EQ(r.status, VerifyStatus::Partial);
  EXPECT_EQ(r.verified_to, 0u);
  EXPECT_EQ(r.checked, 1u);
  EXPECT_EQ(store.table(13, 111248).at(111247), 0);

  // the master progression reaches several admissible n within the budget
  auto master = verify_claim(claims.front(), 20, store);
  EXPECT_NE(master.status, VerifyStatus::Fail);
  EXPECT_GE(master.checked, 3u);

  // reruns are independent of how far the table has grown
  store.table(13, store.budget());
  auto again = verify_claim(c, 20, store);
  EXPECT_EQ(again.status, r.status);
  EXPECT_EQ(again.verified_to, r.verified_to);
}

TEST(Congruences, BatchMatchesSingle) {
  auto& store = shared_store();
  std::vector<CongruenceClaim> claims{plain(5, 5, 4), plain(7, 7, 5), plain(11, 11, 6), plain(7, 7, 1)};
  auto batch = verify_claims(claims, 2000, store);
  ASSERT_EQ(batch.size(), 4u);
  for (std::size_t i = 0; i < claims.size(); ++i) {
    auto single = verify_claim(claims[i], 2000, store);
    EXPECT_EQ(batch[i].status, single.status);
    EXPECT_EQ(batch[i].verified_to, single.verified_to);
  }
  EXPECT_EQ(batch[3].status, VerifyStatus::Fail);
}

TEST(Congruences, ScanFindsFiftyNine) {
  auto& store = shared_store();
  auto r = scan_f_series(13, 1, 5, 60, Mode::Rigorous, 0, store);
  EXPECT_EQ(r.bound, 528u);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.hits(), (std::vector<std::uint64_t>{59}));
  EXPECT_TRUE(std::is_sorted(r.entries.begin(), r.entries.end(),
                             [](const ScanEntry& a, const ScanEntry& b) { return a.ell < b.ell; }));
  for (const auto& e : r.entries) {
    EXPECT_NE(e.ell, 13u);
    EXPECT_EQ(e.evidence.certificate.mode, Mode::Rigorous);
  }

  // every hit's progressions hold where the table reaches
  for (auto ell : r.hits())
    for (const auto& c : derive_progression(13, 1, ell)) EXPECT_NE(verify_claim(c, 20, store).status, VerifyStatus::Fail);
}

TEST(Congruences, HeuristicScanAgreesOnSmallRange) {
  auto& store = shared_store();
  auto h = scan_f_series(13, 1, 5, 60, Mode::Heuristic, 100, store);
  EXPECT_EQ(h.mode, Mode::Heuristic);
  EXPECT_EQ(h.hits(), (std::vector<std::uint64_t>{59}));
  auto k2 = scan_f_series(13, 2, 5, 30, Mode::Rigorous, 0, store);
  EXPECT_EQ(k2.bound, 1104u);
  EXPECT_NE(k2.source.find("eta"), std::string::npos);
}

TEST(Congruences, DegenerateScan) {
  auto& store = shared_store();
  auto r = scan_f_series(5, 1, 5, 100, Mode::Rigorous, 0, store);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.bound, general_sturm_bound(5));
  EXPECT_FALSE(r.entries.empty());
  EXPECT_EQ(r.hits().size(), r.entries.size());
}

TEST(Congruences, SideConditions) {
  SideCondition s{24, 1, 59};
  EXPECT_EQ(SideCondition::parse(s.text()), s);
  EXPECT_EQ(SideCondition::parse("none"), SideCondition::none());
  EXPECT_THROW(SideCondition::parse("gcd(n, 5)"), FormatError);
  EXPECT_TRUE(s.admits(0));
  EXPECT_FALSE(s.admits(27));  // 24 * 27 + 1 = 11 * 59
  EXPECT_FALSE(s.admits(27 + 59));
  EXPECT_TRUE(SideCondition::none().admits(27));
}

TEST(Congruences, EigenScanClaimsHold) {
  auto& store = shared_store();
  const std::uint64_t bound = sturm_bound(11, 576);
  // l = 97 is the first prime with eigenvalue +-l^4 (mod 13)
  auto f = standard_form(13, 1, scale(eta_pow_24z(11, hecke_input_precision(97, bound), 13), 11));
  auto entries = eigen_scan(f, 1, 89, 97, Mode::Rigorous);
  ASSERT_EQ(entries.back().result.ell, 97u);
  EXPECT_TRUE(entries.back().result.sign_condition);
  std::size_t claims = 0, checked = 0;
  for (const auto& e : entries) {
    if (!e.result.eigenvalue) continue;
    auto image = hecke_t_ell2(make_form(f.series.truncated(hecke_input_precision(e.result.ell, bound)), 11, 576, f.character),
                              e.result.ell);
    EXPECT_EQ(image.series.truncated(bound + 1), scale(f.series.truncated(bound + 1), *e.result.eigenvalue));
    for (const auto& c : e.claims) {
      ++claims;
      EXPECT_EQ(c.A, 13u * 97 * 97 * 97);
      auto r = verify_claim(c, 1000, store);
      EXPECT_NE(r.status, VerifyStatus::Fail) << c.A << "n + " << c.B;
      checked += r.checked;
    }
  }
  EXPECT_EQ(claims, 48u);
  EXPECT_GT(checked, 30u);
}

TEST(Congruences, JsonRoundTrip) {
  for (const auto& c : derive_progression(13, 1, 59, "HEURISTIC", 100)) {
    EXPECT_EQ(report::claim_from_json(report::to_json(c)), c);
  }
  auto j = report::to_json(plain(5, 5, 4));
  j.erase("provenance");
  EXPECT_EQ(report::claim_from_json(j).provenance.mode, "EXTERNAL");
  EXPECT_THROW(report::claim_from_json(report::Json{{"m", 13}}), FormatError);
}
