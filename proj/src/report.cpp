#include "qseries/report.hpp"

#include "qseries/error.hpp"

namespace qseries::report {

std::string weight_text(unsigned weight_num) {
  if (weight_num % 2 == 0) return std::to_string(weight_num / 2);
  return std::to_string(weight_num) + "/2";
}

Json to_json(const ZeroCertificate& c, std::uint64_t ell) {
  Json j;
  j["operator"] = "T(" + std::to_string(ell) + "^2)";
  j["ell"] = ell;
  j["mode"] = to_string(c.mode);
  j["bound_checked"] = c.bound_checked;
  j["result"] = c.result;
  if (c.first_nonzero_degree) j["first_nonzero_degree"] = *c.first_nonzero_degree;
  return j;
}

Json to_json(const HeckeEvidence& e) {
  Json j = to_json(e.certificate, e.ell);
  j["m"] = e.m;
  j["weight"] = weight_text(e.weight_num);
  j["level"] = e.level;
  return j;
}

Json to_json(const ScanEntry& e) {
  Json j = to_json(e.evidence);
  j["residue_class"] = e.residue_class;
  j["serre_candidate"] = e.serre_candidate;
  return j;
}

Json to_json(const EigenResult& r) {
  Json j;
  j["ell"] = r.ell;
  j["mode"] = to_string(r.mode);
  j["bound_checked"] = r.bound_checked;
  if (r.eigenvalue) j["eigenvalue"] = *r.eigenvalue;
  else j["eigenvalue"] = nullptr;
  if (r.mismatch_degree) j["mismatch_degree"] = *r.mismatch_degree;
  j["sign_condition"] = r.sign_condition;
  return j;
}

Json to_json(const CongruenceClaim& c) {
  Json j;
  j["m"] = c.m;
  j["A"] = c.A;
  j["B"] = c.B;
  j["target"] = c.target;
  j["side_condition"] = c.side_condition.text();
  j["provenance"] = {{"ell", c.provenance.ell},
                     {"k", c.provenance.k},
                     {"mode", c.provenance.mode},
                     {"bound", c.provenance.bound}};
  if (c.verified_to) j["verified_to"] = *c.verified_to;
  else j["verified_to"] = nullptr;
  return j;
}

CongruenceClaim claim_from_json(const Json& j) {
  try {
    CongruenceClaim c;
    c.m = j.at("m").get<std::uint32_t>();
    c.A = j.at("A").get<std::uint64_t>();
    c.B = j.at("B").get<std::uint64_t>();
    c.target = j.at("target").get<Residue>();
    c.side_condition = SideCondition::parse(j.value("side_condition", std::string("none")));
    if (j.contains("provenance")) {
      const Json& p = j.at("provenance");
      c.provenance.ell = p.value("ell", std::uint64_t{0});
      c.provenance.k = p.value("k", 0u);
      c.provenance.mode = p.value("mode", std::string("EXTERNAL"));
      c.provenance.bound = p.value("bound", std::uint64_t{0});
    } else {
      c.provenance.mode = "EXTERNAL";
    }
    if (j.contains("verified_to") && !j.at("verified_to").is_null())
      c.verified_to = j.at("verified_to").get<std::uint64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad claim record: ") + e.what());
  }
}

Json to_json(const ClaimReport& r) {
  Json j = to_json(r.claim);
  j["status"] = to_string(r.status);
  j["n_max"] = r.n_max;
  j["checked"] = r.checked;
  if (r.counterexample) {
    j["counterexample"] = {{"n", *r.counterexample},
                           {"argument", r.claim.A * *r.counterexample + r.claim.B},
                           {"value", r.value}};
  }
  return j;
}

Json to_json(const GoodPrimeCertificate& c) {
  Json j;
  j["m"] = c.m;
  Json w = Json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"r", x.r}, {"n_r", x.n_r}, {"partition_argument", x.partition_argument}, {"value", x.value}});
  j["witnesses"] = std::move(w);
  j["search_bound"] = c.search_bound;
  j["complete"] = c.complete;
  j["missing"] = c.missing;
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["m"] = r.m;
  j["X"] = r.X;
  j["counts"] = r.counts;
  if (r.progression_count) {
    j["progression_count"] = *r.progression_count;
    j["progression_bound_holds"] = *r.progression_bound_holds;
  }
  return j;
}

Json to_json(const CycleReport& r) {
  Json j;
  j["m"] = r.m;
  j["found"] = r.found;
  j["k_start"] = 1;
  j["preperiod"] = r.preperiod;
  j["period"] = r.period;
  j["bound"] = r.bound;
  j["route"] = r.route;
  j["truncation"] = r.truncation;
  j["mode"] = to_string(r.mode);
  j["rigorous_truncation"] = r.rigorous_truncation;
  j["dimension"] = r.dimension;
  j["relation"] = r.relation;
  j["fingerprint_prime"] = "2^61-1";
  j["fingerprint_points"] = r.fingerprint_points;
  Json f = Json::array();
  for (auto [k, d] : r.fingerprints) f.push_back({{"k", k}, {"digest", d}});
  j["fingerprints"] = std::move(f);
  j["direct_confirmations"] = r.direct_confirmations;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const IdentityEvidence& e) {
  Json j;
  j["identity"] = e.identity;
  j["method"] = e.method;
  j["m"] = e.m;
  j["weight"] = weight_text(e.weight_num);
  j["level"] = e.level;
  j["bound"] = e.bound;
  j["mode"] = to_string(e.mode);
  j["result"] = e.holds ? "PASS" : "FAIL";
  if (e.first_disagreement) j["first_disagreement"] = *e.first_disagreement;
  return j;
}

Json to_json(const CorollaryEvidence& e) {
  Json j;
  j["corollary"] = e.corollary;
  j["m"] = e.m;
  j["family"] = e.family;
  j["k"] = e.k;
  j["n"] = e.n;
  j["argument"] = e.argument;
  if (e.skipped) {
    j["result"] = "SKIPPED";
    return j;
  }
  j["lhs"] = e.lhs;
  j["rhs"] = e.rhs;
  j["result"] = e.holds ? "PASS" : "FAIL";
  return j;
}

Json to_json(const SpotCheck& s) {
  Json j;
  j["check"] = s.label;
  j["argument"] = s.argument;
  j["expected"] = s.expected;
  if (s.skipped) {
    j["result"] = "SKIPPED";
    return j;
  }
  j["value"] = s.value;
  j["result"] = s.holds ? "PASS" : "FAIL";
  return j;
}

}  // namespace qseries::report
