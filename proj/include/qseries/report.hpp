#pragma once

#include <string>

#include <json.hpp>

#include "qseries/congruences.hpp"
#include "qseries/cycles.hpp"
#include "qseries/hecke.hpp"
#include "qseries/newman.hpp"

// JSON records, one object per reported fact. Keys keep insertion order so a
// rerun prints byte-identical lines.
namespace qseries::report {

using Json = nlohmann::ordered_json;

// "11/2" for odd weight_num, "12" for even.
std::string weight_text(unsigned weight_num);

Json to_json(const ZeroCertificate& c, std::uint64_t ell);
Json to_json(const HeckeEvidence& e);
Json to_json(const ScanEntry& e);
Json to_json(const EigenResult& r);

Json to_json(const CongruenceClaim& c);
CongruenceClaim claim_from_json(const Json& j);
Json to_json(const ClaimReport& r);

Json to_json(const GoodPrimeCertificate& c);
Json to_json(const CensusReport& r);

Json to_json(const CycleReport& r);
Json to_json(const IdentityEvidence& e);
Json to_json(const CorollaryEvidence& e);
Json to_json(const SpotCheck& s);

}  // namespace qseries::report
