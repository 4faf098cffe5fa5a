#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "omega_lift/kottwitz.hpp"
#include "omega_lift/tits_oracle.hpp"

namespace omega_lift {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Vec& v);
Json to_json(const intmat::IntVec& v);
Json to_json(const TitsElement& x);
Json to_json(const Witness& w);
Json to_json(const Checks& c);
Json to_json(const OmegaGroup& om);
Json to_json(const SectionCertificate& cert);
Json to_json(const LaurentMatrix& m);

std::string tsv_header();
std::string tsv_row(const SectionCertificate& cert);

}  // namespace omega_lift
