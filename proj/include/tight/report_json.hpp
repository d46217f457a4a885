#pragma once

#include <json.hpp>

#include "tight/classify.hpp"
#include "tight/universality.hpp"

// JSON encodings of the report data models.  ordered_json keeps field order
// stable so identical runs emit byte-identical reports.

namespace tight {

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const NewnessReport& r);
NewnessReport newness_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j);

std::string verdict_status_name(VerdictStatus s);
VerdictStatus verdict_status_from_name(const std::string& name);

} // namespace tight
