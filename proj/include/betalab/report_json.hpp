#pragma once

// JSON forms of the analysis reports. Keys are emitted sorted.

#include <json.hpp>

#include "betalab/cauchy.hpp"
#include "betalab/homogeneity.hpp"
#include "betalab/means.hpp"

namespace betalab {

nlohmann::json to_json(const FitReport& r);
nlohmann::json to_json(const DefectReport& r);
nlohmann::json to_json(const DegreeEstimate& r);
nlohmann::json to_json(const LambdaReport& r);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const CauchyDefectReport& r);
nlohmann::json to_json(const DualityBridgeReport& r);
nlohmann::json to_json(const ResidualReport& r);

}  // namespace betalab
