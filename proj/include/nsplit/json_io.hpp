#pragma once

#include <json.hpp>

#include "nsplit/multigraph.hpp"
#include "nsplit/necklace.hpp"
#include "nsplit/separability.hpp"
#include "nsplit/splitter.hpp"

namespace nsplit {

// Exact coordinates serialize as plain integers when integral, "p/q"
// strings otherwise; both forms parse back.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json necklace_to_json(const Necklace& nk);
Necklace necklace_from_json(const nlohmann::json& j);

nlohmann::json splitting_to_json(const Splitting& s);
/// Accepts a splits document ({"splits": [...]}) or a full solve output
/// document (the splitting nested under "splitting").
Splitting splitting_from_json(const nlohmann::json& j);

nlohmann::json balance_report_to_json(const BalanceReport& report);
nlohmann::json verdict_to_json(const SeparabilityVerdict& verdict);
nlohmann::json certificate_to_json(const NotSeparableCertificate& certificate);
nlohmann::json multigraph_to_json(const Multigraph& g);

}  // namespace nsplit
