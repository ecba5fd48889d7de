#pragma once

#include "powersub/catalog.hpp"
#include "powersub/power.hpp"
#include "powersub/theorems.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace powersub {

std::string render_text(const AnalysisReport& r);
/// Fields: group, order, exponent, cyclic, subgroups,
/// power_subgroups [{exponent, order}], k, non_power_orders.
nlohmann::json to_json(const AnalysisReport& r);
/// One row per subgroup record.
std::string render_csv(const AnalysisReport& r);

std::string render_text(const SpectrumReport& r, std::size_t k_max);
nlohmann::json to_json(const SpectrumReport& r, std::size_t k_max);

std::string render_checks(const std::vector<CheckResult>& results, bool verbose);

} // namespace powersub
