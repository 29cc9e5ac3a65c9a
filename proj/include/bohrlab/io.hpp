#pragma once

// JSON, CSV and text renderings of series, bound reports and tables.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohrlab/bounds.hpp"
#include "bohrlab/oracle.hpp"
#include "bohrlab/series.hpp"
#include "bohrlab/solver.hpp"
#include "bohrlab/weights.hpp"

namespace bohrlab::io {

/// {"vanish_order": m, "coeffs": [[re, im], ...], "tail": {"B": .., "q": ..} | null}
nlohmann::json to_json(const PowerSeries& f);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const AreaBound& b);
nlohmann::json to_json(const MajorantBound& b);
nlohmann::json to_json(const RadiusWithCondition& r);
nlohmann::json to_json(const AreaBohrConstants& c);
nlohmann::json to_json(const RadiusRow& row);
nlohmann::json to_json(const FuzzReport& r);
nlohmann::json to_json(const AreaSearchResult& r);

/// 17 significant digits.
std::string full(double x);

/// Truncates toward zero at `places` decimals, e.g. 0.2865262 -> "0.28652".
std::string truncate_decimals(double x, int places = 5);

/// Header "a,old_lower,s_floor,new_lower,upper"; empty fields outside the
/// new-bound regime.
std::string table_csv(std::span<const RadiusRow> rows);

/// Text table, entries truncated at 5 decimals.
std::string render_table(std::span<const RadiusRow> rows);

}  // namespace bohrlab::io
