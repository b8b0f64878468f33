#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cburgers/blowup.hpp"
#include "cburgers/burgers.hpp"
#include "cburgers/partitions.hpp"
#include "cburgers/regularity.hpp"
#include "cburgers/series.hpp"
#include "cburgers/spectral.hpp"

namespace cburgers {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

// FNV-1a over the canonical (sorted-key) dump; identical configs hash alike.
std::string config_hash(const Json& config);

// Rename-into-place so readers never observe a partial file.
void write_text_atomic(const std::string& path, const std::string& content);
void write_json_atomic(const std::string& path, const Json& j);

// Adds {tool_version, config_hash} to an output document.
void stamp_output(Json& j, const std::string& hash);

// Exact tables serialize numerators/denominators as decimal strings; float
// series serialize coefficients as full-precision decimal strings.
Json table_to_json(const CoeffTable& table);
Json table_to_json(const ExpSeriesQ& series);
Json table_to_json(const ExpSeriesF& series);
CoeffTable coeff_table_from_json(const Json& j);
ExpSeriesQ exp_series_from_json(const Json& j);

// Initial data: JSON array of {k, re, im}; re/im as "p/q" strings (exact) or
// numbers (converted via their decimal text is not available, so numbers go
// through binary double — prefer strings for exactness).
std::vector<GaussianRational> init_from_json(const Json& j);
std::vector<GaussianRational> load_init_file(const std::string& path);

Json certificate_to_json(const BlowupCertificate& cert);
Json sign_pattern_to_json(const SignPatternReport& rep);
Json geometric_report_to_json(const GeometricBoundReport& rep);
Json coeff_bound_report_to_json(const CoeffBoundReport& rep);
Json envelope_report_to_json(const EnvelopeReport& rep);
Json trajectory_summary_json(const Trajectory& traj);

std::string trajectory_to_csv(const Trajectory& traj);
std::string partitions_to_csv(const HardyRamanujanReport& rep);
std::string hs_decay_csv(const std::vector<double>& t_grid,
                         const std::vector<std::vector<double>>& norms,
                         const std::vector<double>& s_values);

}  // namespace cburgers
