#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/function_field.hpp"
#include "agdmm/simulator.hpp"

// JSON and CSV formats. Readers are strict: unknown or missing keys raise
// ConfigInvalid.
namespace agdmm::io {

using Json = nlohmann::ordered_json;

/// {"p": int, "e": int, "modulus": [int]}; "modulus" is optional on input.
Json to_json(const Field& field);
Field field_from_json(const Json& j);

/// {"kind", "field", "m_or_u", "num_roots", "den_roots"}; the last three are
/// optional for "rational".
Json to_json(const CurveSpec& spec);
CurveSpec curve_from_json(const Json& j);

/// id,class,x_code,y_code with empty cells for missing coordinates.
std::string places_to_csv(const std::vector<Place>& places);

Json matrix_codes(const Matrix& m);
Matrix matrix_from_json(const Field& field, const Json& j);

/// {"place": id, "f": [[codes]], "g": [[codes]]}
Json to_json(const EncodedTask& task);
EncodedTask task_from_json(const Field& field, const Json& j);
/// {"place": id, "h": [[codes]]}
Json to_json(const WorkerResult& result);
WorkerResult result_from_json(const Field& field, const Json& j);

/// Simulation config. "curve" is either a curve object or a preset name.
/// Optional "sweep": {"k_min", "k_max", "trials"}.
struct SweepSpec {
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::size_t trials = 10;
};
struct ConfigFile {
  SimConfig sim;
  std::optional<SweepSpec> sweep;
};
ConfigFile config_from_json(const Json& j);
Json to_json(const SimConfig& cfg);

Json to_json(const SimReport& report, bool include_timing = true);
std::string sim_report_csv_header();
std::string sim_report_csv_row(const SimReport& report);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
Json to_json(const std::vector<SweepRow>& rows);

/// {"curve": curve or preset, "codes": "poly" | "matdot", "m", "n"?,
///  "rational_m"?, "rational_n"?}
struct CompareSpec {
  CurveSpec curve;
  bool polynomial = true;
  std::uint32_t m = 1, n = 1;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> rational_mn;
};
CompareSpec compare_from_json(const Json& j);
Json to_json(const BaselineComparison& cmp);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace agdmm::io
