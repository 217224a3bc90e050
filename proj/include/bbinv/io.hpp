#pragma once

// JSON and CSV interchange. Doubles are written in shortest round-trip
// decimal form, so a matrix written and re-read is bit-identical.
//
//   matrix   {"n": int, "rows": [[[re, im], [re, im]], ...]}
//   config   {"n": int, "w": [[x, y, z], ...]}
//   polygon  {"edges": [[x, y, z], ...]} or {"vertices": [[x, y, z], ...]}

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "bbinv/certificate.hpp"
#include "bbinv/extremal.hpp"
#include "bbinv/linalg.hpp"
#include "bbinv/optimize.hpp"
#include "bbinv/oracle.hpp"
#include "bbinv/polygon.hpp"
#include "bbinv/selection.hpp"

namespace bbinv::io {

using nlohmann::json;

json matrix_to_json(const RawMatrix& rows);
inline json matrix_to_json(const OrthoMatrix& u) { return matrix_to_json(u.raw()); }
/// Structural parse only; run validate_ortho on the result. Throws Parse.
RawMatrix matrix_from_json(const json& j);

json config_to_json(const RowConfig& cfg);
/// Raw vectors; wrap with RowConfig::make. Throws Parse.
std::vector<Vec3> config_vectors_from_json(const json& j);

Polygon polygon_from_json(const json& j, bool normalize);

json selection_to_json(const Selection& sel);
Selection selection_from_json(const json& j);
json bound_report_to_json(const BoundReport& rep);
json oracle_to_json(const OracleResult& res);
/// {"minEntry": {"i", "j", "value"}, "F", "R2", "bounds": {"lower_raw", "upper"}}
json certificate_dump(const Certificate& cert, const InequalityChain& chain);
json equality_report_to_json(const EqualityReport& rep);
json corollary_to_json(const CorollaryReport& rep);
json estimate_to_json(const TightnessEstimate& est);

/// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

/// Throws Io when unreadable and Parse when malformed.
json read_json_file(const std::filesystem::path& path);
/// Throws Io.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// "i,j,lambda2" header plus one line per pair.
std::string oracle_table_csv(const OracleResult& res);
/// "n,a_est,b_est,bound,ratio" header plus one line per row.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace bbinv::io
