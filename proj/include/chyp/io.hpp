#pragma once

// JSON and CSV forms of the kernel's objects. Complex numbers are [re, im]
// pairs; matrices are nine row-major pairs (a nested 3x3 layout is also
// accepted on input).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chyp/limitset.hpp"

namespace chyp::io {

using nlohmann::json;

/// "%.17g"; negative zero prints as 0, non-finite values as nan / inf / -inf.
std::string format_double(double x);

Complex parse_complex(const json& j);
json to_json(Complex z);

CVec3 parse_vec3(const json& j);
json to_json(const CVec3& v);

CMat3 parse_matrix(const json& j);
json to_json(const CMat3& m);

/// form1 | form2 | ball | siegel.
Form parse_form(const std::string& name);

/// {"form": ..., "generators": [matrix, ...], "labels": [...]}. The form
/// defaults to form2. Unitarity is not checked here.
GroupPresentation parse_group(const json& j);

/// {"kind":"heis-samples","points":[[re,im,v],...]} or
/// {"kind":"builtin","name":...}.
CurveLift parse_curve_spec(const json& j);

/// {"kind":"chain","polar":[...],"form":...} (a null polar point gives a
/// degenerate chain), {"kind":"rcircle-inf","base":[re,im,v],"theta":x} or
/// {"kind":"rcircle-fin","matrix":[...]}.
Chain parse_chain(const json& j);
json to_json(const Chain& c);
RCircleSpec parse_rcircle(const json& j);

json to_json(const HeisenbergPoint& h);
json to_json(const ChainFit& f);
json to_json(const LineFit& f);
json to_json(const CurveClassification& c);
json to_json(const LimitClassification& c);

inline constexpr const char* kCsvHeader = "zeta_re,zeta_im,v";

/// One row; the point at infinity is the literal `inf,,`.
std::string csv_row(const HeisenbergPoint& h);
void write_csv(std::ostream& out, const std::vector<HeisenbergPoint>& points);

struct CsvRow {
  std::size_t line = 0;
  std::optional<HeisenbergPoint> point;
  std::string error;
};

/// Parses every row, keeping a per-row error message instead of aborting.
/// A leading header row is skipped; blank lines are ignored.
std::vector<CsvRow> read_csv(std::istream& in);

/// Parse a whole text as JSON, with the message naming `what` on failure.
json parse_json_text(const std::string& text, const std::string& what);

}  // namespace chyp::io
