#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/front.hpp"

namespace curvelab {

/// A parsed curve file: the curve plus an optional display name.
struct CurveSpec {
  Curve curve;
  std::string name;
};

/// Parses the JSON curve format. Support curves:
///
///     {"kind":"support","constant":40,"cos":{"3":3},"sin":{"2":-1},"rotation":1}
///
/// with `half_harmonics: true` making every harmonic key count in halves
/// (period 4π). Parametric curves:
///
///     {"kind":"parametric","x":{"poly":[0,0,1]},"y":{"poly":[0,0,0,1]},
///      "domain":[-1,1],"closed":false}
///
/// where each coordinate may also carry "cos"/"sin" tables keyed by angular
/// frequency. Angles and domain ends accept strings such as "pi/6" or "2*pi".
/// Unknown keys and inconsistent combinations raise SpecError with the JSON
/// path of the offending field.
CurveSpec parse_curve_spec(std::string_view json_text);
CurveSpec load_curve_spec(const std::string& path);

/// Canonical JSON for a curve; parse_curve_spec inverts it exactly.
std::string serialize_curve_spec(const CurveSpec& spec);

/// "pi/6", "-2*pi", "3pi/4", "0.25", "1e-3", "pi". Throws SpecError.
double parse_angle(std::string_view text, const std::string& field = "");

/// Locale-independent, `digits` significant digits, shortest form; −0 prints
/// as 0.
std::string format_number(double v, int digits = 12);
/// Fixed-point with `decimals` places; −0 prints as 0.
std::string format_fixed(double v, int decimals);

/// Writes the whole file or throws IoError.
void write_text_file(const std::string& path, const std::string& content);

/// Wavefront OBJ: `v α x y`, `vn`, 1-based `f v//vn` triangles in object
/// "front", then Σ as `l` elements in object "sigma".
std::string mesh_obj(const FrontMesh& mesh);

/// Columns theta,alpha,x,y,kind; one row per classification mark.
std::string sigma_csv(const std::vector<SingularFrontPoint>& marks, const SupportCurve& curve);

}  // namespace curvelab
