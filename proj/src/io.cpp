#include "curvelab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.contains(key)) throw SpecError(path + "/" + key, "unknown key");
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
  return j;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw SpecError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SpecError(path, "expected a finite number");
  return v;
}

/// A number, or an angle expression string.
double angle_at(const json& j, const std::string& path) {
  if (j.is_string()) return parse_angle(j.get<std::string>(), path);
  return number_at(j, path);
}

bool bool_at(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SpecError(path, "expected true or false");
  return j.get<bool>();
}

TrigPoly::Coeffs harmonic_table(const json& j, const std::string& path) {
  require_object(j, path);
  TrigPoly::Coeffs out;
  for (const auto& [key, value] : j.items()) {
    const std::string field = path + "/" + key;
    int n = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), n);
    if (ec != std::errc() || ptr != key.data() + key.size() || n <= 0)
      throw SpecError(field, "harmonic keys must be positive integers");
    out[n] = number_at(value, field);
  }
  return out;
}

std::map<double, double> frequency_table(const json& j, const std::string& path) {
  require_object(j, path);
  std::map<double, double> out;
  for (const auto& [key, value] : j.items()) {
    const std::string field = path + "/" + key;
    double w = 0.0;
    if (!parse_double(key, w) || !(w > 0.0) || !std::isfinite(w))
      throw SpecError(field, "frequency keys must be positive numbers");
    if (out.contains(w)) throw SpecError(field, "duplicate frequency");
    out[w] = number_at(value, field);
  }
  return out;
}

CoordinateMap coordinate_map(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"poly", "cos", "sin"});
  CoordinateMap m;
  if (j.contains("poly")) {
    const json& p = j["poly"];
    if (!p.is_array()) throw SpecError(path + "/poly", "expected an array of numbers");
    for (std::size_t i = 0; i < p.size(); ++i) m.poly.push_back(number_at(p[i], path + "/poly/" + std::to_string(i)));
  }
  if (j.contains("cos")) m.cos_terms = frequency_table(j["cos"], path + "/cos");
  if (j.contains("sin")) m.sin_terms = frequency_table(j["sin"], path + "/sin");
  return m;
}

bool is_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

CurveSpec parse_support(const json& j) {
  reject_unknown(j, "", {"kind", "name", "constant", "cos", "sin", "rotation", "half_harmonics"});
  const double c = j.contains("constant") ? number_at(j["constant"], "/constant") : 0.0;
  const TrigPoly::Coeffs cos = j.contains("cos") ? harmonic_table(j["cos"], "/cos") : TrigPoly::Coeffs{};
  const TrigPoly::Coeffs sin = j.contains("sin") ? harmonic_table(j["sin"], "/sin") : TrigPoly::Coeffs{};
  const bool half = j.contains("half_harmonics") && bool_at(j["half_harmonics"], "/half_harmonics");
  const double rotation = j.contains("rotation") ? number_at(j["rotation"], "/rotation") : 1.0;
  if (!(rotation > 0.0) || !is_integer(2.0 * rotation))
    throw SpecError("/rotation", "must be a positive integer or half-integer");
  if (half && is_integer(rotation))
    throw SpecError("/half_harmonics", "half harmonics describe a half-integer rotation number");
  if (!half && !is_integer(rotation))
    throw SpecError("/rotation", "a half-integer rotation number needs half_harmonics");
  if (half) {
    bool odd = false;
    for (const auto* table : {&cos, &sin})
      for (const auto& [n, v] : *table) odd = odd || (n % 2 == 1 && v != 0.0);
    if (!odd) throw SpecError("/half_harmonics", "no odd half-harmonic; the support function is 2*pi-periodic");
  }
  CurveSpec out{SupportCurve(TrigPoly(c, cos, sin, half ? 4.0 * kPi : 2.0 * kPi), rotation), ""};
  return out;
}

CurveSpec parse_parametric(const json& j) {
  reject_unknown(j, "", {"kind", "name", "x", "y", "domain", "closed"});
  for (const char* key : {"x", "y", "domain"})
    if (!j.contains(key)) throw SpecError(std::string("/") + key, "missing");
  const CoordinateMap x = coordinate_map(j["x"], "/x");
  const CoordinateMap y = coordinate_map(j["y"], "/y");
  const json& d = j["domain"];
  if (!d.is_array() || d.size() != 2) throw SpecError("/domain", "expected [t0, t1]");
  const double t0 = angle_at(d[0], "/domain/0");
  const double t1 = angle_at(d[1], "/domain/1");
  if (!(t1 > t0)) throw SpecError("/domain", "expected t0 < t1");
  const bool closed = j.contains("closed") && bool_at(j["closed"], "/closed");
  try {
    return {ParamCurve(x, y, t0, t1, closed), ""};
  } catch (const PreconditionError& e) {
    throw SpecError("/closed", e.what());
  }
}

ordered_json harmonics_json(const TrigPoly::Coeffs& c) {
  ordered_json out = ordered_json::object();
  for (const auto& [n, v] : c) out[std::to_string(n)] = v;
  return out;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

ordered_json coordinate_json(const CoordinateMap& m) {
  ordered_json out = ordered_json::object();
  if (!m.poly.empty()) out["poly"] = m.poly;
  for (const auto& [key, table] : {std::pair{"cos", &m.cos_terms}, std::pair{"sin", &m.sin_terms}}) {
    if (table->empty()) continue;
    ordered_json t = ordered_json::object();
    for (const auto& [w, v] : *table) t[shortest(w)] = v;
    out[key] = t;
  }
  return out;
}

}  // namespace

double parse_angle(std::string_view text, const std::string& field) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto fail = [&]() -> double { throw SpecError(field, "cannot read angle '" + std::string(text) + "'"); };
  if (s.empty()) return fail();

  std::string_view rest = s;
  double sign = 1.0;
  if (rest.front() == '+' || rest.front() == '-') {
    sign = rest.front() == '-' ? -1.0 : 1.0;
    rest.remove_prefix(1);
  }
  double value = 1.0;
  bool have_number = false;
  if (!rest.empty() && rest.front() != 'p') {
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc()) return fail();
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    have_number = true;
  }
  bool have_pi = false;
  if (!rest.empty() && rest.front() == '*') {
    if (!have_number) return fail();
    rest.remove_prefix(1);
    if (rest.substr(0, 2) != "pi") return fail();
  }
  if (rest.substr(0, 2) == "pi") {
    have_pi = true;
    value *= kPi;
    rest.remove_prefix(2);
  }
  if (!have_number && !have_pi) return fail();
  if (!rest.empty()) {
    if (rest.front() != '/') return fail();
    rest.remove_prefix(1);
    double den = 0.0;
    if (!parse_double(rest, den) || den == 0.0) return fail();
    value /= den;
  }
  if (!std::isfinite(value)) return fail();
  return sign * value;
}

CurveSpec parse_curve_spec(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("", "curve spec must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) throw SpecError("/kind", "expected \"support\" or \"parametric\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "support" && kind != "parametric") throw SpecError("/kind", "expected \"support\" or \"parametric\"");
  CurveSpec spec = [&] {
    try {
      return kind == "support" ? parse_support(j) : parse_parametric(j);
    } catch (const PreconditionError& e) {
      throw SpecError("", e.what());
    }
  }();
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SpecError("/name", "expected a string");
    spec.name = j["name"].get<std::string>();
  }
  return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open curve file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve_spec(ss.str());
}

std::string serialize_curve_spec(const CurveSpec& spec) {
  ordered_json j;
  if (const auto* s = std::get_if<SupportCurve>(&spec.curve)) {
    j["kind"] = "support";
    if (!spec.name.empty()) j["name"] = spec.name;
    const TrigPoly& p = s->support();
    j["constant"] = p.constant();
    j["cos"] = harmonics_json(p.cos_coeffs());
    j["sin"] = harmonics_json(p.sin_coeffs());
    j["rotation"] = s->rotation();
    if (p.period() > 3.0 * kPi) j["half_harmonics"] = true;
  } else {
    const auto& c = std::get<ParamCurve>(spec.curve);
    j["kind"] = "parametric";
    if (!spec.name.empty()) j["name"] = spec.name;
    j["x"] = coordinate_json(c.x_map());
    j["y"] = coordinate_json(c.y_map());
    j["domain"] = {c.t0(), c.t1()};
    j["closed"] = c.closed();
  }
  return j.dump(2) + "\n";
}

std::string format_number(double v, int digits) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, ptr);
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
  std::string s(buf, ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string mesh_obj(const FrontMesh& mesh) {
  std::string s;
  const auto v3 = [&](const char* tag, const Vec3& p) {
    s += tag;
    for (double c : {p.x, p.y, p.z}) s += " " + format_number(c, 10);
    s += "\n";
  };
  s += "# extended evolutoids front: vertices are (alpha, x, y)\n";
  s += "# grid " + std::to_string(mesh.n_alpha) + " x " + std::to_string(mesh.n_theta) + "\n";
  s += "o front\n";
  for (const Vec3& p : mesh.vertices) v3("v", p);
  for (const Vec3& n : mesh.normals) v3("vn", n);
  for (const auto& t : mesh.triangles) {
    s += "f";
    for (int i : t) s += " " + std::to_string(i + 1) + "//" + std::to_string(i + 1);
    s += "\n";
  }
  std::size_t next = mesh.vertices.size() + 1;
  s += "o sigma\n";
  for (const auto& line : mesh.sigma_polylines) {
    for (const Vec3& p : line) v3("v", p);
    s += "l";
    for (std::size_t i = 0; i < line.size(); ++i) s += " " + std::to_string(next + i);
    s += "\n";
    next += line.size();
  }
  if (!mesh.boundary_null_points.empty()) {
    s += "o boundary_null\n";
    for (const BoundaryNullPoint& b : mesh.boundary_null_points) v3("v", b.position);
    for (std::size_t i = 0; i < mesh.boundary_null_points.size(); ++i) s += "p " + std::to_string(next + i) + "\n";
  }
  return s;
}

std::string sigma_csv(const std::vector<SingularFrontPoint>& marks, const SupportCurve& curve) {
  std::string s = "theta,alpha,x,y,kind\n";
  for (const SingularFrontPoint& m : marks) {
    const FrontSample f = front_sample(curve, m.alpha, m.theta);
    s += format_number(m.theta) + "," + format_number(m.alpha) + "," + format_number(f.position.y) + "," +
         format_number(f.position.z) + "," + to_string(m.kind) + "\n";
  }
  return s;
}

}  // namespace curvelab
