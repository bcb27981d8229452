#include "curvelab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "curvelab/errors.hpp"
#include "curvelab/evolutoid.hpp"
#include "curvelab/front.hpp"
#include "curvelab/gauss_bonnet.hpp"
#include "curvelab/genericity.hpp"
#include "curvelab/io.hpp"
#include "curvelab/ses.hpp"
#include "curvelab/svg.hpp"

namespace curvelab {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFooter = R"(CSV columns:
  evolutoid             param,x,y
  evolutoid --singular  param,x,y,kind,rho_s1,rho_s2   (kind: cusp|borderline)
  ses                   param,x,y,alpha
  ses --classify        param,x,y,kind,value           (kind: cusp|degenerate|inflexion|undulation)
  front --sigma         theta,alpha,x,y,kind           (kind: cuspidal_edge|swallowtail|boundary_null)
Angles are radians; "pi/6", "3pi/4" and "2*pi" are accepted.
Exit codes: 0 ok, 1 bad input, 2 numeric degeneracy (JSON on stderr), 3 residual above --tol-residual.)";

/// Numbers in JSON reports carry 12 significant digits.
double rounded(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  const std::string s = format_number(v, 12);
  double r = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), r);
  return r;
}

std::string curve_id(const CurveSpec& spec, const std::string& path) {
  return spec.name.empty() ? std::filesystem::path(path).stem().string() : spec.name;
}

const SupportCurve& require_support(const CurveSpec& spec, const std::string& command) {
  if (const auto* s = std::get_if<SupportCurve>(&spec.curve)) return *s;
  throw SpecError("kind", command + " requires a support curve");
}

Vec2 base_point(const Curve& curve, double param) {
  if (const auto* s = std::get_if<SupportCurve>(&curve)) return hedgehog_point(*s, param);
  return std::get<ParamCurve>(curve).point(param);
}

/// n + 1 parameters covering the domain, both ends included.
std::vector<double> sample_params(const Curve& curve, int n) {
  const ParamDomain d = domain_of(curve);
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = d.start + d.length() * i / n;
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) out << text;
  else write_text_file(path, text);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_angle(item, "alphas"));
  if (out.empty()) throw SpecError("alphas", "no angle given");
  return out;
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw SpecError("grid", "expected NA,NT");
  int na = 0;
  int nt = 0;
  const auto a = std::from_chars(text.data(), text.data() + comma, na);
  const auto b = std::from_chars(text.data() + comma + 1, text.data() + text.size(), nt);
  if (a.ec != std::errc{} || a.ptr != text.data() + comma || b.ec != std::errc{} ||
      b.ptr != text.data() + text.size())
    throw SpecError("grid", "expected two integers NA,NT");
  if (na < 8 || nt < 8) throw SpecError("grid", "grid sizes must be at least 8");
  return {na, nt};
}

/// Breaks the polyline wherever `point` throws a numeric degeneracy or leaves
/// the clipping disc.
template <typename PointFn>
std::vector<std::vector<Vec2>> traced(const std::vector<double>& params, PointFn&& point, Vec2 center, double radius) {
  std::vector<std::vector<Vec2>> lines(1);
  for (double t : params) {
    std::optional<Vec2> p;
    try {
      p = point(t);
    } catch (const NumericDegeneracy&) {
    }
    if (p && std::isfinite(p->x) && std::isfinite(p->y) && distance(*p, center) <= radius) {
      lines.back().push_back(*p);
    } else if (!lines.back().empty()) {
      lines.emplace_back();
    }
  }
  std::vector<std::vector<Vec2>> out;
  for (auto& l : lines)
    if (l.size() >= 2) out.push_back(std::move(l));
  return out;
}

struct ShowOptions {
  std::string curve;
  std::string what{"base"};
  std::string alphas{"pi/2"};
  std::string out;
  bool asymptotes{false};
  int samples{2048};
};

int cmd_show(const ShowOptions& o) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const Curve& curve = spec.curve;
  const std::vector<double> params = sample_params(curve, o.samples);
  const std::vector<double> alphas = parse_angle_list(o.alphas);

  PlotScene scene;
  PlotLayer base{LayerStyle::base, {}, {}};
  base.polylines.emplace_back();
  for (double t : params) base.polylines.back().push_back(base_point(curve, t));
  Vec2 lo = base.polylines.back().front();
  Vec2 hi = lo;
  for (const Vec2& p : base.polylines.back()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const Vec2 center = 0.5 * (lo + hi);
  const double diameter = std::max(distance(lo, hi), 1e-12);
  const double clip = 5.0 * diameter;
  scene.layers.push_back(std::move(base));

  PlotLayer markers{LayerStyle::marker, {}, {}};
  if (o.what == "family") {
    PlotLayer family{LayerStyle::evolutoid, {}, {}};
    for (double alpha : alphas) {
      const EvolutoidSpec es(curve, alpha);
      for (auto& l : traced(params, [&](double t) { return evolutoid_point(es, t); }, center, clip))
        family.polylines.push_back(std::move(l));
      if (alpha > 0.0 && alpha < std::numbers::pi)
        for (const EvolutoidSingularity& s : singular_params(es))
          markers.markers.push_back({s.location, std::string(s.is_cusp ? "cusp" : "singular") +
                                                     " alpha=" + format_number(alpha, 6) +
                                                     " t=" + format_number(s.param, 8)});
    }
    if (!family.empty()) scene.layers.push_back(std::move(family));
  } else if (o.what != "ses" && o.what != "base") {
    throw SpecError("what", "expected base, ses or family");
  }
  if (o.what == "ses" || o.what == "family") {
    PlotLayer ses{LayerStyle::ses, {}, {}};
    ses.polylines = traced(params, [&](double t) { return ses_point(curve, t).location; }, center, clip);
    if (!ses.empty()) scene.layers.push_back(std::move(ses));
    try {
      for (const SesSingularity& s : ses_singularities(curve))
        markers.markers.push_back({s.location, "ses " + to_string(s.kind) + " t=" + format_number(s.param, 8)});
    } catch (const DegenerateSingularSetError&) {
      // circles: the set is a single point and has no isolated singularities
    }
  }
  if (o.asymptotes) {
    const auto* pc = std::get_if<ParamCurve>(&curve);
    if (!pc) throw SpecError("asymptotes", "asymptote lines need a parametric curve");
    PlotLayer lines{LayerStyle::asymptote, {}, {}};
    for (double alpha : alphas)
      for (const Line& l : asymptote_lines(*pc, alpha))
        lines.polylines.push_back({l.point - diameter * l.direction, l.point + diameter * l.direction});
    if (!lines.empty()) scene.layers.push_back(std::move(lines));
  }
  if (!markers.empty()) scene.layers.push_back(std::move(markers));
  render_svg(scene, o.out);
  return exit_ok;
}

struct EvolutoidOptions {
  std::string curve;
  std::string alpha;
  std::string out;
  bool singular{false};
  int samples{1024};
};

int cmd_evolutoid(const EvolutoidOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const EvolutoidSpec es(spec.curve, parse_angle(o.alpha, "alpha"));
  std::string s;
  if (o.singular) {
    s = "param,x,y,kind,rho_s1,rho_s2\n";
    for (const EvolutoidSingularity& p : singular_params(es))
      s += format_number(p.param) + "," + format_number(p.location.x) + "," + format_number(p.location.y) + "," +
           (p.borderline ? "borderline" : "cusp") + "," + format_number(p.rho_s1) + "," + format_number(p.rho_s2) +
           "\n";
  } else {
    s = "param,x,y\n";
    for (double t : sample_params(spec.curve, o.samples)) {
      try {
        const Vec2 p = evolutoid_point(es, t);
        s += format_number(t) + "," + format_number(p.x) + "," + format_number(p.y) + "\n";
      } catch (const NumericDegeneracy&) {
      }
    }
  }
  emit(s, o.out, out);
  return exit_ok;
}

struct SesOptions {
  std::string curve;
  std::string out;
  bool classify{false};
  int samples{1024};
};

int cmd_ses(const SesOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const Curve& curve = spec.curve;
  std::string s;
  if (o.classify) {
    struct Row {
      double param;
      Vec2 at;
      std::string kind;
      double value;
    };
    std::vector<Row> rows;
    for (const SesSingularity& p : ses_singularities(curve))
      rows.push_back({p.param, p.location, to_string(p.kind), p.criterion_slope});
    for (const SesFlex& f : ses_inflexions(curve))
      rows.push_back({f.param, ses_point(curve, f.param).location, to_string(f.kind), f.nondegeneracy_value});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.param < b.param; });
    s = "param,x,y,kind,value\n";
    for (const Row& r : rows)
      s += format_number(r.param) + "," + format_number(r.at.x) + "," + format_number(r.at.y) + "," + r.kind + "," +
           format_number(r.value) + "\n";
  } else {
    s = "param,x,y,alpha\n";
    for (double t : sample_params(curve, o.samples)) {
      try {
        const SesPoint p = ses_point(curve, t);
        s += format_number(t) + "," + format_number(p.location.x) + "," + format_number(p.location.y) + "," +
             format_number(p.alpha_of_param) + "\n";
      } catch (const NumericDegeneracy&) {
      }
    }
  }
  emit(s, o.out, out);
  return exit_ok;
}

struct FrontOptions {
  std::string curve;
  std::string grid{"64,256"};
  std::string out;
  std::string sigma;
};

int cmd_front(const FrontOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const SupportCurve& curve = require_support(spec, "front");
  const auto [na, nt] = parse_grid(o.grid);
  const SigmaCurve sigma = extract_sigma(curve);
  const FrontMesh mesh = mesh_front(curve, na, nt);
  const std::string marks = o.sigma.empty() ? std::string() : sigma_csv(classify_sigma(sigma, curve), curve);
  emit(mesh_obj(mesh), o.out, out);
  if (!o.sigma.empty()) write_text_file(o.sigma, marks);
  return exit_ok;
}

Json estimate_json(const QuadratureEstimate& q) {
  return Json{{"value", rounded(q.value)}, {"err", rounded(q.abs_error_estimate)}, {"evals", q.n_evaluations}};
}

struct GaussBonnetOptions {
  std::string curve;
  double tol{1e-8};
  double tol_residual{1e-5};
  std::string report;
};

int cmd_gauss_bonnet(const GaussBonnetOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const SupportCurve& curve = require_support(spec, "gauss-bonnet");
  if (!(o.tol > 0.0)) throw SpecError("tol", "must be positive");
  if (!(o.tol_residual > 0.0)) throw SpecError("tol-residual", "must be positive");
  const GaussBonnetReport r = gauss_bonnet_check(curve, o.tol, curve_id(spec, o.curve));
  Json nulls = Json::array();
  for (const BoundaryNullPoint& b : r.boundary_null_points)
    nulls.push_back(Json{{"theta", rounded(b.theta)}, {"alpha", rounded(b.alpha)}});
  Json tails = Json::array();
  for (double t : r.swallowtails) tails.push_back(rounded(t));
  const Json j{{"curve", r.curve_id},
               {"lhs", estimate_json(r.lhs)},
               {"rhs", estimate_json(r.rhs)},
               {"residual", rounded(r.residual)},
               {"relative_residual", rounded(r.relative_residual)},
               {"boundary_null_points", nulls},
               {"swallowtails", tails}};
  emit(json_text(j), o.report, out);
  return r.relative_residual > o.tol_residual ? exit_residual : exit_ok;
}

struct AreasOptions {
  std::string curve;
  std::string alpha{"pi/2"};
  std::string report;
};

int cmd_areas(const AreasOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  Json j{{"curve", curve_id(spec, o.curve)}};
  if (const auto* s = std::get_if<SupportCurve>(&spec.curve)) {
    const double alpha = parse_angle(o.alpha, "alpha");
    if (alpha < 0.0 || alpha > std::numbers::pi) throw SpecError("alpha", "must lie in [0, pi]");
    const AreaIdentity a = area_identity(*s, alpha);
    j["kind"] = "support";
    j["alpha"] = rounded(alpha);
    j["length"] = rounded(curve_length(*s));
    j["oriented_area"] = rounded(oriented_area(*s));
    j["shoelace_area"] = rounded(shoelace_area(hedgehog_as_param(*s)));
    j["area_identity"] = Json{{"lhs", rounded(a.lhs)},
                              {"rhs", rounded(a.rhs)},
                              {"residual", rounded(a.residual)},
                              {"area_curve", rounded(a.area_curve)},
                              {"area_evolute", rounded(a.area_evolute)}};
    if (s->rotation() == 1.0 && alpha > 0.0 && alpha < std::numbers::pi) {
      const Cor24Check c = check_cor24(*s, alpha);
      j["cor24"] = Json{{"satisfied", c.satisfied}, {"gap", rounded(c.gap)}, {"is_circle", c.is_circle}};
    } else {
      j["cor24"] = nullptr;
    }
  } else {
    j["kind"] = "parametric";
    j["shoelace_area"] = rounded(shoelace_area(std::get<ParamCurve>(spec.curve)));
  }
  emit(json_text(j), o.report, out);
  return exit_ok;
}

struct CheckOptions {
  std::string curve;
  std::string report;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const CurveSpec spec = load_curve_spec(o.curve);
  const GenericityReport r = check_genericity(spec.curve);
  Json violations = Json::array();
  for (const GenericityViolation& v : r.violations) {
    Json values = Json::array();
    for (double x : v.values) values.push_back(rounded(x));
    violations.push_back(Json{{"check", std::string(1, tag_of(v.kind))},
                              {"kind", to_string(v.kind)},
                              {"param", rounded(v.param)},
                              {"values", values}});
  }
  const Json j{{"curve", curve_id(spec, o.curve)},
               {"generic", r.generic()},
               {"is_generic_for",
                Json{{"evolutoid", r.is_generic_for.evolutoid},
                     {"ses", r.is_generic_for.ses},
                     {"front", r.is_generic_for.front},
                     {"gauss_bonnet", r.is_generic_for.gauss_bonnet}}},
               {"violations", violations}};
  emit(json_text(j), o.report, out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evolutoids, singular evolutoids sets and extended fronts of plane curves", "curvelab"};
  app.require_subcommand(1, 1);
  app.footer(kFooter);

  ShowOptions show;
  auto* c_show = app.add_subcommand("show", "plot the curve, its evolutoids and the singular evolutoids set (SVG)");
  c_show->add_option("--curve", show.curve, "curve JSON file")->required();
  c_show->add_option("--what", show.what, "base | ses | family")->check(CLI::IsMember({"base", "ses", "family"}));
  c_show->add_option("--alphas", show.alphas, "comma-separated angles for --what family");
  c_show->add_option("--out", show.out, "SVG output path")->required();
  c_show->add_flag("--asymptotes", show.asymptotes, "draw the asymptote lines at inflexions");
  c_show->add_option("--samples", show.samples, "samples per curve")->check(CLI::Range(8, 1 << 20));

  EvolutoidOptions evo;
  auto* c_evo = app.add_subcommand("evolutoid", "sample the alpha-evolutoid (CSV)");
  c_evo->add_option("--curve", evo.curve, "curve JSON file")->required();
  c_evo->add_option("--alpha", evo.alpha, "rotation angle in [0, pi]")->required();
  c_evo->add_flag("--singular", evo.singular, "list the singular points instead of samples");
  c_evo->add_option("--out", evo.out, "CSV output path (default stdout)");
  c_evo->add_option("--samples", evo.samples, "number of parameter steps")->check(CLI::Range(8, 1 << 20));

  SesOptions ses;
  auto* c_ses = app.add_subcommand("ses", "sample or classify the singular evolutoids set (CSV)");
  c_ses->add_option("--curve", ses.curve, "curve JSON file")->required();
  c_ses->add_flag("--classify", ses.classify, "list singular points and inflexions instead of samples");
  c_ses->add_option("--out", ses.out, "CSV output path (default stdout)");
  c_ses->add_option("--samples", ses.samples, "number of parameter steps")->check(CLI::Range(8, 1 << 20));

  FrontOptions front;
  auto* c_front = app.add_subcommand("front", "mesh the extended evolutoids front (OBJ)");
  c_front->add_option("--curve", front.curve, "support curve JSON file")->required();
  c_front->add_option("--grid", front.grid, "NA,NT grid sizes, each at least 8");
  c_front->add_option("--out", front.out, "OBJ output path (default stdout)");
  c_front->add_option("--sigma", front.sigma, "CSV path for the classified singular set");

  GaussBonnetOptions gb;
  auto* c_gb = app.add_subcommand("gauss-bonnet", "check the Gauss-Bonnet identity of the front (JSON)");
  c_gb->add_option("--curve", gb.curve, "support curve JSON file")->required();
  c_gb->add_option("--tol", gb.tol, "quadrature tolerance");
  c_gb->add_option("--tol-residual", gb.tol_residual, "largest accepted relative residual");
  c_gb->add_option("--report", gb.report, "JSON report path (default stdout)");

  AreasOptions areas;
  auto* c_areas = app.add_subcommand("areas", "lengths and oriented areas (JSON)");
  c_areas->add_option("--curve", areas.curve, "curve JSON file")->required();
  c_areas->add_option("--alpha", areas.alpha, "evolutoid angle for the area identity");
  c_areas->add_option("--report", areas.report, "JSON report path (default stdout)");

  CheckOptions check;
  auto* c_check = app.add_subcommand("check", "genericity checks (a)-(e) (JSON)");
  c_check->add_option("--curve", check.curve, "curve JSON file")->required();
  c_check->add_option("--report", check.report, "JSON report path (default stdout)");

  std::vector<std::string> argv_storage{"curvelab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (c_show->parsed()) return cmd_show(show);
    if (c_evo->parsed()) return cmd_evolutoid(evo, out);
    if (c_ses->parsed()) return cmd_ses(ses, out);
    if (c_front->parsed()) return cmd_front(front, out);
    if (c_gb->parsed()) return cmd_gauss_bonnet(gb, out);
    if (c_areas->parsed()) return cmd_areas(areas, out);
    if (c_check->parsed()) return cmd_check(check, out);
  } catch (const NumericDegeneracy& e) {
    err << Json{{"error", e.kind()}, {"message", e.what()}, {"param", rounded(e.param())}}.dump() << "\n";
    return exit_degenerate;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace curvelab
