#include "curvelab/evolutoid.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_boundary_alpha(double alpha) { return alpha == 0.0 || alpha == kPi; }

void require_open_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) throw PreconditionError("alpha must lie in (0, pi)");
}

/// sup |f| over a coarse 1024-point scan; NaNs are skipped.
template <typename F>
double coarse_scale(F&& f, const ParamDomain& d) {
  double s = 0.0;
  for (int i = 0; i <= 1024; ++i) {
    const double v = f(d.start + d.length() * i / 1024.0);
    if (std::isfinite(v)) s = std::max(s, std::abs(v));
  }
  return s;
}

double support_cusp_value(const SupportCurve& c, double theta) {
  const RhoJet r = rho_jet(c, theta);
  return r.rho * r.d2 - r.d1 * r.d1;
}

double param_cusp_value(const ParamCurve& c, double t) {
  try {
    const CurvatureJet j = curvature_jet(c, t);
    return (2.0 * j.kappa_s1 * j.kappa_s1 - j.kappa * j.kappa_s2) / kappa_weight(j);
  } catch (const RegularityError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

EvolutoidSpec::EvolutoidSpec(Curve base_curve, double alpha_value) : base(std::move(base_curve)), alpha(alpha_value) {
  if (!(alpha >= 0.0 && alpha <= kPi)) throw PreconditionError("alpha must lie in [0, pi]");
}

Vec2 evolutoid_point(const EvolutoidSpec& spec, double param) {
  const double a = spec.alpha;
  if (const auto* s = std::get_if<SupportCurve>(&spec.base)) {
    const Vec2 f = hedgehog_point(*s, param);
    if (is_boundary_alpha(a)) return f;
    const double rho = s->radius_of_curvature()(param);
    const Vec2 t{-std::sin(param), std::cos(param)};
    const Vec2 n{-std::cos(param), -std::sin(param)};
    return f + rho * std::sin(a) * (std::cos(a) * t + std::sin(a) * n);
  }
  const auto& c = std::get<ParamCurve>(spec.base);
  if (is_boundary_alpha(a)) return c.point(param);
  if (norm(c.derivative(param, 1)) <= regularity_tolerance(c)) {
    if (is_cusp_point(c, param)) return c.point(param);
    throw RegularityError("evolutoid requested at a non-cusp singular point", param);
  }
  const JetSample j = param_jet(c, param);
  return j.point + j.rho * std::sin(a) * (std::cos(a) * j.tangent + std::sin(a) * j.normal);
}

TrigPoly evolutoid_support(const TrigPoly& p, double alpha) {
  if (!(alpha >= 0.0 && alpha <= kPi)) throw PreconditionError("alpha must lie in [0, pi]");
  return p.shifted(alpha).scaled(std::cos(alpha)) + p.derivative().shifted(alpha).scaled(std::sin(alpha));
}

double evolutoid_singularity_function(const EvolutoidSpec& spec, double param) {
  const double ca = std::cos(spec.alpha);
  const double sa = std::sin(spec.alpha);
  if (const auto* s = std::get_if<SupportCurve>(&spec.base)) {
    const RhoJet r = rho_jet(*s, param);
    return r.rho * ca + r.d1 * sa;
  }
  try {
    const CurvatureJet j = curvature_jet(std::get<ParamCurve>(spec.base), param);
    return (j.kappa * j.kappa * ca - j.kappa_s1 * sa) / std::sqrt(kappa_weight(j));
  } catch (const RegularityError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

std::vector<EvolutoidSingularity> singular_params(const EvolutoidSpec& spec) {
  require_open_alpha(spec.alpha);
  const double ca = std::cos(spec.alpha);
  const double sa = std::sin(spec.alpha);
  const ParamDomain dom = domain_of(spec.base);
  const auto g = [&](double x) { return evolutoid_singularity_function(spec, x); };

  std::function<double(double)> dg;
  std::function<double(double)> cusp_value;
  if (const auto* s = std::get_if<SupportCurve>(&spec.base)) {
    dg = [s, ca, sa](double x) {
      const RhoJet r = rho_jet(*s, x);
      return r.d1 * ca + r.d2 * sa;
    };
    cusp_value = [s](double x) { return support_cusp_value(*s, x); };
  } else {
    const auto* c = &std::get<ParamCurve>(spec.base);
    dg = [c, ca, sa](double x) {
      const CurvatureJet j = curvature_jet(*c, x);
      return j.speed * (2.0 * j.kappa * j.kappa_s1 * ca - j.kappa_s2 * sa) / std::sqrt(kappa_weight(j));
    };
    cusp_value = [c](double x) { return param_cusp_value(*c, x); };
  }

  RootScanOptions opt;
  opt.samples = scan_samples_for(dom);
  opt.detect_touching = false;
  const RootScan scan = scan_roots(g, dom, opt, dg);
  if (scan.degenerate_interval)
    throw DegenerateSingularSetError("evolutoid singular set contains a whole parameter interval",
                                     scan.degenerate_interval->first);

  const double scale = coarse_scale(cusp_value, dom);
  std::vector<EvolutoidSingularity> out;
  for (const Root& r : scan.roots) {
    EvolutoidSingularity e;
    e.param = r.x;
    e.alpha = spec.alpha;
    e.location = evolutoid_point(spec, r.x);
    e.cusp_value = cusp_value(r.x);
    e.is_cusp = std::abs(e.cusp_value) > 1e-6 * scale;
    e.borderline = !e.is_cusp;
    const JetSample j = jet_sample(spec.base, r.x);
    e.rho_s1 = j.rho_s1;
    e.rho_s2 = j.rho_s2;
    out.push_back(e);
  }
  return out;
}

std::vector<Line> asymptote_lines(const ParamCurve& base, double alpha) {
  require_open_alpha(alpha);
  std::vector<Line> out;
  for (const FlexPoint& f : inflexion_points(base)) {
    const Vec2 d = base.derivative(f.param, 1);
    out.push_back({base.point(f.param), rotate(d / norm(d), alpha)});
  }
  return out;
}

AreaIdentity area_identity(const SupportCurve& curve, double alpha) {
  const TrigPoly& p = curve.support();
  AreaIdentity a;
  a.lhs = evolutoid_support(p, alpha).half_energy_difference();
  a.area_curve = p.half_energy_difference();
  a.area_evolute = evolutoid_support(p, kPi / 2.0).half_energy_difference();
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  a.rhs = a.area_curve * c * c + a.area_evolute * s * s;
  a.residual = std::abs(a.lhs - a.rhs);
  return a;
}

Cor24Check check_cor24(const SupportCurve& curve, double alpha, double tolerance) {
  require_open_alpha(alpha);
  if (curve.rotation() != 1.0) throw PreconditionError("the area inequality is stated for 1-hedgehogs");
  const TrigPoly& p = curve.support();
  const double c = std::cos(alpha);
  Cor24Check out;
  out.gap = p.half_energy_difference() * c * c - evolutoid_support(p, alpha).half_energy_difference();
  out.satisfied = out.gap >= -tolerance;
  out.is_circle = p.is_circle_like();
  return out;
}

}  // namespace curvelab
