#include "curvelab/ses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double wrap_alpha(double a) {
  a = std::fmod(a, std::numbers::pi);
  return a < 0.0 ? a + std::numbers::pi : a;
}

SesPoint support_ses(const SupportCurve& c, double theta) {
  const RhoJet r = rho_jet(c, theta);
  const double d = r.rho * r.rho + r.d1 * r.d1;
  if (d <= 1e-300) throw FlatError("rho and rho' vanish together", theta);
  const Vec2 t{-std::sin(theta), std::cos(theta)};
  const Vec2 n{-std::cos(theta), -std::sin(theta)};
  const double w = r.rho * r.rho / d;
  return {theta, hedgehog_point(c, theta) + w * (-r.d1 * t + r.rho * n), wrap_alpha(std::atan2(r.rho, -r.d1))};
}

SesPoint regular_param_ses(const ParamCurve& c, double t) {
  const CurvatureJet j = curvature_jet(c, t);
  const double k = j.kappa;
  const double k1 = j.kappa_s1;
  const double d = k * k * k * k + k1 * k1;
  if (d <= 1e-300) throw FlatError("curvature and its derivative vanish together", t);
  return {t, j.point + (k1 * k / d) * j.tangent + (k * k * k / d) * j.normal, wrap_alpha(std::atan2(k * k, k1))};
}

/// One-sided limit at a cusp: eliminates the O(h) and O(h²) terms.
Vec2 cusp_limit(const ParamCurve& c, double t) {
  const double hs[] = {1e-3, 5e-4, 2.5e-4};
  Vec2 sum;
  int sides = 0;
  for (double dir : {-1.0, 1.0}) {
    const double far = t + dir * hs[0];
    if (!c.closed() && (far < c.t0() || far > c.t1())) continue;
    Vec2 v[3];
    for (int i = 0; i < 3; ++i) v[i] = regular_param_ses(c, t + dir * hs[i]).location;
    sum = sum + (8.0 * v[2] - 6.0 * v[1] + v[0]) / 3.0;
    ++sides;
  }
  if (sides == 0) throw FlatError("no room for a one-sided limit", t);
  return sum / static_cast<double>(sides);
}

double support_criterion(const SupportCurve& c, double theta) {
  const RhoJet r = rho_jet(c, theta);
  return r.rho * r.d2 - r.d1 * r.d1;
}

double support_criterion_slope(const SupportCurve& c, double theta) {
  const RhoJet r = rho_jet(c, theta);
  return r.rho * r.d3 - r.d1 * r.d2;
}

double param_criterion(const ParamCurve& c, double t) {
  try {
    const CurvatureJet j = curvature_jet(c, t);
    return (2.0 * j.kappa_s1 * j.kappa_s1 - j.kappa * j.kappa_s2) / kappa_weight(j);
  } catch (const RegularityError&) {
    return kNaN;
  }
}

double param_criterion_slope(const ParamCurve& c, double t) {
  const CurvatureJet j = curvature_jet(c, t);
  return j.speed * (3.0 * j.kappa_s1 * j.kappa_s2 - j.kappa * j.kappa_s3) / kappa_weight(j);
}

template <typename F>
double coarse_scale(F&& f, const ParamDomain& d) {
  double s = 0.0;
  for (int i = 0; i <= 1024; ++i) {
    const double v = f(d.start + d.length() * i / 1024.0);
    if (std::isfinite(v)) s = std::max(s, std::abs(v));
  }
  return s;
}

RootScan scan_or_throw(const std::function<double(double)>& f, const std::function<double(double)>& df,
                       const ParamDomain& dom, bool touching, const char* what) {
  RootScanOptions opt;
  opt.samples = scan_samples_for(dom);
  opt.detect_touching = touching;
  RootScan scan = scan_roots(f, dom, opt, df);
  if (scan.degenerate_interval) throw DegenerateSingularSetError(what, scan.degenerate_interval->first);
  return scan;
}

}  // namespace

SesPoint ses_point(const Curve& curve, double param) {
  if (const auto* s = std::get_if<SupportCurve>(&curve)) return support_ses(*s, param);
  const auto& c = std::get<ParamCurve>(curve);
  if (norm(c.derivative(param, 1)) <= regularity_tolerance(c)) {
    if (!is_cusp_point(c, param)) throw RegularityError("singular point that is not a cusp", param);
    return {param, cusp_limit(c, param), 0.0};
  }
  return regular_param_ses(c, param);
}

std::string to_string(SesSingularityKind kind) { return kind == SesSingularityKind::cusp ? "cusp" : "degenerate"; }

double ses_singularity_criterion(const Curve& curve, double param) {
  if (const auto* s = std::get_if<SupportCurve>(&curve)) return support_criterion(*s, param);
  return param_criterion(std::get<ParamCurve>(curve), param);
}

std::vector<SesSingularity> ses_singularities(const Curve& curve) {
  const ParamDomain dom = domain_of(curve);
  std::function<double(double)> h = [&](double x) { return ses_singularity_criterion(curve, x); };
  std::function<double(double)> dh;
  if (const auto* s = std::get_if<SupportCurve>(&curve))
    dh = [s](double x) { return support_criterion_slope(*s, x); };
  else
    dh = [c = &std::get<ParamCurve>(curve)](double x) { return param_criterion_slope(*c, x); };

  const RootScan scan = scan_or_throw(h, dh, dom, true, "the singular evolutoids set degenerates on an interval");
  const double slope_scale = coarse_scale(
      [&](double x) {
        try {
          return dh(x);
        } catch (const RegularityError&) {
          return kNaN;
        }
      },
      dom);

  std::vector<SesSingularity> out;
  for (const Root& r : scan.roots) {
    SesSingularity s;
    s.param = r.x;
    s.location = ses_point(curve, r.x).location;
    s.criterion_slope = dh(r.x);
    s.kind = std::abs(s.criterion_slope) > 1e-6 * slope_scale ? SesSingularityKind::cusp
                                                              : SesSingularityKind::degenerate;
    try {
      const JetSample j = jet_sample(curve, r.x);
      s.rho_s2 = j.rho_s2;
      s.rho_s3 = j.rho_s3;
    } catch (const NumericDegeneracy&) {
    }
    out.push_back(s);
  }
  if (const auto* c = std::get_if<ParamCurve>(&curve)) {
    for (double t : cusp_params(*c)) {
      SesSingularity s;
      s.param = t;
      s.location = ses_point(curve, t).location;
      s.kind = SesSingularityKind::cusp;
      out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  }
  return out;
}

std::vector<SesFlex> ses_inflexions(const Curve& curve) {
  const ParamDomain dom = domain_of(curve);
  std::function<double(double)> f;
  std::function<double(double)> df;
  if (const auto* s = std::get_if<SupportCurve>(&curve)) {
    // (1 + ρ′ₛ² + 2ρρ″ₛ)·ρ²
    f = [s](double x) {
      const RhoJet r = rho_jet(*s, x);
      return r.rho * r.rho - r.d1 * r.d1 + 2.0 * r.rho * r.d2;
    };
    df = [s](double x) {
      const RhoJet r = rho_jet(*s, x);
      return 2.0 * r.rho * (r.d1 + r.d3);
    };
  } else {
    const auto* c = &std::get<ParamCurve>(curve);
    // (1 + ρ′ₛ² + 2ρρ″ₛ)·κ⁴/(κ⁴ + κ′²)
    f = [c](double x) {
      try {
        const CurvatureJet j = curvature_jet(*c, x);
        const double k = j.kappa;
        return (k * k * k * k + 5.0 * j.kappa_s1 * j.kappa_s1 - 2.0 * k * j.kappa_s2) / kappa_weight(j);
      } catch (const RegularityError&) {
        return kNaN;
      }
    };
    df = [c](double x) {
      const CurvatureJet j = curvature_jet(*c, x);
      const double k = j.kappa;
      return j.speed * (4.0 * k * k * k * j.kappa_s1 + 8.0 * j.kappa_s1 * j.kappa_s2 - 2.0 * k * j.kappa_s3) /
             kappa_weight(j);
    };
  }
  // The circle is excluded the same way as for ses_singularities.
  scan_or_throw([&](double x) { return ses_singularity_criterion(curve, x); }, nullptr, dom, false,
                "the singular evolutoids set degenerates on an interval");
  const RootScan scan = scan_or_throw(f, df, dom, true, "the inflexion criterion vanishes on an interval");

  std::vector<SesFlex> out;
  for (const Root& r : scan.roots) {
    SesFlex fl;
    fl.param = r.x;
    fl.kind = r.sign_change ? FlexKind::inflexion : FlexKind::undulation;
    try {
      const JetSample j = jet_sample(curve, r.x);
      const double a = j.rho_s1;
      const double b = j.rho * j.rho * j.rho_s3;
      fl.nondegeneracy_value = a + a * a * a - b;
      fl.nondegenerate = std::abs(fl.nondegeneracy_value) > 1e-9 * (1.0 + std::abs(a) + std::abs(a * a * a) + std::abs(b));
    } catch (const NumericDegeneracy&) {
      fl.nondegenerate = false;
    }
    out.push_back(fl);
  }
  return out;
}

Vec2 model_cusp_ses(double t, DenominatorReading reading) {
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double x = t2 * (-8.0 - 54.0 * t2 + 243.0 * t4) / (8.0 + 162.0 * t2 + 648.0 * t4);
  const double last = reading == DenominatorReading::quartic ? 324.0 * t4 : 324.0 * t2;
  const double y = t2 * t * (4.0 - 27.0 * t2 + 81.0 * t4) / (4.0 + 81.0 * t2 + last);
  return {x, y};
}

}  // namespace curvelab
