#include "curvelab/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "curvelab/errors.hpp"
#include "curvelab/quadrature.hpp"
#include "curvelab/taylor.hpp"

namespace curvelab {

namespace {

constexpr double kFlatKappa = 1e-12;

bool is_half_integer_multiple(double r) {
  const double twice = 2.0 * r;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

bool is_integer(double r) { return std::abs(r - std::round(r)) < 1e-12; }

double trig_derivative(double freq, double a, double b, double t, int order) {
  // d^k/dt^k (a cos ωt + b sin ωt), exact quarter-turn cycle.
  double da = a;
  double db = b;
  for (int k = 0; k < (order & 3); ++k) {
    const double na = db;
    const double nb = -da;
    da = na;
    db = nb;
  }
  return std::pow(freq, order) * (da * std::cos(freq * t) + db * std::sin(freq * t));
}

}  // namespace

SupportCurve::SupportCurve(TrigPoly support, double rotation)
    : p_(std::move(support)), rho_(p_ + p_.derivative(2)), rotation_(rotation) {
  if (!(rotation > 0.0) || !is_half_integer_multiple(rotation))
    throw PreconditionError("rotation number must be a positive integer or half-integer");
  if (!is_integer(rotation) && p_.period() < 3.0 * std::numbers::pi)
    throw PreconditionError("a half-integer rotation number needs a 4*pi-periodic support function");
}

double CoordinateMap::value(double t, int order) const {
  double v = 0.0;
  // Horner on the order-th derivative of the polynomial part.
  for (std::size_t k = poly.size(); k-- > static_cast<std::size_t>(order);) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= static_cast<double>(k - static_cast<std::size_t>(j));
    v = v * t + poly[k] * falling;
  }
  for (const auto& [w, a] : cos_terms) v += trig_derivative(w, a, 0.0, t, order);
  for (const auto& [w, b] : sin_terms) v += trig_derivative(w, 0.0, b, t, order);
  return v;
}

ParamCurve::ParamCurve(CoordinateMap x, CoordinateMap y, double t0, double t1, bool closed)
    : x_(std::move(x)), y_(std::move(y)), t0_(t0), t1_(t1), closed_(closed) {
  if (!(t1 > t0) || !std::isfinite(t0) || !std::isfinite(t1))
    throw PreconditionError("parametric domain must satisfy t0 < t1");
  constexpr int kCoarse = 1024;
  for (int i = 0; i <= kCoarse; ++i) {
    const double t = t0 + (t1 - t0) * i / kCoarse;
    speed_scale_ = std::max(speed_scale_, norm(derivative(t, 1)));
  }
  if (closed) {
    for (int order = 0; order <= 3; ++order) {
      const Vec2 a = derivative(t0, order);
      const Vec2 b = derivative(t1, order);
      const double scale = std::max(norm(a), norm(b));
      if (norm(a - b) > 1e-9 * (1.0 + scale))
        throw PreconditionError("closed curve does not match at the domain ends (derivative order " +
                                std::to_string(order) + ")");
    }
  }
}

ParamDomain domain_of(const Curve& curve) {
  return std::visit([](const auto& c) { return c.domain(); }, curve);
}

std::vector<double> support_jet(const SupportCurve& curve, double theta, int order) {
  if (order < 0 || order > 6) throw PreconditionError("support_jet order must be in [0, 6]");
  return curve.support().jet(theta, order);
}

Vec2 hedgehog_point(const SupportCurve& curve, double theta) {
  const auto j = curve.support().jet(theta, 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {j[0] * c - j[1] * s, j[0] * s + j[1] * c};
}

RhoJet rho_jet(const SupportCurve& curve, double theta) {
  const auto j = curve.radius_of_curvature().jet(theta, 3);
  return {j[0], j[1], j[2], j[3]};
}

JetSample support_sample(const SupportCurve& curve, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  JetSample s;
  s.param = theta;
  s.point = hedgehog_point(curve, theta);
  s.tangent = {-std::sin(theta), std::cos(theta)};
  s.normal = {-std::cos(theta), -std::sin(theta)};
  s.rho = r.rho;
  s.kappa = 1.0 / r.rho;
  // ds = ρ dθ
  s.rho_s1 = r.d1 / r.rho;
  s.rho_s2 = (r.rho * r.d2 - r.d1 * r.d1) / (r.rho * r.rho * r.rho);
  s.rho_s3 = (r.rho * r.rho * r.d3 - 4.0 * r.rho * r.d1 * r.d2 + 3.0 * r.d1 * r.d1 * r.d1) / std::pow(r.rho, 5);
  return s;
}

double regularity_tolerance(const ParamCurve& curve) { return 1e-9 * (1.0 + curve.speed_scale()); }

CurvatureJet curvature_jet(const ParamCurve& curve, double t) {
  std::array<double, Taylor::kTerms> dx{};
  std::array<double, Taylor::kTerms> dy{};
  for (std::size_t k = 0; k < Taylor::kTerms; ++k) {
    dx[k] = curve.x_map().value(t, static_cast<int>(k));
    dy[k] = curve.y_map().value(t, static_cast<int>(k));
  }
  const Vec2 velocity{dx[1], dy[1]};
  const double speed = norm(velocity);
  if (speed <= regularity_tolerance(curve)) throw RegularityError("singular point of a parametric curve", t);

  const Taylor x = Taylor::from_derivatives(dx);
  const Taylor y = Taylor::from_derivatives(dy);
  const Taylor xp = x.derivative();
  const Taylor yp = y.derivative();
  const Taylor xpp = xp.derivative();
  const Taylor ypp = yp.derivative();
  const Taylor v = sqrt(xp * xp + yp * yp);
  const Taylor kappa = (xp * ypp - yp * xpp) / (v * v * v);
  const Taylor k1 = kappa.derivative() / v;
  const Taylor k2 = k1.derivative() / v;
  const Taylor k3 = k2.derivative() / v;

  CurvatureJet j;
  j.param = t;
  j.point = {dx[0], dy[0]};
  j.tangent = velocity / speed;
  j.normal = perp(j.tangent);
  j.speed = speed;
  j.kappa = kappa.value();
  j.kappa_s1 = k1.value();
  j.kappa_s2 = k2.value();
  j.kappa_s3 = k3.value();
  return j;
}

JetSample param_jet(const ParamCurve& curve, double t) {
  const CurvatureJet c = curvature_jet(curve, t);
  if (std::abs(c.kappa) <= kFlatKappa) throw FlatError("curvature vanishes; radius of curvature overflows", t);
  const double k = c.kappa;
  const double k1 = c.kappa_s1;
  const double k2 = c.kappa_s2;
  const double k3 = c.kappa_s3;
  JetSample s;
  s.param = t;
  s.point = c.point;
  s.tangent = c.tangent;
  s.normal = c.normal;
  s.kappa = k;
  s.rho = 1.0 / k;
  s.rho_s1 = -k1 / (k * k);
  s.rho_s2 = (2.0 * k1 * k1 - k * k2) / (k * k * k);
  s.rho_s3 = (6.0 * k * k1 * k2 - k * k * k3 - 6.0 * k1 * k1 * k1) / (k * k * k * k);
  return s;
}

JetSample jet_sample(const Curve& curve, double param) {
  if (const auto* s = std::get_if<SupportCurve>(&curve)) return support_sample(*s, param);
  return param_jet(std::get<ParamCurve>(curve), param);
}

bool is_cusp_point(const ParamCurve& curve, double t) {
  if (norm(curve.derivative(t, 1)) > regularity_tolerance(curve)) return false;
  const Vec2 d2 = curve.derivative(t, 2);
  const Vec2 d3 = curve.derivative(t, 3);
  const double scale = norm(d2) * norm(d3);
  return scale > 0.0 && std::abs(det(d2, d3)) > 1e-6 * scale;
}

std::vector<double> cusp_params(const ParamCurve& curve) {
  const auto speed = [&](double t) { return norm(curve.derivative(t, 1)); };
  RootScanOptions opt;
  opt.samples = scan_samples_for(curve.domain());
  std::vector<double> out;
  for (const Root& r : scan_roots(speed, curve.domain(), opt).roots)
    if (is_cusp_point(curve, r.x)) out.push_back(r.x);
  return out;
}

double curve_length(const SupportCurve& curve) { return curve.support().integral(); }

double oriented_area(const SupportCurve& curve) { return curve.support().half_energy_difference(); }

double shoelace_area(const ParamCurve& curve) {
  if (!curve.closed()) throw NotClosedError("shoelace area needs a closed curve");
  const auto integrand = [&](double t) {
    const Vec2 p = curve.point(t);
    const Vec2 d = curve.derivative(t, 1);
    return 0.5 * det(p, d);
  };
  AdaptiveOptions opt;
  opt.abs_tol = 1e-13 * (1.0 + curve.speed_scale() * curve.speed_scale());
  opt.rel_tol = 1e-15;
  const double len = curve.t1() - curve.t0();
  std::vector<double> breaks;
  const int panels = std::max(8, static_cast<int>(std::ceil(len / (std::numbers::pi / 8.0))));
  for (int i = 0; i <= panels; ++i) breaks.push_back(curve.t0() + len * i / panels);
  return integrate_panels(integrand, breaks, opt).value;
}

namespace {

void add_cos(std::map<double, double>& c, std::vector<double>& poly, double freq, double coef) {
  if (coef == 0.0) return;
  freq = std::abs(freq);
  if (freq == 0.0) {
    if (poly.empty()) poly.push_back(0.0);
    poly[0] += coef;
  } else {
    c[freq] += coef;
  }
}

void add_sin(std::map<double, double>& s, double freq, double coef) {
  if (coef == 0.0 || freq == 0.0) return;
  if (freq < 0.0) s[-freq] -= coef;
  else s[freq] += coef;
}

}  // namespace

ParamCurve hedgehog_as_param(const SupportCurve& curve) {
  const TrigPoly& p = curve.support();
  const double w = p.frequency();
  CoordinateMap x;
  CoordinateMap y;
  // Constant part: c(cos θ, sin θ).
  add_cos(x.cos_terms, x.poly, 1.0, p.constant());
  add_sin(y.sin_terms, 1.0, p.constant());
  // a cos fθ + b sin fθ contributes to p; f(b cos fθ − a sin fθ) to p′.
  auto harmonic = [&](double f, double a, double b) {
    const double pa = f * b;   // cos fθ coefficient of p′
    const double pb = -f * a;  // sin fθ coefficient of p′
    // x = p cos θ − p′ sin θ
    add_cos(x.cos_terms, x.poly, f - 1.0, 0.5 * a);
    add_cos(x.cos_terms, x.poly, f + 1.0, 0.5 * a);
    add_sin(x.sin_terms, f + 1.0, 0.5 * b);
    add_sin(x.sin_terms, f - 1.0, 0.5 * b);
    add_sin(x.sin_terms, f + 1.0, -0.5 * pa);
    add_sin(x.sin_terms, f - 1.0, 0.5 * pa);
    add_cos(x.cos_terms, x.poly, f - 1.0, -0.5 * pb);
    add_cos(x.cos_terms, x.poly, f + 1.0, 0.5 * pb);
    // y = p sin θ + p′ cos θ
    add_sin(y.sin_terms, f + 1.0, 0.5 * a);
    add_sin(y.sin_terms, f - 1.0, -0.5 * a);
    add_cos(y.cos_terms, y.poly, f - 1.0, 0.5 * b);
    add_cos(y.cos_terms, y.poly, f + 1.0, -0.5 * b);
    add_cos(y.cos_terms, y.poly, f - 1.0, 0.5 * pa);
    add_cos(y.cos_terms, y.poly, f + 1.0, 0.5 * pa);
    add_sin(y.sin_terms, f + 1.0, 0.5 * pb);
    add_sin(y.sin_terms, f - 1.0, 0.5 * pb);
  };
  std::map<int, std::pair<double, double>> terms;
  for (const auto& [n, a] : p.cos_coeffs()) terms[n].first += a;
  for (const auto& [n, b] : p.sin_coeffs()) terms[n].second += b;
  for (const auto& [n, ab] : terms) harmonic(n * w, ab.first, ab.second);
  return ParamCurve(std::move(x), std::move(y), 0.0, curve.closure_period(), true);
}

std::string to_string(FlexKind kind) { return kind == FlexKind::inflexion ? "inflexion" : "undulation"; }

std::vector<FlexPoint> inflexion_points(const ParamCurve& curve) {
  const double reg = regularity_tolerance(curve);
  const auto k = [&](double t) {
    const Vec2 d1 = curve.derivative(t, 1);
    if (norm(d1) <= 1e3 * reg) return std::numeric_limits<double>::quiet_NaN();
    return det(d1, curve.derivative(t, 2));
  };
  const auto dk = [&](double t) { return det(curve.derivative(t, 1), curve.derivative(t, 3)); };
  RootScanOptions opt;
  opt.samples = scan_samples_for(curve.domain());
  const RootScan scan = scan_roots(k, curve.domain(), opt, dk);
  std::vector<FlexPoint> out;
  for (const Root& r : scan.roots) {
    FlexPoint f;
    f.param = r.x;
    f.kind = r.sign_change ? FlexKind::inflexion : FlexKind::undulation;
    const Vec2 d1 = curve.derivative(r.x, 1);
    const Vec2 d3 = curve.derivative(r.x, 3);
    f.det13 = det(d1, d3);
    f.nondegenerate = std::abs(f.det13) > 1e-9 * (1.0 + norm(d1) * norm(d3));
    out.push_back(f);
  }
  return out;
}

}  // namespace curvelab
