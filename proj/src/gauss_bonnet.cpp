#include "curvelab/gauss_bonnet.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

constexpr double kPi = std::numbers::pi;

/// sin α with the endpoints of [0, π] mapped to an exact zero.
double sin_alpha(double alpha) { return alpha == 0.0 || alpha == kPi ? 0.0 : std::sin(alpha); }

double kg_dtau_density(double rho, double alpha) {
  const double s = sin_alpha(alpha);
  return -rho * s / std::sqrt(1.0 + rho * rho * s * s);
}

bool on_sigma(double g, const RhoJet& r) { return std::abs(g) <= 1e-12 * (1.0 + std::abs(r.rho) + std::abs(r.d1)); }

struct SingularParts {
  double n;
  double s;
  double h;
};

SingularParts singular_parts(const RhoJet& r) {
  const double p = r.rho;
  const double p1 = r.d1;
  const double p2 = r.d2;
  const double p3 = p * p * p;
  const double n = p3 * p3 + p1 * p1 * p1 * p1 - p3 * p * (p1 * p1 - 1.0) + 2.0 * p3 * p2 + 2.0 * p3 * p * p * p2;
  return {n, p * p + p * p * p * p + p1 * p1, p * p2 - p1 * p1};
}

double k_dA_density(const RhoJet& r, double alpha, double sign) {
  const double s = std::sin(alpha);
  const double w = 1.0 + r.rho * r.rho * s * s;
  return sign * (r.rho * std::cos(alpha) - r.d1 * s) / (w * std::sqrt(w));
}

/// 0, P, the zeros of ρ and the swallowtail parameters, sorted.
std::vector<double> theta_breakpoints(const SupportCurve& curve, std::vector<double>* swallowtail_thetas) {
  const double period = curve.closure_period();
  std::vector<double> b{0.0, period};
  RootScanOptions opt;
  opt.samples = scan_samples_for(curve.domain());
  const TrigPoly& rho = curve.radius_of_curvature();
  const RootScan zeros = scan_roots(rho, curve.domain(), opt, rho.derivative());
  if (zeros.degenerate_interval) throw DegenerateSigmaPointError("rho vanishes on an interval", zeros.degenerate_interval->first);
  for (const Root& r : zeros.roots) b.push_back(r.x);
  for (const SingularFrontPoint& p : swallowtails(curve)) {
    b.push_back(p.theta);
    if (swallowtail_thetas) swallowtail_thetas->push_back(p.theta);
  }
  std::sort(b.begin(), b.end());
  std::vector<double> out;
  for (double x : b)
    if (out.empty() || x - out.back() > 1e-10) out.push_back(x);
  if (period - out.back() <= 1e-10) out.back() = period;
  else out.push_back(period);
  return out;
}

}  // namespace

GeodesicCurvature geodesic_curvature_form(const SupportCurve& curve, double alpha, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const double s = sin_alpha(alpha);
  const double g = r.rho * std::cos(alpha) + r.d1 * s;
  if (on_sigma(g, r)) throw OnSigmaError("geodesic curvature requested on the singular set", theta);
  const double density = kg_dtau_density(r.rho, alpha);
  return {density / std::abs(g), density};
}

double ks_dtau_density(const SupportCurve& curve, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const SingularParts q = singular_parts(r);
  return -q.n / ((1.0 + r.rho * r.rho) * (r.rho * r.rho + r.d1 * r.d1) * std::sqrt(q.s));
}

SingularCurvature singular_curvature_form(const SupportCurve& curve, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const SingularParts q = singular_parts(r);
  const double scale = r.rho * r.rho + r.d1 * r.d1 + std::abs(r.rho * r.d2);
  if (std::abs(q.h) <= 1e-12 * (1.0 + scale))
    throw DegenerateSigmaPointError("singular curvature is undefined at a swallowtail", theta);
  const double a = 1.0 + r.rho * r.rho;
  const double b = r.rho * r.rho + r.d1 * r.d1;
  const double root_s = std::sqrt(q.s);
  SingularCurvature out;
  out.ks = -q.n / (std::abs(q.h) * a * std::sqrt(a) * root_s);
  out.ks_dtau_density = -q.n / (a * b * root_s);
  const double x = -q.h;
  out.alt_ks = (x > 0.0 ? 1.0 : -1.0) * q.n / (x * a * std::sqrt(a) * b * root_s);
  out.alt_ks_dtau_density = -out.ks_dtau_density;
  return out;
}

GaussianCurvature gaussian_curvature(const SupportCurve& curve, double alpha, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double g = r.rho * c + r.d1 * s;
  if (on_sigma(g, r)) throw OnSigmaError("Gaussian curvature requested on the singular set", theta);
  const double w = 1.0 + r.rho * r.rho * s * s;
  return {(r.rho * c - r.d1 * s) / (w * w * g), k_dA_density(r, alpha, g > 0.0 ? 1.0 : -1.0)};
}

QuadratureEstimate integrate_K_dA(const SupportCurve& curve, double tol, int workers) {
  const std::vector<double> breaks = theta_breakpoints(curve, nullptr);
  const double period = curve.closure_period();
  AdaptiveOptions inner_opt;
  inner_opt.abs_tol = 0.1 * tol / period;
  std::atomic<long> inner_evaluations{0};

  const auto inner = [&](double theta) {
    const RhoJet r = rho_jet(curve, theta);
    const auto piece = [&](double a, double b) {
      if (!(b > a)) return 0.0;
      const double m = 0.5 * (a + b);
      const double sign = r.rho * std::cos(m) + r.d1 * std::sin(m) >= 0.0 ? 1.0 : -1.0;
      const QuadratureEstimate q =
          integrate_adaptive([&](double al) { return k_dA_density(r, al, sign); }, a, b, inner_opt);
      inner_evaluations += q.n_evaluations;
      return q.value;
    };
    const double split = sigma_alpha(curve, theta);
    if (split > 0.0 && split < kPi) return piece(0.0, split) + piece(split, kPi);
    return piece(0.0, kPi);
  };

  AdaptiveOptions outer_opt;
  outer_opt.abs_tol = tol;
  QuadratureEstimate out = integrate_panels(inner, breaks, outer_opt, workers);
  out.n_evaluations += inner_evaluations.load();
  return out;
}

QuadratureEstimate integrate_ks_dtau(const SupportCurve& curve, double tol, int workers) {
  const std::vector<double> breaks = theta_breakpoints(curve, nullptr);
  AdaptiveOptions opt;
  opt.abs_tol = tol;
  return integrate_panels([&](double theta) { return ks_dtau_density(curve, theta); }, breaks, opt, workers);
}

GaussBonnetReport gauss_bonnet_check(const SupportCurve& curve, double tol, const std::string& curve_id, int workers) {
  GaussBonnetReport report;
  report.curve_id = curve_id;
  const std::vector<double> breaks = theta_breakpoints(curve, &report.swallowtails);
  report.strip_count = static_cast<int>(breaks.size()) - 1;
  report.boundary_null_points = extract_sigma(curve, 64).boundary_null_points;

  report.lhs = integrate_K_dA(curve, tol, workers);
  const QuadratureEstimate ks = integrate_ks_dtau(curve, tol, workers);
  report.rhs = {-2.0 * ks.value, 2.0 * ks.abs_error_estimate, ks.n_evaluations, ks.subdivisions};
  report.residual = std::abs(report.lhs.value - report.rhs.value);
  report.relative_residual =
      report.residual / std::max({1.0, std::abs(report.lhs.value), std::abs(report.rhs.value)});

  AdaptiveOptions opt;
  opt.abs_tol = tol;
  for (double alpha : {0.0, kPi}) {
    const double v =
        integrate_panels([&](double theta) { return kg_dtau_density(rho_jet(curve, theta).rho, alpha); }, breaks, opt, 1)
            .value;
    (alpha == 0.0 ? report.boundary_term_alpha0 : report.boundary_term_alpha_pi) = v;
  }
  return report;
}

}  // namespace curvelab
