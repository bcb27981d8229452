#include "curvelab/front.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "curvelab/errors.hpp"
#include "curvelab/parallel.hpp"
#include "curvelab/ses.hpp"

namespace curvelab {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 frame_normal(double phi) { return {-std::cos(phi), -std::sin(phi)}; }
Vec2 frame_tangent(double phi) { return {-std::sin(phi), std::cos(phi)}; }

double sup_abs(const std::function<double(double)>& f, const ParamDomain& d) {
  double s = 0.0;
  for (int i = 0; i <= 1024; ++i) s = std::max(s, std::abs(f(d.start + d.length() * i / 1024.0)));
  return s;
}

struct RhoZeros {
  std::vector<Root> roots;
  double slope_scale{0.0};
  bool positive{false};
};

RhoZeros rho_zeros(const SupportCurve& curve) {
  const TrigPoly& rho = curve.radius_of_curvature();
  const TrigPoly drho = rho.derivative();
  RootScanOptions opt;
  opt.samples = scan_samples_for(curve.domain());
  const RootScan scan = scan_roots(rho, curve.domain(), opt, drho);
  RhoZeros z;
  if (scan.degenerate_interval) throw DegenerateSigmaPointError("rho vanishes on an interval", scan.degenerate_interval->first);
  z.roots = scan.roots;
  z.slope_scale = sup_abs(drho, curve.domain());
  z.positive = z.roots.empty() && rho(0.0) > 0.0;
  return z;
}

std::vector<BoundaryNullPoint> boundary_nulls(const SupportCurve& curve, bool strict) {
  const RhoZeros z = rho_zeros(curve);
  const TrigPoly drho = curve.radius_of_curvature().derivative();
  std::vector<BoundaryNullPoint> out;
  for (const Root& r : z.roots) {
    if (strict && std::abs(drho(r.x)) <= zero_tolerance(z.slope_scale))
      throw DegenerateSigmaPointError("rho and rho' vanish together", r.x);
    for (double alpha : {0.0, kPi}) out.push_back({r.x, alpha, kPi / 2.0, front_sample(curve, alpha, r.x).position});
  }
  return out;
}

Vec2 evolutoid_at(const SupportCurve& curve, double rho, double alpha, double theta) {
  const double s = std::sin(alpha);
  return hedgehog_point(curve, theta) + rho * s * (std::cos(alpha) * frame_tangent(theta) + s * frame_normal(theta));
}

}  // namespace

std::string to_string(Region region) {
  switch (region) {
    case Region::plus: return "plus";
    case Region::minus: return "minus";
    case Region::singular: return "singular";
  }
  return "unknown";
}

std::string to_string(FrontPointKind kind) {
  switch (kind) {
    case FrontPointKind::cuspidal_edge: return "cuspidal_edge";
    case FrontPointKind::swallowtail: return "swallowtail";
    case FrontPointKind::boundary_null: return "boundary_null";
  }
  return "unknown";
}

std::string to_string(PeakSign sign) {
  switch (sign) {
    case PeakSign::positive: return "positive";
    case PeakSign::negative: return "negative";
    case PeakSign::candidate: return "candidate";
    case PeakSign::none: return "none";
  }
  return "unknown";
}

FrontSample front_sample(const SupportCurve& curve, double alpha, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double root = std::sqrt(1.0 + r.rho * r.rho * s * s);
  const double g = r.rho * c + r.d1 * s;
  FrontSample out;
  out.alpha = alpha;
  out.theta = theta;
  const Vec2 p = evolutoid_at(curve, r.rho, alpha, theta);
  out.position = {alpha, p.x, p.y};
  const Vec2 n = frame_normal(theta + alpha);
  out.normal = Vec3{-r.rho * s, n.x, n.y} / root;
  out.lambda = g * root;
  if (std::abs(g) <= 1e-12 * (1.0 + std::abs(r.rho) + std::abs(r.d1))) out.region = Region::singular;
  else out.region = g > 0.0 ? Region::plus : Region::minus;
  return out;
}

double sigma_alpha(const SupportCurve& curve, double theta) {
  const RhoJet r = rho_jet(curve, theta);
  const double a = std::fmod(std::atan2(r.rho, -r.d1), kPi);
  return a < 0.0 ? a + kPi : a;
}

std::vector<SingularFrontPoint> swallowtails(const SupportCurve& curve) {
  const ParamDomain dom = curve.domain();
  // α_Σ′ = (ρρ″ − ρ′²)/(ρ² + ρ′²)
  const auto slope = [&](double x) {
    const RhoJet r = rho_jet(curve, x);
    return (r.rho * r.d2 - r.d1 * r.d1) / (r.rho * r.rho + r.d1 * r.d1);
  };
  const auto curvature = [&](double x) {
    const RhoJet r = rho_jet(curve, x);
    return (r.rho * r.d3 - r.d1 * r.d2) / (r.rho * r.rho + r.d1 * r.d1);
  };
  RootScanOptions opt;
  opt.samples = scan_samples_for(dom);
  const RootScan scan = scan_roots(slope, dom, opt, curvature);
  if (scan.degenerate_interval)
    throw DegenerateSingularSetError("the singular set of the front degenerates on an interval",
                                     scan.degenerate_interval->first);
  const bool rosette = rho_zeros(curve).positive;
  std::vector<SingularFrontPoint> out;
  for (const Root& root : scan.roots) {
    if (!root.sign_change)
      throw BorderlineClassification("critical point of alpha_sigma without a sign change", root.x);
    const RhoJet r = rho_jet(curve, root.x);
    SingularFrontPoint p;
    p.theta = root.x;
    p.alpha = sigma_alpha(curve, root.x);
    p.kind = FrontPointKind::swallowtail;
    if (!rosette) p.peak_sign = PeakSign::candidate;
    else p.peak_sign = root.left > 0.0 ? PeakSign::negative : PeakSign::positive;
    p.rho = r.rho;
    p.rho1 = r.d1;
    p.rho2 = r.d2;
    p.criterion = r.rho * r.d2 - r.d1 * r.d1;
    out.push_back(p);
  }
  return out;
}

SigmaCurve extract_sigma(const SupportCurve& curve, int n_samples) {
  if (n_samples < 8) throw PreconditionError("extract_sigma needs at least 8 samples");
  SigmaCurve sigma;
  {
    RootScanOptions opt;
    opt.samples = scan_samples_for(curve.domain());
    opt.detect_touching = false;
    const auto h = [&](double x) {
      const RhoJet r = rho_jet(curve, x);
      return r.rho * r.d2 - r.d1 * r.d1;
    };
    const RootScan scan = scan_roots(h, curve.domain(), opt);
    if (scan.degenerate_interval)
      throw DegenerateSingularSetError("the singular set of the front degenerates on an interval",
                                       scan.degenerate_interval->first);
  }
  sigma.boundary_null_points = boundary_nulls(curve, true);

  const double period = curve.closure_period();
  sigma.samples.resize(static_cast<std::size_t>(n_samples));
  parallel_for(sigma.samples.size(), [&](std::size_t i) {
    const double theta = period * static_cast<double>(i) / n_samples;
    const double alpha = sigma_alpha(curve, theta);
    const FrontSample f = front_sample(curve, alpha, theta);
    sigma.samples[i] = {theta, alpha, f.position, {f.position.y, f.position.z}};
  });
  return sigma;
}

std::vector<SingularFrontPoint> classify_sigma(const SigmaCurve& sigma, const SupportCurve& curve) {
  const auto h = [&](double x) {
    const RhoJet r = rho_jet(curve, x);
    return r.rho * r.d2 - r.d1 * r.d1;
  };
  const double tol = zero_tolerance(sup_abs(h, curve.domain()));
  std::vector<SingularFrontPoint> out;
  for (const SigmaSample& s : sigma.samples) {
    if (!(s.alpha > 0.0 && s.alpha < kPi)) continue;
    const RhoJet r = rho_jet(curve, s.theta);
    const double crit = r.rho * r.d2 - r.d1 * r.d1;
    if (std::abs(crit) <= tol) continue;
    out.push_back({s.theta, s.alpha, FrontPointKind::cuspidal_edge, PeakSign::none, r.rho, r.d1, r.d2, crit});
  }
  for (const SingularFrontPoint& p : swallowtails(curve)) out.push_back(p);
  for (const BoundaryNullPoint& b : sigma.boundary_null_points) {
    const RhoJet r = rho_jet(curve, b.theta);
    out.push_back({b.theta, b.alpha, FrontPointKind::boundary_null, PeakSign::none, r.rho, r.d1, r.d2,
                   r.rho * r.d2 - r.d1 * r.d1});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.alpha < b.alpha;
  });
  return out;
}

std::vector<double> front_slice_sign_changes(const SupportCurve& curve, double alpha, int n_theta) {
  if (n_theta < 8) throw PreconditionError("front slice needs at least 8 samples");
  const double period = curve.closure_period();
  std::vector<double> lam(static_cast<std::size_t>(n_theta));
  for (int j = 0; j < n_theta; ++j) lam[static_cast<std::size_t>(j)] = front_sample(curve, alpha, period * j / n_theta).lambda;
  std::vector<double> out;
  for (int j = 0; j < n_theta; ++j) {
    const double a = lam[static_cast<std::size_t>(j)];
    const double b = lam[static_cast<std::size_t>((j + 1) % n_theta)];
    if (a == 0.0) {
      out.push_back(period * j / n_theta);
    } else if (a * b < 0.0) {
      out.push_back(period * (j + a / (a - b)) / n_theta);
    }
  }
  return out;
}

ProjectionCheck projection_check(const SupportCurve& curve, int n_samples) {
  const SigmaCurve sigma = extract_sigma(curve, n_samples);
  const std::size_t n = sigma.samples.size();
  std::vector<Vec2> ses(n);
  parallel_for(n, [&](std::size_t i) { ses[i] = ses_point(curve, sigma.samples[i].theta).location; });

  std::vector<double> to_ses(n);
  std::vector<double> to_sigma(n);
  parallel_for(n, [&](std::size_t i) {
    double a = std::numeric_limits<double>::infinity();
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      a = std::min(a, distance(sigma.samples[i].projected, ses[k]));
      b = std::min(b, distance(ses[i], sigma.samples[k].projected));
    }
    to_ses[i] = a;
    to_sigma[i] = b;
  });
  ProjectionCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    out.hausdorff_distance = std::max({out.hausdorff_distance, to_ses[i], to_sigma[i]});
    out.matched_distance = std::max(out.matched_distance, distance(sigma.samples[i].projected, ses[i]));
  }
  return out;
}

FrontMesh mesh_front(const SupportCurve& curve, int n_alpha, int n_theta) {
  if (n_alpha < 8 || n_theta < 8) throw PreconditionError("mesh grid must be at least 8 x 8");
  FrontMesh mesh;
  mesh.n_alpha = n_alpha;
  mesh.n_theta = n_theta;
  const std::size_t nv = static_cast<std::size_t>(n_alpha) * static_cast<std::size_t>(n_theta);
  mesh.vertices.resize(nv);
  mesh.normals.resize(nv);
  mesh.lambda_sign.resize(nv);
  const double period = curve.closure_period();
  parallel_for(nv, [&](std::size_t k) {
    const int i = static_cast<int>(k) / n_theta;
    const int j = static_cast<int>(k) % n_theta;
    const double alpha = i == n_alpha - 1 ? kPi : kPi * i / (n_alpha - 1);
    const FrontSample f = front_sample(curve, alpha, period * j / n_theta);
    mesh.vertices[k] = f.position;
    mesh.normals[k] = f.normal;
    mesh.lambda_sign[k] = f.region == Region::singular ? 0 : (f.region == Region::plus ? 1 : -1);
  });

  const auto idx = [n_theta](int i, int j) { return i * n_theta + (j % n_theta); };
  for (int i = 0; i + 1 < n_alpha; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      mesh.triangles.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)});
      mesh.triangles.push_back({idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)});
    }
  }

  std::vector<Vec3> piece;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int j = 0; j <= n_theta; ++j) {
    const double theta = period * j / n_theta;
    const double alpha = sigma_alpha(curve, theta);
    if (!piece.empty() && std::abs(alpha - prev) > kPi / 2.0) {
      if (piece.size() > 1) mesh.sigma_polylines.push_back(std::move(piece));
      piece.clear();
    }
    piece.push_back(front_sample(curve, alpha, theta).position);
    prev = alpha;
  }
  if (piece.size() > 1) mesh.sigma_polylines.push_back(std::move(piece));
  mesh.boundary_null_points = boundary_nulls(curve, false);
  return mesh;
}

}  // namespace curvelab
