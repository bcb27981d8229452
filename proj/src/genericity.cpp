#include "curvelab/genericity.hpp"

#include <algorithm>
#include <cmath>

#include "curvelab/errors.hpp"
#include "curvelab/ses.hpp"

namespace curvelab {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::degenerate_ses_singularity: return "degenerate_ses_singularity";
    case ViolationKind::undulation: return "undulation";
    case ViolationKind::degenerate_inflexion: return "degenerate_inflexion";
    case ViolationKind::front_not_transversal: return "front_not_transversal";
    case ViolationKind::degenerate_singular_set: return "degenerate_singular_set";
  }
  return "unknown";
}

char tag_of(ViolationKind kind) { return static_cast<char>('a' + static_cast<int>(kind)); }

bool GenericityReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; });
}

GenericityReport check_genericity(const Curve& curve) {
  GenericityReport report;
  auto& v = report.violations;

  try {
    for (const SesSingularity& s : ses_singularities(curve))
      if (s.kind == SesSingularityKind::degenerate)
        v.push_back({ViolationKind::degenerate_ses_singularity, s.param, {s.rho_s2, s.rho_s3}});
  } catch (const DegenerateSingularSetError& e) {
    v.push_back({ViolationKind::degenerate_singular_set, e.param(), {}});
  }

  if (const auto* c = std::get_if<ParamCurve>(&curve)) {
    for (const FlexPoint& f : inflexion_points(*c)) {
      if (f.kind == FlexKind::undulation) v.push_back({ViolationKind::undulation, f.param, {f.det13}});
      else if (!f.nondegenerate) v.push_back({ViolationKind::degenerate_inflexion, f.param, {f.det13}});
    }
  } else {
    const auto& s = std::get<SupportCurve>(curve);
    const TrigPoly& rho = s.radius_of_curvature();
    const TrigPoly drho = rho.derivative();
    RootScanOptions opt;
    opt.samples = scan_samples_for(s.domain());
    const RootScan zeros = scan_roots(rho, s.domain(), opt, drho);
    double slope_scale = 0.0;
    for (int i = 0; i <= 1024; ++i) slope_scale = std::max(slope_scale, std::abs(drho(s.closure_period() * i / 1024.0)));
    if (!zeros.degenerate_interval) {
      for (const Root& r : zeros.roots) {
        const double d = drho(r.x);
        if (std::abs(d) <= zero_tolerance(slope_scale) || !r.sign_change)
          v.push_back({ViolationKind::front_not_transversal, r.x, {rho(r.x), d}});
      }
    }
  }

  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.param < b.param;
  });

  auto& g = report.is_generic_for;
  const bool e = report.has(ViolationKind::degenerate_singular_set);
  const bool a = report.has(ViolationKind::degenerate_ses_singularity);
  const bool d = report.has(ViolationKind::front_not_transversal);
  g.evolutoid = !e;
  g.ses = !e && !a;
  g.front = !e && !a && !d;
  g.gauss_bonnet = g.front;
  return report;
}

}  // namespace curvelab
