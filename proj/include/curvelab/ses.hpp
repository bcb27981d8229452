#pragma once

#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

/// A point of the singular evolutoids set: the singular point of the
/// α-evolutoid at `param`, with α = arccot(−ρ′ₛ) ∈ (0, π).
struct SesPoint {
  double param{0.0};
  Vec2 location;
  /// 0 where ρ = 0 (hedgehog cusps and cusps of a parametric base).
  double alpha_of_param{0.0};
};

/// Support curves use f + ρ²(−ρ′𝕥 + ρ𝕟)/(ρ² + ρ′²); parametric curves use the
/// curvature form f + (κ′κ𝕥 + κ³𝕟)/(κ⁴ + κ′²), finite at inflexions. At a cusp
/// of a parametric base the value is a Richardson-extrapolated one-sided limit.
/// Throws FlatError where the denominator vanishes.
SesPoint ses_point(const Curve& curve, double param);

enum class SesSingularityKind { cusp, degenerate };
std::string to_string(SesSingularityKind kind);

struct SesSingularity {
  double param{0.0};
  Vec2 location;
  SesSingularityKind kind{SesSingularityKind::cusp};
  /// ρ″ₛ and ρ‴ₛ; zero at cusps of a parametric base, where they are undefined.
  double rho_s2{0.0};
  double rho_s3{0.0};
  /// θ- or t-derivative of ses_singularity_criterion at the point.
  double criterion_slope{0.0};
};

/// Zeros of ρ″ₛ, plus every cusp of a parametric base (which the set
/// inherits). Throws DegenerateSingularSetError when ρ″ₛ vanishes on a
/// subinterval (circles).
std::vector<SesSingularity> ses_singularities(const Curve& curve);

/// The criterion whose zeros are the singular points: ρρ″ − ρ′² for support
/// curves, (2κ′² − κκ″)/(κ⁴ + κ′²) for parametric ones (NaN at singular base
/// points).
double ses_singularity_criterion(const Curve& curve, double param);

struct SesFlex {
  double param{0.0};
  FlexKind kind{FlexKind::inflexion};
  bool nondegenerate{true};
  /// ρ′ₛ + ρ′ₛ³ − ρ²ρ‴ₛ
  double nondegeneracy_value{0.0};
};

/// Zeros of 1 + ρ′ₛ² + 2ρρ″ₛ. Same degeneracy rule as ses_singularities.
std::vector<SesFlex> ses_inflexions(const Curve& curve);

/// Closed form of the singular evolutoids set of t ↦ (t², t³).
enum class DenominatorReading {
  /// 4 + 81t² + 324t⁴ in the second component (matches the general formula).
  quartic,
  /// 4 + 81t² + 324t², the variant with a squared last term.
  as_printed,
};
Vec2 model_cusp_ses(double t, DenominatorReading reading = DenominatorReading::quartic);

}  // namespace curvelab
