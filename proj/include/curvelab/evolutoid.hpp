#pragma once

#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

/// An α-evolutoid request: the envelope of the tangent lines of `base`, each
/// rotated by α about its point of tangency. α ∈ [0, π].
struct EvolutoidSpec {
  Curve base;
  double alpha{0.0};

  EvolutoidSpec(Curve base_curve, double alpha_value);
};

struct EvolutoidSingularity {
  double param{0.0};
  double alpha{0.0};
  Vec2 location;
  bool is_cusp{false};
  /// |ρρ″ − ρ′²| (or its parametric analogue) fell under the cusp threshold.
  bool borderline{false};
  /// ρ′ₛ and ρ″ₛ at the point.
  double rho_s1{0.0};
  double rho_s2{0.0};
  /// Raw cusp criterion: ρρ″ − ρ′² (support) or 2κ′² − κκ″ (parametric).
  double cusp_value{0.0};
};

/// An oriented line through `point` with unit `direction`.
struct Line {
  Vec2 point;
  Vec2 direction;
};

/// γ_α = f + ρ sin α (cos α 𝕥 + sin α 𝕟). Returns f for α ∈ {0, π} and at
/// cusps of a parametric base (ρ → 0). Throws RegularityError at other
/// singular points and FlatError at zeros of the curvature.
Vec2 evolutoid_point(const EvolutoidSpec& spec, double param);

/// p_α(θ) = p(θ − α) cos α + p′(θ − α) sin α, in coefficient space.
TrigPoly evolutoid_support(const TrigPoly& p, double alpha);

/// g(θ) = ρ cos α + ρ′ sin α for support curves, κ² cos α − κ′ₛ sin α for
/// parametric ones; the zero set is the singular set of the α-evolutoid.
double evolutoid_singularity_function(const EvolutoidSpec& spec, double param);

/// All singular parameters of the α-evolutoid, α ∈ (0, π). Throws
/// DegenerateSingularSetError if the criterion vanishes on a subinterval.
std::vector<EvolutoidSingularity> singular_params(const EvolutoidSpec& spec);

/// Lines ℓ_{α,t₀} through every inflexion/undulation point of the base.
std::vector<Line> asymptote_lines(const ParamCurve& base, double alpha);

struct AreaIdentity {
  double lhs{0.0};
  double rhs{0.0};
  double residual{0.0};
  double area_curve{0.0};
  double area_evolute{0.0};
};

/// Ã(E_α) against Ã_C cos²α + Ã(E_{π/2}) sin²α, all by Parseval.
AreaIdentity area_identity(const SupportCurve& curve, double alpha);

struct Cor24Check {
  bool satisfied{false};
  /// Ã_C cos²α − Ã(E_α); ≥ 0, and 0 only for circles.
  double gap{0.0};
  bool is_circle{false};
};

/// Requires a 1-hedgehog and α ∈ (0, π).
Cor24Check check_cor24(const SupportCurve& curve, double alpha, double tolerance = 1e-10);

}  // namespace curvelab
