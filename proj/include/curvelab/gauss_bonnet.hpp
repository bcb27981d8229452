#pragma once

#include <string>
#include <vector>

#include "curvelab/curve.hpp"
#include "curvelab/front.hpp"
#include "curvelab/parallel.hpp"
#include "curvelab/quadrature.hpp"

namespace curvelab {

struct GeodesicCurvature {
  /// Geodesic curvature of the slice θ ↦ F(α, θ).
  double kg{0.0};
  /// κ_g dτ per dθ: −ρ sin α / √(1 + ρ² sin² α).
  double kg_dtau_density{0.0};
};

/// Throws OnSigmaError when λ(α, θ) vanishes.
GeodesicCurvature geodesic_curvature_form(const SupportCurve& curve, double alpha, double theta);

struct SingularCurvature {
  /// κ_s along Σ parameterized by θ, with η = ∂θ oriented so that (γ̂′, η) is
  /// positive: −N / (|ρρ″ − ρ′²| (1 + ρ²)^{3/2} √S).
  double ks{0.0};
  /// κ_s dτ per dθ: −N / ((1 + ρ²)(ρ² + ρ′²) √S).
  double ks_dtau_density{0.0};
  /// Variants with the opposite overall sign and, for the pointwise value,
  /// an extra 1/(ρ² + ρ′²) factor. They break the integral identity and are
  /// kept only for comparison.
  double alt_ks{0.0};
  double alt_ks_dtau_density{0.0};
};

/// N = ρ⁶ + ρ′⁴ − ρ⁴(ρ′² − 1) + 2ρ³ρ″ + 2ρ⁵ρ″ and S = ρ² + ρ⁴ + ρ′², all at θ.
/// Throws DegenerateSigmaPointError where ρρ″ − ρ′² = 0 (swallowtails).
SingularCurvature singular_curvature_form(const SupportCurve& curve, double theta);

/// The κ_s dτ density alone. Defined at swallowtails; finite where ρ = 0 as
/// long as ρ′ ≠ 0.
double ks_dtau_density(const SupportCurve& curve, double theta);

struct GaussianCurvature {
  /// (ρ cos α − ρ′ sin α) / ((1 + ρ² sin² α)² (ρ cos α + ρ′ sin α))
  double K{0.0};
  /// K |λ| = (ρ cos α − ρ′ sin α) sgn(λ) / (1 + ρ² sin² α)^{3/2}
  double K_dA_density{0.0};
};

/// Throws OnSigmaError when λ(α, θ) vanishes.
GaussianCurvature gaussian_curvature(const SupportCurve& curve, double alpha, double theta);

/// ∫∫ K dA over [0, π] × [0, P]. The α-integral is split at α_Σ(θ); the
/// θ-integral has panel boundaries at the zeros of ρ and at swallowtails.
QuadratureEstimate integrate_K_dA(const SupportCurve& curve, double tol = 1e-8, int workers = worker_count());

/// ∫ κ_s dτ over Σ, with the same θ-panels.
QuadratureEstimate integrate_ks_dtau(const SupportCurve& curve, double tol = 1e-8, int workers = worker_count());

struct GaussBonnetReport {
  std::string curve_id;
  QuadratureEstimate lhs;
  /// −2 ∫ κ_s dτ
  QuadratureEstimate rhs;
  double residual{0.0};
  /// |lhs − rhs| / max(1, |lhs|, |rhs|)
  double relative_residual{0.0};
  /// Number of θ-panels.
  int strip_count{0};
  std::vector<BoundaryNullPoint> boundary_null_points;
  std::vector<double> swallowtails;
  /// Geodesic-curvature terms along α = 0 and α = π; both vanish identically.
  double boundary_term_alpha0{0.0};
  double boundary_term_alpha_pi{0.0};
};

GaussBonnetReport gauss_bonnet_check(const SupportCurve& curve, double tol = 1e-8, const std::string& curve_id = "",
                                     int workers = worker_count());

}  // namespace curvelab
