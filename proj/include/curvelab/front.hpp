#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvelab/curve.hpp"

namespace curvelab {

enum class Region { plus, minus, singular };
std::string to_string(Region region);

/// One point of the extended front F(α, θ) = (α, γ_α(θ)) ∈ ℝ × ℝ².
struct FrontSample {
  double alpha{0.0};
  double theta{0.0};
  /// (α, x, y)
  Vec3 position;
  /// ν = (−ρ sin α, 𝕟(θ + α)) / √(1 + ρ² sin² α)
  Vec3 normal;
  /// λ = (ρ cos α + ρ′ sin α) √(1 + ρ² sin² α) = det(F_α, F_θ, ν)
  double lambda{0.0};
  Region region{Region::plus};
};

FrontSample front_sample(const SupportCurve& curve, double alpha, double theta);

/// The interior zero α_Σ(θ) ∈ (0, π) of ρ cos α + ρ′ sin α; 0 where ρ = 0.
double sigma_alpha(const SupportCurve& curve, double theta);

struct SigmaSample {
  double theta{0.0};
  double alpha{0.0};
  Vec3 position;
  Vec2 projected;
};

struct BoundaryNullPoint {
  double theta{0.0};
  /// 0 or π
  double alpha{0.0};
  /// Sector angle of the null point; recorded, not recomputed.
  double alpha_plus{0.0};
  /// F(alpha, theta)
  Vec3 position;
};

enum class FrontPointKind { cuspidal_edge, swallowtail, boundary_null };
std::string to_string(FrontPointKind kind);

/// negative at local maxima of α_Σ, positive at minima; `candidate` when ρ
/// changes sign somewhere, so the extremum need not be a peak.
enum class PeakSign { positive, negative, candidate, none };
std::string to_string(PeakSign sign);

struct SingularFrontPoint {
  double theta{0.0};
  double alpha{0.0};
  FrontPointKind kind{FrontPointKind::cuspidal_edge};
  PeakSign peak_sign{PeakSign::none};
  double rho{0.0};
  double rho1{0.0};
  double rho2{0.0};
  /// ρρ″ − ρ′²
  double criterion{0.0};
};

struct SigmaCurve {
  /// θ_i = i·P/n for i < n, P the closure period.
  std::vector<SigmaSample> samples;
  /// Two entries (α = 0 and α = π) per zero of ρ.
  std::vector<BoundaryNullPoint> boundary_null_points;
};

/// Samples Σ as the graph α_Σ(θ). Throws DegenerateSingularSetError when
/// ρρ″ − ρ′² vanishes on an interval (circles) and DegenerateSigmaPointError
/// where ρ and ρ′ vanish together.
SigmaCurve extract_sigma(const SupportCurve& curve, int n_samples = 4096);

/// Cuspidal edges at every interior sample with ρρ″ − ρ′² ≠ 0, swallowtails at
/// the critical points of α_Σ, and the boundary null points; sorted by θ.
/// Throws BorderlineClassification for a critical point without sign change.
std::vector<SingularFrontPoint> classify_sigma(const SigmaCurve& sigma, const SupportCurve& curve);

/// Only the swallowtail marks of classify_sigma, without the per-sample edges.
std::vector<SingularFrontPoint> swallowtails(const SupportCurve& curve);

/// θ at which the α-slice of λ changes sign, linearly interpolated between
/// the n_theta grid samples.
std::vector<double> front_slice_sign_changes(const SupportCurve& curve, double alpha, int n_theta);

struct ProjectionCheck {
  double hausdorff_distance{0.0};
  /// Largest distance between the two samples at the same θ.
  double matched_distance{0.0};
};

/// Symmetric Hausdorff distance between projected Σ samples and SES samples.
ProjectionCheck projection_check(const SupportCurve& curve, int n_samples = 4096);

struct FrontMesh {
  int n_alpha{0};
  int n_theta{0};
  /// Row-major in α: vertex (i, j) at index i·n_theta + j.
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;
  /// sign of λ: +1, −1 or 0
  std::vector<int> lambda_sign;
  /// Zero-based vertex indices, counter-clockwise in the (α, θ) chart.
  std::vector<std::array<int, 3>> triangles;
  /// Σ split into pieces at its jumps between α = 0 and α = π.
  std::vector<std::vector<Vec3>> sigma_polylines;
  std::vector<BoundaryNullPoint> boundary_null_points;
};

/// α ∈ [0, π] sampled inclusively, θ closed across the seam. Requires
/// n_alpha, n_theta ≥ 8.
FrontMesh mesh_front(const SupportCurve& curve, int n_alpha, int n_theta);

}  // namespace curvelab
