#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "curvelab/roots.hpp"
#include "curvelab/trig_poly.hpp"
#include "curvelab/vec.hpp"

namespace curvelab {

/// A hedgehog given by its support function p(θ).
///
/// The hedgehog map θ ↦ p(θ)(cos θ, sin θ) + p′(θ)(−sin θ, cos θ) closes after
/// one period of p (2π, or 4π for half-integer rotation numbers).
class SupportCurve {
 public:
  SupportCurve(TrigPoly support, double rotation = 1.0);

  const TrigPoly& support() const noexcept { return p_; }
  /// ρ = p + p″, exact.
  const TrigPoly& radius_of_curvature() const noexcept { return rho_; }
  double rotation() const noexcept { return rotation_; }
  double closure_period() const noexcept { return p_.period(); }
  ParamDomain domain() const noexcept { return {0.0, closure_period(), true}; }

  friend bool operator==(const SupportCurve& a, const SupportCurve& b) {
    return a.p_ == b.p_ && a.rotation_ == b.rotation_;
  }

 private:
  TrigPoly p_;
  TrigPoly rho_;
  double rotation_;
};

/// One coordinate of a parametric curve:
/// Σ poly[k] t^k + Σ_ω cos_terms[ω] cos(ωt) + sin_terms[ω] sin(ωt).
struct CoordinateMap {
  std::vector<double> poly;
  std::map<double, double> cos_terms;
  std::map<double, double> sin_terms;

  double value(double t, int order = 0) const;
  friend bool operator==(const CoordinateMap&, const CoordinateMap&) = default;
};

class ParamCurve {
 public:
  /// Throws PreconditionError if the domain is empty, or if `closed` is set
  /// but the value and first derivatives disagree at the two ends.
  ParamCurve(CoordinateMap x, CoordinateMap y, double t0, double t1, bool closed);

  const CoordinateMap& x_map() const noexcept { return x_; }
  const CoordinateMap& y_map() const noexcept { return y_; }
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  bool closed() const noexcept { return closed_; }
  ParamDomain domain() const noexcept { return {t0_, t1_, closed_}; }

  /// sup |γ′| over a coarse scan of the domain.
  double speed_scale() const noexcept { return speed_scale_; }

  Vec2 point(double t) const { return derivative(t, 0); }
  Vec2 derivative(double t, int order) const { return {x_.value(t, order), y_.value(t, order)}; }

  friend bool operator==(const ParamCurve&, const ParamCurve&) = default;

 private:
  CoordinateMap x_;
  CoordinateMap y_;
  double t0_;
  double t1_;
  bool closed_;
  double speed_scale_{0.0};
};

using Curve = std::variant<SupportCurve, ParamCurve>;

ParamDomain domain_of(const Curve& curve);

/// Evaluated differential data at one parameter.
///
/// For support curves the frame is the polar-tangential one,
/// 𝕥 = (−sin θ, cos θ), 𝕟 = (−cos θ, −sin θ), and κ = 1/ρ is signed.
/// The ρ-derivatives are with respect to arc length.
struct JetSample {
  double param{0.0};
  Vec2 point;
  Vec2 tangent;
  Vec2 normal;
  double kappa{0.0};
  double rho{0.0};
  double rho_s1{0.0};
  double rho_s2{0.0};
  double rho_s3{0.0};
};

/// θ-derivatives of ρ = p + p″ for a support curve.
struct RhoJet {
  double rho{0.0};
  double d1{0.0};
  double d2{0.0};
  double d3{0.0};
};

/// Arc-length curvature jet of a parametric curve. Finite at inflexions,
/// unlike the ρ-based JetSample.
struct CurvatureJet {
  double param{0.0};
  Vec2 point;
  Vec2 tangent;
  Vec2 normal;
  double speed{0.0};
  double kappa{0.0};
  double kappa_s1{0.0};
  double kappa_s2{0.0};
  double kappa_s3{0.0};
};

/// (p, p′, …, p⁽ᵒʳᵈᵉʳ⁾) at θ; order ≤ 6.
std::vector<double> support_jet(const SupportCurve& curve, double theta, int order);
Vec2 hedgehog_point(const SupportCurve& curve, double theta);
RhoJet rho_jet(const SupportCurve& curve, double theta);
JetSample support_sample(const SupportCurve& curve, double theta);

/// κ⁴ + κ′ₛ². Parametric criteria of homogeneous degree 4 in (κ, κ′ₛ, κ″ₛ, …)
/// are divided by it so they stay bounded next to cusps.
inline double kappa_weight(const CurvatureJet& j) {
  return j.kappa * j.kappa * j.kappa * j.kappa + j.kappa_s1 * j.kappa_s1;
}

/// Throws RegularityError if |γ′| is below tolerance.
CurvatureJet curvature_jet(const ParamCurve& curve, double t);
/// Throws RegularityError at singular points and FlatError where κ vanishes.
JetSample param_jet(const ParamCurve& curve, double t);
JetSample jet_sample(const Curve& curve, double param);

/// True when γ′(t) ≈ 0 with γ″, γ‴ linearly independent.
bool is_cusp_point(const ParamCurve& curve, double t);
/// |γ′| below which a parametric point is treated as singular.
double regularity_tolerance(const ParamCurve& curve);
/// Parameters where γ′ vanishes and the point is an ordinary cusp.
std::vector<double> cusp_params(const ParamCurve& curve);

/// Signed Cauchy length ∫ p dθ over the closure period.
double curve_length(const SupportCurve& curve);
/// ½∫(p² − p′²) dθ over the closure period, closed form via Parseval.
double oriented_area(const SupportCurve& curve);
/// ½∮(x dy − y dx) by adaptive quadrature. Throws NotClosedError.
double shoelace_area(const ParamCurve& curve);

/// The hedgehog map written as an exact parametric curve (trig terms in θ).
ParamCurve hedgehog_as_param(const SupportCurve& curve);

enum class FlexKind { inflexion, undulation };
std::string to_string(FlexKind kind);

struct FlexPoint {
  double param{0.0};
  FlexKind kind{FlexKind::inflexion};
  bool nondegenerate{true};
  /// det(γ′, γ‴) at the point.
  double det13{0.0};
};

/// Zeros of the curvature: sign change → inflexion, touch → undulation.
std::vector<FlexPoint> inflexion_points(const ParamCurve& curve);

}  // namespace curvelab
