#pragma once

#include <map>
#include <numbers>
#include <vector>

namespace curvelab {

/// Finite trigonometric polynomial
///
///     q(θ) = c + Σ_n a_n cos(n ω θ) + b_n sin(n ω θ),   ω = 2π / period,
///
/// with positive integer harmonics n. The period is 2π (ω = 1) or 4π (ω = 1/2,
/// used for hedgehogs whose support function is only anti-periodic over 2π).
/// Derivatives, phase shifts and the quadratic integrals used for lengths and
/// oriented areas are all evaluated in coefficient space.
class TrigPoly {
 public:
  using Coeffs = std::map<int, double>;

  TrigPoly() = default;
  TrigPoly(double constant, Coeffs cos_coeffs, Coeffs sin_coeffs,
           double period = 2.0 * std::numbers::pi);

  static TrigPoly constant_poly(double c, double period = 2.0 * std::numbers::pi) {
    return TrigPoly(c, {}, {}, period);
  }

  double constant() const noexcept { return constant_; }
  const Coeffs& cos_coeffs() const noexcept { return cos_; }
  const Coeffs& sin_coeffs() const noexcept { return sin_; }
  double period() const noexcept { return period_; }
  /// Fundamental angular frequency 2π / period.
  double frequency() const noexcept;
  int max_harmonic() const noexcept;

  double operator()(double theta) const { return value(theta, 0); }
  /// The `order`-th θ-derivative at θ.
  double value(double theta, int order = 0) const;
  /// (q, q′, …, q⁽ᵒʳᵈᵉʳ⁾) at θ in one pass.
  std::vector<double> jet(double theta, int order) const;

  TrigPoly derivative(int order = 1) const;
  /// θ ↦ q(θ − shift).
  TrigPoly shifted(double shift) const;
  TrigPoly scaled(double factor) const;
  TrigPoly operator+(const TrigPoly& other) const;

  /// ∫ q dθ over one period.
  double integral() const noexcept;
  /// ½ ∫ (q² − q′²) dθ over one period, by Parseval.
  double half_energy_difference() const noexcept;

  /// True when every coefficient of harmonic frequency ≠ 1 vanishes (|c| ≤ tol),
  /// i.e. q is a support function of a point or a circle.
  bool is_circle_like(double tol = 0.0) const noexcept;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  double constant_{0.0};
  Coeffs cos_;
  Coeffs sin_;
  double period_{2.0 * std::numbers::pi};
};

}  // namespace curvelab
