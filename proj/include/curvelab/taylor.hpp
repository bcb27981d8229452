#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace curvelab {

/// Truncated Taylor series Σ c_k h^k, k < 8, about a fixed expansion point.
///
/// Used for exact (coefficient-level) differentiation of composite
/// expressions such as the arc-length derivatives of the curvature of a
/// parametric curve. Each `derivative()` loses one trailing coefficient.
class Taylor {
 public:
  static constexpr std::size_t kTerms = 8;

  constexpr Taylor() = default;
  constexpr explicit Taylor(double constant) { c_[0] = constant; }

  /// Series of a function given its derivatives f(t0), f'(t0), ...
  template <typename Derivs>
  static Taylor from_derivatives(const Derivs& d) {
    Taylor t;
    double fact = 1.0;
    for (std::size_t k = 0; k < kTerms; ++k) {
      if (k > 0) fact *= static_cast<double>(k);
      t.c_[k] = d[k] / fact;
    }
    return t;
  }

  constexpr double operator[](std::size_t k) const { return c_[k]; }
  constexpr double value() const { return c_[0]; }
  /// k-th derivative at the expansion point.
  double derivative_at(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c_[k] * fact;
  }

  Taylor derivative() const {
    Taylor r;
    for (std::size_t k = 0; k + 1 < kTerms; ++k) r.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
    return r;
  }

  friend Taylor operator+(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k < kTerms; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Taylor operator-(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k < kTerms; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend Taylor operator*(double s, const Taylor& a) {
    Taylor r;
    for (std::size_t k = 0; k < kTerms; ++k) r.c_[k] = s * a.c_[k];
    return r;
  }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k < kTerms; ++k)
      for (std::size_t i = 0; i <= k; ++i) r.c_[k] += a.c_[i] * b.c_[k - i];
    return r;
  }
  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (std::size_t k = 0; k < kTerms; ++k) {
      double s = a.c_[k];
      for (std::size_t i = 1; i <= k; ++i) s -= b.c_[i] * r.c_[k - i];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }
  friend Taylor sqrt(const Taylor& a) {
    Taylor r;
    r.c_[0] = std::sqrt(a.c_[0]);
    for (std::size_t k = 1; k < kTerms; ++k) {
      double s = a.c_[k];
      for (std::size_t i = 1; i < k; ++i) s -= r.c_[i] * r.c_[k - i];
      r.c_[k] = s / (2.0 * r.c_[0]);
    }
    return r;
  }

 private:
  std::array<double, kTerms> c_{};
};

}  // namespace curvelab
