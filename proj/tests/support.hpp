#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "curvelab/curve.hpp"

namespace curvelab::test {

inline constexpr double kPi = std::numbers::pi;

inline SupportCurve oval() { return SupportCurve(TrigPoly(40.0, {{3, 3.0}}, {{2, -1.0}})); }
inline SupportCurve fig6a() { return SupportCurve(TrigPoly(20.0, {{5, 0.25}}, {{3, 1.0}, {2, 0.5}})); }
inline SupportCurve sin_k(int k) { return SupportCurve(TrigPoly(0.0, {}, {{k, 1.0}}), k); }
/// sin(2.5θ): harmonic 5 of frequency ½.
inline SupportCurve sin_2_5() { return SupportCurve(TrigPoly(0.0, {}, {{5, 1.0}}, 4.0 * kPi), 2.5); }
inline SupportCurve circle(double r, double cx = 0.0, double cy = 0.0) {
  return SupportCurve(TrigPoly(r, {{1, cx}}, {{1, cy}}));
}

/// (3 − cos 2φ)(cos φ, sin φ)
inline ParamCurve bean() {
  return ParamCurve({{}, {{1.0, 2.5}, {3.0, -0.5}}, {}}, {{}, {}, {{1.0, 3.5}, {3.0, -0.5}}}, 0.0, 2.0 * kPi, true);
}
inline ParamCurve model_cusp() { return ParamCurve({{0, 0, 1}, {}, {}}, {{0, 0, 0, 1}, {}, {}}, -1.0, 1.0, false); }
inline ParamCurve unit_circle_param(bool clockwise = false) {
  return ParamCurve({{}, {{1.0, 1.0}}, {}}, {{}, {}, {{1.0, clockwise ? -1.0 : 1.0}}}, 0.0, 2.0 * kPi, true);
}
/// y = x^k on [a, b]
inline ParamCurve monomial_graph(int k, double a = -1.0, double b = 1.0) {
  std::vector<double> y(static_cast<std::size_t>(k) + 1, 0.0);
  y.back() = 1.0;
  return ParamCurve({{0, 1}, {}, {}}, {y, {}, {}}, a, b, false);
}

inline std::string data_path(const std::string& name) { return std::string(CURVELAB_DATA_DIR) + "/" + name; }

/// Central differences of a vector-valued map; `order` 1 or 2.
template <typename F>
auto central(F&& f, double x, double h, int order) {
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace curvelab::test
