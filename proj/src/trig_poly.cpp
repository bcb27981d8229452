#include "curvelab/trig_poly.hpp"

#include <algorithm>
#include <cmath>

#include "curvelab/errors.hpp"

namespace curvelab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool valid_period(double period) {
  return std::abs(period - kTwoPi) < 1e-12 || std::abs(period - 2.0 * kTwoPi) < 1e-12;
}

// d^k/dx^k of (a cos x + b sin x) expressed again as (a' cos x + b' sin x),
// for unit frequency. The cycle is exact: no phase arithmetic.
void rotate_derivative(double a, double b, int k, double& out_a, double& out_b) {
  switch (k & 3) {
    case 0: out_a = a; out_b = b; break;
    case 1: out_a = b; out_b = -a; break;
    case 2: out_a = -a; out_b = -b; break;
    default: out_a = -b; out_b = a; break;
  }
}

}  // namespace

TrigPoly::TrigPoly(double constant, Coeffs cos_coeffs, Coeffs sin_coeffs, double period)
    : constant_(constant), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)), period_(period) {
  if (!valid_period(period)) throw PreconditionError("TrigPoly period must be 2*pi or 4*pi");
  if (std::abs(period - kTwoPi) < 1e-12) period_ = kTwoPi;
  else period_ = 2.0 * kTwoPi;
  for (const auto* table : {&cos_, &sin_})
    for (const auto& [n, c] : *table)
      if (n <= 0) throw PreconditionError("TrigPoly harmonics must be positive integers");
}

double TrigPoly::frequency() const noexcept { return kTwoPi / period_; }

int TrigPoly::max_harmonic() const noexcept {
  int m = 0;
  if (!cos_.empty()) m = std::max(m, cos_.rbegin()->first);
  if (!sin_.empty()) m = std::max(m, sin_.rbegin()->first);
  return m;
}

double TrigPoly::value(double theta, int order) const {
  double v = order == 0 ? constant_ : 0.0;
  const double w = frequency();
  auto add = [&](int n, double a, double b) {
    const double f = n * w;
    double da = 0.0;
    double db = 0.0;
    rotate_derivative(a, b, order, da, db);
    v += std::pow(f, order) * (da * std::cos(f * theta) + db * std::sin(f * theta));
  };
  for (const auto& [n, a] : cos_) add(n, a, 0.0);
  for (const auto& [n, b] : sin_) add(n, 0.0, b);
  return v;
}

std::vector<double> TrigPoly::jet(double theta, int order) const {
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  out[0] = constant_;
  const double w = frequency();
  auto add = [&](int n, double a, double b) {
    const double f = n * w;
    const double c = std::cos(f * theta);
    const double s = std::sin(f * theta);
    double scale = 1.0;
    for (int k = 0; k <= order; ++k) {
      double da = 0.0;
      double db = 0.0;
      rotate_derivative(a, b, k, da, db);
      out[static_cast<std::size_t>(k)] += scale * (da * c + db * s);
      scale *= f;
    }
  };
  for (const auto& [n, a] : cos_) add(n, a, 0.0);
  for (const auto& [n, b] : sin_) add(n, 0.0, b);
  return out;
}

TrigPoly TrigPoly::derivative(int order) const {
  const double w = frequency();
  Coeffs c;
  Coeffs s;
  auto add = [&](int n, double a, double b) {
    const double scale = std::pow(n * w, order);
    double da = 0.0;
    double db = 0.0;
    rotate_derivative(a, b, order, da, db);
    if (da != 0.0) c[n] += scale * da;
    if (db != 0.0) s[n] += scale * db;
  };
  for (const auto& [n, a] : cos_) add(n, a, 0.0);
  for (const auto& [n, b] : sin_) add(n, 0.0, b);
  return TrigPoly(order == 0 ? constant_ : 0.0, std::move(c), std::move(s), period_);
}

TrigPoly TrigPoly::shifted(double shift) const {
  // cos(f(θ−φ)) = cos fθ cos fφ + sin fθ sin fφ
  // sin(f(θ−φ)) = sin fθ cos fφ − cos fθ sin fφ
  const double w = frequency();
  Coeffs c;
  Coeffs s;
  auto add = [&](int n, double a, double b) {
    const double cf = std::cos(n * w * shift);
    const double sf = std::sin(n * w * shift);
    c[n] += a * cf - b * sf;
    s[n] += a * sf + b * cf;
  };
  for (const auto& [n, a] : cos_) add(n, a, 0.0);
  for (const auto& [n, b] : sin_) add(n, 0.0, b);
  return TrigPoly(constant_, std::move(c), std::move(s), period_);
}

TrigPoly TrigPoly::scaled(double factor) const {
  Coeffs c = cos_;
  Coeffs s = sin_;
  for (auto& [n, a] : c) a *= factor;
  for (auto& [n, b] : s) b *= factor;
  return TrigPoly(constant_ * factor, std::move(c), std::move(s), period_);
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  if (period_ != other.period_) throw PreconditionError("TrigPoly sum with mismatched periods");
  Coeffs c = cos_;
  Coeffs s = sin_;
  for (const auto& [n, a] : other.cos_) c[n] += a;
  for (const auto& [n, b] : other.sin_) s[n] += b;
  return TrigPoly(constant_ + other.constant_, std::move(c), std::move(s), period_);
}

double TrigPoly::integral() const noexcept { return period_ * constant_; }

double TrigPoly::half_energy_difference() const noexcept {
  // ∫ cos²(fθ) over a period is P/2, cross terms vanish.
  const double w = frequency();
  double harmonics = 0.0;
  auto add = [&](int n, double a) {
    const double f = n * w;
    harmonics += (1.0 - f * f) * a * a;
  };
  for (const auto& [n, a] : cos_) add(n, a);
  for (const auto& [n, b] : sin_) add(n, b);
  return 0.5 * period_ * constant_ * constant_ + 0.25 * period_ * harmonics;
}

bool TrigPoly::is_circle_like(double tol) const noexcept {
  const double w = frequency();
  auto ok = [&](const Coeffs& t) {
    return std::all_of(t.begin(), t.end(), [&](const auto& kv) {
      return std::abs(kv.first * w - 1.0) < 1e-12 || std::abs(kv.second) <= tol;
    });
  };
  return ok(cos_) && ok(sin_);
}

}  // namespace curvelab
