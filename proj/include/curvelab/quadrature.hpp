#pragma once

#include <functional>
#include <span>
#include <vector>

namespace curvelab {

struct QuadratureEstimate {
  double value{0.0};
  double abs_error_estimate{0.0};
  long n_evaluations{0};
  int subdivisions{0};
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_{0.0};
  double comp_{0.0};
};

struct GaussRule {
  std::vector<double> nodes;    // on [−1, 1]
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton on the Legendre recurrence), cached.
const GaussRule& gauss_legendre(int n);

struct AdaptiveOptions {
  /// Absolute tolerance for the whole interval; distributed by length.
  double abs_tol{1e-8};
  double rel_tol{0.0};
  int max_depth{48};
  int points{15};
};

/// Adaptive Gauss–Legendre: a panel is accepted when the rule on the panel
/// and on its two halves agree to the panel's share of the tolerance; the
/// halves' value is kept and |difference| is added to the error estimate.
QuadratureEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                      const AdaptiveOptions& options = {});

/// Integrates over consecutive panels [b0,b1], [b1,b2], … independently
/// (in parallel when `workers` > 1) and sums them in panel order.
QuadratureEstimate integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                    const AdaptiveOptions& options, int workers = 1);

}  // namespace curvelab
