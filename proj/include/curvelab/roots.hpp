#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace curvelab {

/// A parameter interval; periodic intervals are scanned with wrap-around.
struct ParamDomain {
  double start{0.0};
  double end{0.0};
  bool periodic{false};

  double length() const noexcept { return end - start; }
  /// Reduce a periodic parameter into [start, end).
  double wrap(double x) const noexcept;
};

/// The package-wide "is zero" test: |v| ≤ 1e−9·(1 + scale).
inline double zero_tolerance(double scale) noexcept { return 1e-9 * (1.0 + scale); }

/// Uniform scan density: 4096 samples per 2π of parameter length.
int scan_samples_for(const ParamDomain& domain, int per_two_pi = 4096);

struct RootScanOptions {
  int samples{4096};
  double bisection_tol{1e-10};
  /// Detect zeros without a sign change (double roots, undulations).
  bool detect_touching{true};
  /// This many consecutive samples at zero tolerance mark the function as
  /// vanishing on a whole subinterval.
  int degenerate_run{16};
};

struct Root {
  double x{0.0};
  bool sign_change{true};
  /// f just left / right of the root (from the scan) and at the root.
  double left{0.0};
  double right{0.0};
  double value{0.0};
};

struct RootScan {
  std::vector<Root> roots;
  /// sup |f| over the scan samples.
  double scale{0.0};
  double tolerance{0.0};
  /// First interval on which f vanished at every sample, if any.
  std::optional<std::pair<double, double>> degenerate_interval;
  int sign_changes() const noexcept;
};

/// Locate the zeros of a scalar function on a domain: uniform scan,
/// sign-change bracketing, bisection to `bisection_tol` and a single Newton
/// polish when `derivative` is supplied. NaN samples break brackets (used to
/// mask parameters where the function is undefined). Roots are returned
/// sorted in [start, end).
RootScan scan_roots(const std::function<double(double)>& f, const ParamDomain& domain,
                    const RootScanOptions& options = {},
                    const std::function<double(double)>& derivative = nullptr);

}  // namespace curvelab
