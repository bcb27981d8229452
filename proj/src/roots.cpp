#include "curvelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace curvelab {

double ParamDomain::wrap(double x) const noexcept {
  if (!periodic) return x;
  const double len = length();
  double r = std::fmod(x - start, len);
  if (r < 0.0) r += len;
  if (r >= len) r -= len;
  return start + r;
}

int scan_samples_for(const ParamDomain& domain, int per_two_pi) {
  const double n = per_two_pi * domain.length() / (2.0 * std::numbers::pi);
  return std::max(per_two_pi, static_cast<int>(std::ceil(n)));
}

int RootScan::sign_changes() const noexcept {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [](const Root& r) { return r.sign_change; }));
}

namespace {

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double golden_min_abs(const std::function<double(double)>& f, double a, double b) {
  constexpr double g = 0.6180339887498949;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = std::abs(f(c));
  double fd = std::abs(f(d));
  for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = std::abs(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = std::abs(f(d));
    }
  }
  return fc < fd ? c : d;
}

}  // namespace

RootScan scan_roots(const std::function<double(double)>& f, const ParamDomain& domain,
                    const RootScanOptions& options, const std::function<double(double)>& derivative) {
  RootScan out;
  const int n = std::max(options.samples, 8);
  const double h = domain.length() / n;
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<double> fs(xs.size());
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = i == n ? domain.end : domain.start + i * h;
    fs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  if (domain.periodic) fs[static_cast<std::size_t>(n)] = fs[0];
  for (double v : fs)
    if (std::isfinite(v)) out.scale = std::max(out.scale, std::abs(v));
  out.tolerance = zero_tolerance(out.scale);

  // Whole subintervals at zero.
  {
    int run = 0;
    for (int i = 0; i <= n; ++i) {
      const double v = fs[static_cast<std::size_t>(i)];
      if (std::isfinite(v) && std::abs(v) <= out.tolerance) {
        if (++run >= options.degenerate_run) {
          out.degenerate_interval = std::make_pair(xs[static_cast<std::size_t>(i - run + 1)], xs[static_cast<std::size_t>(i)]);
          return out;
        }
      } else {
        run = 0;
      }
    }
  }

  const int last = domain.periodic ? n : n + 1;
  auto at = [&](int i) -> double {
    if (domain.periodic) return fs[static_cast<std::size_t>(((i % n) + n) % n)];
    if (i < 0 || i > n) return std::numeric_limits<double>::quiet_NaN();
    return fs[static_cast<std::size_t>(i)];
  };
  auto x_at = [&](int i) { return domain.start + i * h; };

  auto polish = [&](double x, double a, double b) {
    if (!derivative) return x;
    const double fx = f(x);
    const double d = derivative(x);
    if (!std::isfinite(d) || d == 0.0) return x;
    const double xn = x - fx / d;
    if (xn < std::min(a, b) || xn > std::max(a, b)) return x;
    return std::abs(f(xn)) <= std::abs(fx) ? xn : x;
  };

  for (int i = 0; i < last; ++i) {
    const double a = at(i);
    if (!std::isfinite(a)) continue;
    if (a == 0.0) {
      const double l = at(i - 1);
      const double r = at(i + 1);
      out.roots.push_back({x_at(i), std::isfinite(l) && std::isfinite(r) && l * r < 0.0, l, r, 0.0});
      continue;
    }
    if (i + 1 > n) continue;
    const double b = at(i + 1);
    if (!std::isfinite(b)) continue;
    if (a * b < 0.0) {
      const double xa = x_at(i);
      const double xb = x_at(i + 1);
      double x = bisect(f, xa, xb, a, options.bisection_tol);
      x = polish(x, xa, xb);
      out.roots.push_back({x, true, a, b, f(x)});
      continue;
    }
    if (!options.detect_touching || (i == 0 && !domain.periodic)) continue;
    const double l = at(i - 1);
    if (!std::isfinite(l) || l * a <= 0.0 || a * b <= 0.0) continue;
    const double m = std::abs(a);
    if (m <= std::abs(l) && m <= std::abs(b) && m <= 0.5 * std::max(std::abs(l), std::abs(b))) {
      const double x = golden_min_abs(f, x_at(i - 1), x_at(i + 1));
      const double fx = f(x);
      if (std::abs(fx) <= out.tolerance) out.roots.push_back({x, false, l, b, fx});
    }
  }

  for (auto& r : out.roots) r.x = domain.wrap(r.x);
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& p, const Root& q) { return p.x < q.x; });
  return out;
}

}  // namespace curvelab
