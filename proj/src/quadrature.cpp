#include "curvelab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "curvelab/errors.hpp"
#include "curvelab/parallel.hpp"

namespace curvelab {

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) comp_ += (sum_ - t) + v;
  else comp_ += (v - t) + sum_;
  sum_ = t;
}

namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

struct Panel {
  double value;
  double error;
};

class Adaptive {
 public:
  Adaptive(const std::function<double(double)>& f, double total_length, const AdaptiveOptions& opt)
      : f_(f), rule_(gauss_legendre(opt.points)), total_(total_length), opt_(opt) {}

  double apply(double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    CompensatedSum s;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) s.add(rule_.weights[i] * f_(c + h * rule_.nodes[i]));
    evaluations_ += static_cast<long>(rule_.nodes.size());
    return h * s.value();
  }

  void run(double a, double b, double coarse, int depth) {
    const double m = 0.5 * (a + b);
    const double left = apply(a, m);
    const double right = apply(m, b);
    const double fine = left + right;
    const double err = std::abs(fine - coarse);
    const double tol = std::max(opt_.abs_tol * (b - a) / total_, opt_.rel_tol * std::abs(fine));
    if (err <= tol || depth >= opt_.max_depth || !std::isfinite(err)) {
      panels_.push_back({fine, err});
      return;
    }
    ++subdivisions_;
    run(a, m, left, depth + 1);
    run(m, b, right, depth + 1);
  }

  QuadratureEstimate result() const {
    CompensatedSum v;
    CompensatedSum e;
    for (const auto& p : panels_) {
      v.add(p.value);
      e.add(p.error);
    }
    return {v.value(), e.value(), evaluations_, subdivisions_};
  }

 private:
  const std::function<double(double)>& f_;
  const GaussRule& rule_;
  double total_;
  AdaptiveOptions opt_;
  std::vector<Panel> panels_;
  long evaluations_{0};
  int subdivisions_{0};
};

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

QuadratureEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                      const AdaptiveOptions& options) {
  if (!(b > a)) return {};
  Adaptive ad(f, b - a, options);
  ad.run(a, b, ad.apply(a, b), 0);
  return ad.result();
}

QuadratureEstimate integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                                    const AdaptiveOptions& options, int workers) {
  if (breakpoints.size() < 2) return {};
  const double total = breakpoints.back() - breakpoints.front();
  std::vector<QuadratureEstimate> parts(breakpoints.size() - 1);
  parallel_for(
      parts.size(),
      [&](std::size_t i) {
        AdaptiveOptions local = options;
        local.abs_tol = options.abs_tol * (breakpoints[i + 1] - breakpoints[i]) / total;
        parts[i] = integrate_adaptive(f, breakpoints[i], breakpoints[i + 1], local);
      },
      workers);
  QuadratureEstimate out;
  CompensatedSum v;
  CompensatedSum e;
  for (const auto& p : parts) {
    v.add(p.value);
    e.add(p.abs_error_estimate);
    out.n_evaluations += p.n_evaluations;
    out.subdivisions += p.subdivisions;
  }
  out.value = v.value();
  out.abs_error_estimate = e.value();
  return out;
}

}  // namespace curvelab
