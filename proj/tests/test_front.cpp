#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "curvelab/errors.hpp"
#include "curvelab/evolutoid.hpp"
#include "curvelab/front.hpp"
#include "curvelab/ses.hpp"

using namespace curvelab;
using namespace curvelab::test;
using doctest::Approx;

namespace {

Vec3 position(const SupportCurve& c, double a, double t) { return front_sample(c, a, t).position; }

}  // namespace

TEST_CASE("front_sample") {
  const FrontSample a = front_sample(circle(1.0), 0.0, 0.0);
  CHECK(a.lambda == Approx(1.0));
  CHECK(a.region == Region::plus);

  for (double t : {0.0, 2.0}) {
    const FrontSample b = front_sample(circle(1.0), kPi / 2, t);
    CHECK(std::abs(b.lambda) < 1e-12);
    CHECK(b.region == Region::singular);
  }

  const FrontSample o = front_sample(oval(), kPi / 4, 0.0);
  CHECK(o.lambda == Approx(11.0 * std::sqrt(2.0) * std::sqrt(129.0)).epsilon(1e-13));
  CHECK(o.position.x == kPi / 4);
  CHECK(norm(o.normal) == Approx(1.0).epsilon(1e-14));

  const FrontSample m = front_sample(oval(), 2.8, 1.0);
  CHECK(m.region == (m.lambda > 0 ? Region::plus : Region::minus));
}

TEST_CASE("sigma_alpha and extract_sigma") {
  CHECK(sigma_alpha(oval(), 0.0) == Approx(std::atan2(16.0, -6.0)).epsilon(1e-14));
  CHECK_THROWS_AS(extract_sigma(circle(2.0)), DegenerateSingularSetError);

  const SigmaCurve s3 = extract_sigma(sin_k(3), 512);
  bool at_zero = false;
  for (const BoundaryNullPoint& b : s3.boundary_null_points)
    if (std::abs(b.theta) < 1e-12 || std::abs(b.theta - 2 * kPi) < 1e-12) at_zero = true;
  CHECK(at_zero);
  CHECK(s3.boundary_null_points.size() == 12);
  for (const BoundaryNullPoint& b : s3.boundary_null_points) {
    CHECK((b.alpha == 0.0 || b.alpha == kPi));
    CHECK(b.alpha_plus == Approx(kPi / 2));
  }
}

TEST_CASE("lambda vanishes along sigma and sigma is a graph") {
  for (const SupportCurve& c : {oval(), fig6a(), sin_k(2), sin_2_5()}) {
    const SigmaCurve s = extract_sigma(c, 1024);
    REQUIRE(s.samples.size() == 1024);
    for (const SigmaSample& p : s.samples) {
      const RhoJet r = rho_jet(c, p.theta);
      const double g = r.rho * std::cos(p.alpha) + r.d1 * std::sin(p.alpha);
      CHECK(std::abs(g) <= 1e-10 * (1.0 + std::abs(r.rho) + std::abs(r.d1)));
      if (std::abs(r.rho) > 1e-9) {
        CHECK(p.alpha > 0.0);
        CHECK(p.alpha < kPi);
      }
    }
    // exactly one interior sign change of λ along α for fixed θ
    for (int i = 0; i < 64; ++i) {
      const double t = c.closure_period() * (i + 0.37) / 64;
      int changes = 0;
      double prev = front_sample(c, 1e-9, t).lambda;
      for (int k = 1; k <= 2000; ++k) {
        const double v = front_sample(c, kPi * k / 2000 - (k == 2000 ? 1e-9 : 0.0), t).lambda;
        changes += (v > 0) != (prev > 0);
        prev = v;
      }
      CHECK(changes == 1);
    }
  }
}

TEST_CASE("the front is Legendrian") {
  for (const SupportCurve& c : {oval(), sin_k(3)}) {
    for (double a = 0.1; a < 3.1; a += 0.37) {
      for (double t = 0.05; t < 6.2; t += 0.29) {
        const FrontSample s = front_sample(c, a, t);
        const double h = 1e-5;
        const Vec3 fa = (position(c, a + h, t) - position(c, a - h, t)) / (2 * h);
        const Vec3 ft = (position(c, a, t + h) - position(c, a, t - h)) / (2 * h);
        const double scale = 1.0 + norm(fa) + norm(ft);
        CHECK(std::abs(dot(s.normal, fa)) <= 1e-8 * scale);
        CHECK(std::abs(dot(s.normal, ft)) <= 1e-8 * scale);
      }
    }
  }
}

TEST_CASE("the kernel of dF on sigma is the theta direction") {
  const SupportCurve c = oval();
  for (double t = 0.2; t < 6.2; t += 0.8) {
    const double a = sigma_alpha(c, t);
    const double h = 1e-6;
    const Vec3 ft = (position(c, a, t + h) - position(c, a, t - h)) / (2 * h);
    const Vec3 fa = (position(c, a + h, t) - position(c, a - h, t)) / (2 * h);
    CHECK(norm(ft) < 1e-6);
    CHECK(norm(fa) > 1.0);
  }
}

TEST_CASE("classify_sigma on the oval") {
  const SupportCurve c = oval();
  const auto marks = classify_sigma(extract_sigma(c), c);
  std::vector<SingularFrontPoint> tails;
  for (const auto& m : marks)
    if (m.kind == FrontPointKind::swallowtail) tails.push_back(m);
  const auto ses = ses_singularities(Curve(c));
  REQUIRE(tails.size() == ses.size());
  for (std::size_t i = 0; i < tails.size(); ++i) CHECK(std::abs(tails[i].theta - ses[i].param) < 1e-8);
  for (const auto& m : marks) {
    if (m.kind == FrontPointKind::cuspidal_edge) CHECK(std::abs(m.criterion) > 0.0);
    if (m.kind == FrontPointKind::swallowtail) {
      CHECK(std::abs(m.criterion) <= 1e-6 * (m.rho * m.rho + m.rho1 * m.rho1));
      CHECK(m.peak_sign != PeakSign::none);
    }
  }
  CHECK(std::is_sorted(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.theta < b.theta; }));
  CHECK(swallowtails(c).size() == tails.size());
}

TEST_CASE("peaks alternate on the rosette") {
  const auto tails = swallowtails(fig6a());
  REQUIRE(tails.size() >= 2);
  CHECK(tails.size() % 2 == 0);
  for (std::size_t i = 0; i < tails.size(); ++i) {
    const auto& a = tails[i];
    const auto& b = tails[(i + 1) % tails.size()];
    CHECK(a.peak_sign != PeakSign::candidate);
    CHECK(a.peak_sign != b.peak_sign);
    // negative at local maxima of α_Σ
    const double here = sigma_alpha(fig6a(), a.theta);
    const bool is_max = here > sigma_alpha(fig6a(), a.theta + 1e-3) && here > sigma_alpha(fig6a(), a.theta - 1e-3);
    CHECK((a.peak_sign == PeakSign::negative) == is_max);
  }
  // singular hedgehogs only get candidate marks
  for (const auto& m : swallowtails(sin_k(3))) CHECK(m.peak_sign == PeakSign::candidate);
}

TEST_CASE("projection of sigma is the singular evolutoids set") {
  const SupportCurve c = oval();
  const ProjectionCheck p = projection_check(c, 1024);
  CHECK(p.hausdorff_distance < 1e-6 * 86.0);
  CHECK(p.matched_distance < 1e-9);
  const SigmaCurve s = extract_sigma(c, 256);
  for (const SigmaSample& x : s.samples) {
    CHECK(distance(x.projected, ses_point(Curve(c), x.theta).location) < 1e-9);
    CHECK(x.position.x == x.alpha);
  }
}

TEST_CASE("mesh_front") {
  const FrontMesh m = mesh_front(circle(1.0), 16, 16);
  CHECK(m.vertices.size() == 256);
  CHECK(m.normals.size() == 256);
  // closed in θ: every vertex used, 2·(n_alpha − 1)·n_theta triangles
  CHECK(m.triangles.size() == 2u * 15u * 16u);
  CHECK(m.vertices.front().x == 0.0);
  CHECK(m.vertices.back().x == Approx(kPi));
  CHECK_THROWS_AS(mesh_front(oval(), 7, 16), PreconditionError);

  const FrontMesh s = mesh_front(sin_k(2), 64, 256);
  for (const auto& tri : s.triangles)
    for (int v : tri) CHECK(norm(s.normals[static_cast<std::size_t>(v)]) == Approx(1.0).epsilon(1e-12));
  std::set<long> thetas;
  for (const BoundaryNullPoint& b : s.boundary_null_points) thetas.insert(std::lround(b.theta * 1e9) % std::lround(2 * kPi * 1e9));
  CHECK(thetas.size() == 4);
  CHECK_FALSE(s.sigma_polylines.empty());
}

TEST_CASE("front slices match the evolutoid singular points") {
  const SupportCurve c = oval();
  for (double a : {kPi / 6, kPi / 2}) {
    const auto slice = front_slice_sign_changes(c, a, 4096);
    const auto sing = singular_params(EvolutoidSpec(c, a));
    REQUIRE(slice.size() == sing.size());
    for (std::size_t i = 0; i < slice.size(); ++i) CHECK(std::abs(slice[i] - sing[i].param) < 1e-3);
  }
}
