#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rolle/curves.hpp>
#include <rolle/oracle.hpp>
#include <rolle/rng.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace rolle;

namespace {

const double kPi = std::acos(-1.0);

// Independent length oracle: polyline of spherical chord distances. It
// converges to the projection length from below, with no quadrature shared
// with the library path.
double polyline_sphere_length(const CurveSampler& c, unsigned cells) {
  double acc = 0;
  auto prev = c.position(c.t0);
  for (unsigned i = 1; i <= cells; ++i) {
    auto cur = c.position(c.t0 + (c.t1 - c.t0) * i / cells);
    acc += spherical_distance(prev, cur);
    prev = cur;
  }
  return acc;
}

// Independent oracle for planar curves: accumulated change of the polar
// angle of x(t), which is exactly the projection length in the plane.
double angle_winding(const CurveSampler& c, unsigned cells) {
  double acc = 0;
  auto x = c.position(c.t0);
  double prev = std::atan2(x[1], x[0]);
  for (unsigned i = 1; i <= cells; ++i) {
    auto y = c.position(c.t0 + (c.t1 - c.t0) * i / cells);
    const double a = std::atan2(y[1], y[0]);
    double d = a - prev;
    while (d > kPi) d -= 2 * kPi;
    while (d < -kPi) d += 2 * kPi;
    acc += std::abs(d);
    prev = a;
  }
  return acc;
}

// Sign changes of <normal, x(t)> - offset on a fine grid: intersections with
// an affine hyperplane, counted independently of the certified code path.
long affine_hits(const CurveSampler& c, const std::vector<double>& normal, double offset,
                 unsigned grid) {
  long hits = 0;
  int prev = 0;
  for (unsigned i = 0; i <= grid; ++i) {
    auto x = c.position(c.t0 + (c.t1 - c.t0) * i / grid);
    double d = -offset;
    for (size_t k = 0; k < x.size(); ++k) d += normal[k] * x[k];
    const int s = d > 0 ? 1 : d < 0 ? -1 : 0;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++hits;
    prev = s;
  }
  return hits;
}

// Worst affine-hyperplane hit count over `planes` random normals with
// offsets drawn inside the sampled range of the projection.
long worst_affine_hits(const CurveSampler& c, CounterRng& rng, int planes, unsigned grid) {
  long worst = 0;
  for (int j = 0; j < planes; ++j) {
    const auto n = rng.unit_vector(c.dim);
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i <= 64; ++i) {
      auto x = c.position(c.t0 + (c.t1 - c.t0) * i / 64);
      double d = 0;
      for (size_t k = 0; k < x.size(); ++k) d += n[k] * x[k];
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    worst = std::max(worst, affine_hits(c, n, rng.uniform(lo, hi), grid));
  }
  return worst;
}

// Closed trigonometric-polynomial curve with integer frequencies <= 3 and a
// constant offset large enough to keep it away from the origin.
CurveSampler random_closed_trig(CounterRng& rng, size_t dim) {
  std::vector<TrigCoord> coords(dim);
  double total_amp = 0;
  for (auto& c : coords) {
    for (long f = 1; f <= 3; ++f) {
      if (rng.uniform01() < 0.6) continue;
      c.harmonics.push_back({static_cast<double>(f), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    }
    if (c.harmonics.empty())
      c.harmonics.push_back({1.0, rng.uniform(0.3, 1.0), rng.uniform(-1.0, -0.3)});
    for (const auto& h : c.harmonics) total_amp += std::hypot(h.a, h.b);
  }
  coords[0].c0 = total_amp + 1 + rng.uniform01();
  return make_trig_curve(std::move(coords), 0, 2 * kPi, true, "corpus-closed");
}

// Open variant: same harmonics plus a linear drift in the last coordinate.
CurveSampler random_open_trig(CounterRng& rng, size_t dim) {
  std::vector<TrigCoord> coords(dim);
  double total_amp = 0;
  for (auto& c : coords) {
    for (long f = 1; f <= 3; ++f) {
      if (rng.uniform01() < 0.6) continue;
      c.harmonics.push_back({static_cast<double>(f), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    }
    if (c.harmonics.empty()) c.harmonics.push_back({2.0, rng.uniform(0.3, 1.0), 0.0});
    for (const auto& h : c.harmonics) total_amp += std::hypot(h.a, h.b);
  }
  coords[0].c0 = total_amp + 1 + rng.uniform01();
  coords[dim - 1].c1 = rng.uniform(0.2, 1.0);
  return make_trig_curve(std::move(coords), 0, 2 * kPi, false, "corpus-open");
}

CurveSampler planar_segment() {
  std::vector<UniPoly> coords{UniPoly(std::vector<Rational>{Rational(1), Rational(2)}),
                              UniPoly(std::vector<Rational>{Rational(0), Rational(1)})};
  return make_poly_curve(std::move(coords), 0, 1, "segment");
}

}  // namespace

TEST_CASE("spherical projection lengths: circle, ray, ellipse") {
  // One turn of the unit circle projects to itself.
  CHECK(spherical_length(make_circle()) == doctest::Approx(2 * kPi).epsilon(1e-9));

  // A radial ray has a constant projection, hence zero length.
  std::vector<UniPoly> ray{UniPoly(std::vector<Rational>{Rational(0), Rational(1)}), UniPoly()};
  CHECK(spherical_length(make_poly_curve(std::move(ray), 1, 2, "ray")) <= 1e-12);

  // The ellipse (2cos t, sin t) winds around the origin once and its polar
  // angle moves monotonically, so the projection length is exactly one turn.
  // Cross-checked against the accumulated-angle oracle and the polyline
  // oracle, neither of which shares the quadrature.
  const auto ell = make_ellipse(2, 1);
  const double quad = spherical_length(ell);
  CHECK(quad == doctest::Approx(2 * kPi).epsilon(1e-8));
  CHECK(quad == doctest::Approx(angle_winding(ell, 40000)).epsilon(1e-8));
  CHECK(quad == doctest::Approx(polyline_sphere_length(ell, 40000)).epsilon(1e-7));

  // A segment through the origin has no projection there.
  std::vector<UniPoly> bad{UniPoly(std::vector<Rational>{Rational(0), Rational(1)}), UniPoly()};
  CHECK_THROWS_AS(spherical_length(make_poly_curve(std::move(bad), -1, 1, "through-origin")),
                  std::runtime_error);
}

TEST_CASE("rotation comparison with the velocity hodograph") {
  // Closed circle: both projections are one full turn, and each endpoint
  // pairs the position with the orthogonal velocity, a quarter turn apart.
  const RotationReport circle = rolle_rn_check(make_circle());
  CHECK(circle.closed);
  CHECK(circle.curve_rotation == doctest::Approx(2 * kPi).epsilon(1e-9));
  CHECK(circle.hodograph_rotation == doctest::Approx(2 * kPi).epsilon(1e-9));
  CHECK(circle.dist_start == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(circle.dist_end == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(circle.sharp_holds);
  CHECK(circle.slack_holds);

  // Open helix over one period. The hodograph traces a horizontal circle at
  // height 1/sqrt(2) on the unit sphere, of length pi*sqrt(2); the curve's
  // own projection is shorter, as the comparison demands.
  const auto helix = make_helix(1.0, 0, 2 * kPi);
  const RotationReport rep = rolle_rn_check(helix);
  CHECK_FALSE(rep.closed);
  CHECK(rep.curve_rotation == doctest::Approx(2.9699263954085637).epsilon(1e-6));
  CHECK(rep.hodograph_rotation == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-6));
  CHECK(rep.dist_start == doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(rep.dist_end == doctest::Approx(0.79775168171715138).epsilon(1e-6));
  CHECK(rep.sharp_holds);
  CHECK(rep.slack_holds);
  // Both lengths agree with the polyline oracle.
  CHECK(rep.curve_rotation == doctest::Approx(polyline_sphere_length(helix, 40000)).epsilon(1e-5));
  CHECK(rep.hodograph_rotation ==
        doctest::Approx(polyline_sphere_length(hodograph(helix), 40000)).epsilon(1e-5));
  // And the reported quantities satisfy the inequality as raw numbers.
  CHECK(rep.curve_rotation <=
        rep.hodograph_rotation - (rep.dist_end - rep.dist_start) + rep.tolerance);

  // Vanishing velocity is rejected: (1 + t^2, t^3) stalls at t = 0.
  std::vector<UniPoly> stall{
      UniPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)}),
      UniPoly(std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)})};
  CHECK_THROWS_AS(rolle_rn_check(make_poly_curve(std::move(stall), -1, 1, "stall")),
                  std::invalid_argument);

  // A closed flag on a non-periodic curve is caught by the endpoint check.
  std::vector<TrigCoord> drift(2);
  drift[0].harmonics.push_back({1.0, 1.0, 0.0});
  drift[1].harmonics.push_back({1.0, 0.0, 1.0});
  drift[1].c1 = 0.5;
  CHECK_THROWS_AS(rolle_rn_check(make_trig_curve(std::move(drift), 0, 2 * kPi, true, "drift")),
                  std::invalid_argument);
}

TEST_CASE("frenet curvatures from the derivative gram determinants") {
  // Unit circle at several parameters: all determinants 1, curvature +1
  // (the (+x, +y) frame is positively oriented).
  const auto circle = make_circle();
  for (double t : {0.0, 0.4, 1.9, 3.3, 5.1}) {
    const FrenetData fd = frenet_curvatures(circle, t);
    REQUIRE(fd.gram.size() == 3);
    REQUIRE(fd.curvature.size() == 1);
    CHECK(fd.gram[0] == doctest::Approx(1.0));
    CHECK(fd.gram[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fd.gram[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fd.curvature[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Radius halves the curvature reciprocally.
  CHECK(frenet_curvatures(make_circle(2.0), 0.7).curvature[0] ==
        doctest::Approx(0.5).epsilon(1e-12));

  // Helix (cos t, sin t, ct): kappa_1 = 1/(1+c^2), kappa_2 = c/(1+c^2),
  // independent of t, with the torsion sign following the sign of c.
  for (double c : {1.0, 0.5, -0.5}) {
    const auto helix = make_helix(c, 0, 2 * kPi);
    for (double t : {0.3, 0.7, 2.9}) {
      const FrenetData fd = frenet_curvatures(helix, t);
      CHECK(fd.curvature[0] == doctest::Approx(1 / (1 + c * c)).epsilon(1e-9));
      CHECK(fd.curvature[1] == doctest::Approx(c / (1 + c * c)).epsilon(1e-9));
    }
  }
  {
    const FrenetData fd = frenet_curvatures(make_helix(1.0, 0, 2 * kPi), 0.7);
    CHECK(fd.gram[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fd.gram[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fd.gram[3] == doctest::Approx(1.0).epsilon(1e-12));
  }

  // Planar check against the classical signed-curvature formula on the
  // ellipse: (x'y'' - y'x'') / |x'|^3.
  const auto ell = make_ellipse(2, 1);
  for (int i = 0; i < 20; ++i) {
    const double t = 2 * kPi * i / 20.0;
    const auto v = ell.derivative(t, 1);
    const auto a = ell.derivative(t, 2);
    const double speed = std::hypot(v[0], v[1]);
    const double classical = (v[0] * a[1] - v[1] * a[0]) / (speed * speed * speed);
    CHECK(frenet_curvatures(ell, t).curvature[0] == doctest::Approx(classical).epsilon(1e-9));
  }

  // A planar line is fine (zero curvature) but a line in R^3 has a
  // degenerate second-order frame.
  CHECK(frenet_curvatures(planar_segment(), 0.5).curvature[0] == doctest::Approx(0.0));
  std::vector<UniPoly> line3{UniPoly(std::vector<Rational>{Rational(0), Rational(1)}),
                             UniPoly(std::vector<Rational>{Rational(0), Rational(2)}),
                             UniPoly(std::vector<Rational>{Rational(1), Rational(3)})};
  CHECK_THROWS_AS(frenet_curvatures(make_poly_curve(std::move(line3), 0, 1, "line3"), 0.5),
                  std::runtime_error);
}

TEST_CASE("hyperplane intersection bounds from integral curvatures") {
  // Closed unit circle: integral curvature 2pi, no hyperinflections, leading
  // term dropped, so the bound is (4/pi) * 2pi = 8, and no line beats 2.
  const auto circle_cert = hyperplane_rotation_bound(make_circle());
  CHECK(circle_cert.bound == 8);
  CHECK(circle_cert.hypotheses_hold());
  CHECK_FALSE(circle_cert.trace.empty());
  CHECK(random_hyperplane_hits(make_circle(), 11, 500).max_hits == 2);

  // Straight planar segment: all curvature integrals vanish and the bound
  // collapses to the dimension.
  CHECK(hyperplane_rotation_bound(planar_segment()).bound == 2);

  // Helix over one turn: K_1 = K_2 = pi*sqrt(2), so the bound is
  // ceil(3 + 8*sqrt(2)) = 15, and the sampled hyperplane oracle caps at 3.
  const auto helix = make_helix(1.0, 0, 2 * kPi);
  const auto helix_cert = hyperplane_rotation_bound(helix);
  CHECK(helix_cert.bound == 15);
  const auto oracle = random_hyperplane_hits(helix, 77, 1000);
  CHECK(oracle.max_hits == 3);
  CHECK(helix_cert.bound >= static_cast<std::uint64_t>(oracle.max_hits));
}

TEST_CASE("non-oscillation certificates for small total curvature") {
  // Short helix arc: curvatures (1/2, 1/2), arclength factor sqrt(2), so the
  // integral over t in [0, 0.1] is exactly 0.1, under the threshold
  // 1/(3*sqrt(2)). The certificate then promises at most 3 affine-hyperplane
  // hits, which the oracle confirms.
  const auto arc = make_helix(1.0, 0, 0.1);
  const auto cert = shapiro_certificate(arc);
  CHECK(cert.certified);
  CHECK(cert.dimension == 3);
  CHECK(cert.integral == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(cert.threshold == doctest::Approx(1 / (3 * std::sqrt(2.0))).epsilon(1e-12));
  CounterRng rng(0xA11CE, 7);
  CHECK(worst_affine_hits(arc, rng, 300, 4096) <= 3);

  // The same helix over a full turn accumulates 2pi and fails.
  const auto full = shapiro_certificate(make_helix(1.0, 0, 2 * kPi));
  CHECK_FALSE(full.certified);
  CHECK(full.integral == doctest::Approx(2 * kPi).epsilon(1e-6));

  // A short circular arc in the plane: integral 0.2 < 1/(2*sqrt(2)),
  // certified, and no sampled affine line cuts it more than twice.
  std::vector<TrigCoord> arc2(2);
  arc2[0].harmonics.push_back({1.0, 1.0, 0.0});
  arc2[1].harmonics.push_back({1.0, 0.0, 1.0});
  const auto carc = make_trig_curve(std::move(arc2), 0, 0.2, false, "circle-arc");
  const auto ccert = shapiro_certificate(carc);
  CHECK(ccert.certified);
  CHECK(ccert.integral == doctest::Approx(0.2).epsilon(1e-6));
  CounterRng rng2(0xA11CE, 8);
  CHECK(worst_affine_hits(carc, rng2, 300, 4096) <= 2);

  // A full ellipse has total curvature 2pi: hyperconvex, but far above the
  // threshold.
  const auto ecert = shapiro_certificate(make_ellipse(2, 1));
  CHECK_FALSE(ecert.certified);
  CHECK(ecert.integral == doctest::Approx(2 * kPi).epsilon(1e-6));

  // Straight segments fail the sign-constancy requirement degenerately.
  CHECK_THROWS_AS(shapiro_certificate(planar_segment()), std::runtime_error);
}

TEST_CASE("buffon needle estimates of the projection length") {
  // Every line through the origin cuts the unit circle exactly twice, so the
  // estimate is exactly 2pi with zero variance.
  const auto circle = buffon_estimate(make_circle(), 2000, 42);
  CHECK(circle.estimate == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(circle.stddev == 0.0);
  CHECK(circle.half_width == 0.0);
  CHECK(circle.max_hits == 2);
  CHECK(circle.samples == 2000);

  // The origin-centered ellipse is also met exactly twice by every central
  // line, so the Monte Carlo mean is degenerate and must land on the
  // quadrature value on the nose.
  const auto ell = buffon_estimate(make_ellipse(2, 1), 10000, 42);
  const double ell_se = ell.stddev / std::sqrt(10000.0);
  CHECK(std::abs(ell.estimate - spherical_length(make_ellipse(2, 1))) <= 3 * ell_se + 1e-9);

  // Open helix: a genuinely random count. The estimate sits within three
  // standard errors of the quadrature length.
  const auto helix = make_helix(1.0, 0, 2 * kPi);
  const auto hb = buffon_estimate(helix, 10000, 42, 1024);
  CHECK(hb.estimate == doctest::Approx(2.9675484205809184).epsilon(1e-12));
  const double se = hb.stddev / std::sqrt(10000.0);
  CHECK(se > 0);
  CHECK(std::abs(hb.estimate - spherical_length(helix)) <= 3 * se);

  // Fixed seeds are repeatable; a different seed moves the estimate.
  const auto again = buffon_estimate(helix, 10000, 42, 1024);
  CHECK(again.estimate == hb.estimate);
  CHECK(again.stddev == hb.stddev);
  CHECK(buffon_estimate(helix, 10000, 43, 1024).estimate != hb.estimate);
}

TEST_CASE("seeded corpus: rotation inequalities, bounds, and oracles") {
  // Closed trigonometric curves: the sharp comparison with the hodograph
  // holds, distances stay in [0, pi], and the quadrature agrees with the
  // polyline oracle.
  int checked = 0;
  for (unsigned long s = 0; s < 25; ++s) {
    CounterRng rng(0xC0FFEE11u, s);
    const auto curve = random_closed_trig(rng, 2 + s % 2);
    try {
      validate_curve(curve);
    } catch (const std::invalid_argument&) {
      continue;  // rare degenerate draw
    }
    const RotationReport rep = rolle_rn_check(curve);
    CHECK(rep.curve_rotation >= 0);
    CHECK(rep.hodograph_rotation >= 0);
    CHECK(rep.dist_start >= 0);
    CHECK(rep.dist_start <= kPi + 1e-12);
    CHECK(rep.dist_end <= kPi + 1e-12);
    CHECK(rep.sharp_holds);
    CHECK(rep.slack_holds);
    CHECK(rep.curve_rotation ==
          doctest::Approx(polyline_sphere_length(curve, 40000)).epsilon(1e-4));
    ++checked;
  }
  CHECK(checked >= 20);

  // Open curves with drift obey the correction form and the +2pi corollary.
  int open_checked = 0;
  for (unsigned long s = 0; s < 12; ++s) {
    CounterRng rng(0x0BE17EEDu, s);
    const auto curve = random_open_trig(rng, 2 + s % 2);
    try {
      validate_curve(curve);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const RotationReport rep = rolle_rn_check(curve);
    CHECK(rep.sharp_holds);
    CHECK(rep.slack_holds);
    ++open_checked;
  }
  CHECK(open_checked >= 10);

  // Monte Carlo needle estimates agree with quadrature within 3 standard
  // errors at 10^4 samples.
  for (unsigned long s = 0; s < 6; ++s) {
    CounterRng rng(0xBF00FF11u, s);
    const auto curve = random_closed_trig(rng, 2 + s % 2);
    try {
      validate_curve(curve);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const double len = spherical_length(curve);
    const auto rep = buffon_estimate(curve, 10000, 1000 + s, 512);
    const double se = rep.stddev / std::sqrt(10000.0);
    CHECK(std::abs(rep.estimate - len) <= 3 * se + 1e-9);
  }

  // The curvature bound dominates the sampled hyperplane oracle.
  for (unsigned long s = 0; s < 10; ++s) {
    CounterRng rng(0x0DD5EED5u, s);
    const auto curve = random_closed_trig(rng, 3);
    try {
      validate_curve(curve);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const auto cert = hyperplane_rotation_bound(curve);
    const auto oracle = random_hyperplane_hits(curve, 4242 + s, 1000);
    CHECK(cert.bound >= static_cast<std::uint64_t>(oracle.max_hits));
  }
}
