#pragma once
// Rotation bounds for curves in Euclidean n-space. The rotation of a curve
// around the origin is measured as the length, in radians, of its projection
// on the unit sphere. Facts implemented here:
//   - the projection length of a curve never exceeds that of its velocity
//     hodograph up to an endpoint-distance correction (at most 2*pi, and
//     absent for closed curves);
//   - the projection length equals pi times the average number of crossings
//     with a random central hyperplane, giving an independent Monte Carlo
//     estimator of the same quantity;
//   - the Frenet curvatures, recovered from Gram determinants of the
//     derivative frame, bound how often any affine hyperplane can cut the
//     curve;
//   - small total curvature together with a sign-constant last curvature
//     certifies that no affine hyperplane cuts the curve in more than n
//     points.
// Curvature integrals and projection lengths come from refining quadrature,
// so the certificates in this header record sampled quantities, not exact
// rational data.

#include <rolle/cert.hpp>
#include <rolle/sampler.hpp>

#include <cstdint>
#include <vector>

namespace rolle {

// Curvature data of a curve in R^n at one parameter value.
struct FrenetData {
  double t = 0;
  // gram[k] = sqrt det of the Gram matrix of x'(t), ..., x^(k)(t), with
  // gram[0] = 1 by convention; size dim + 1.
  std::vector<double> gram;
  // curvature[i-1] = kappa_i = gram[i-1] * gram[i+1] / (gram[i]^2 * gram[1]);
  // size dim - 1. All but the last are nonnegative by construction; the last
  // carries the orientation sign of the full derivative frame, so it flips
  // sign exactly at hyperinflection points.
  std::vector<double> curvature;
};

// Comparison of a curve's rotation around the origin with its hodograph's.
struct RotationReport {
  double curve_rotation = 0;      // spherical projection length of the curve
  double hodograph_rotation = 0;  // same for the velocity curve t -> x'(t)
  double dist_start = 0;          // spherical distance between the two
  double dist_end = 0;            //   projections at each endpoint, <= pi
  bool closed = false;
  double tolerance = 0;  // slack granted to the verdicts below
  // curve_rotation <= hodograph_rotation - (dist_end - dist_start); for
  // closed curves the correction vanishes and this is plain <=.
  bool sharp_holds = false;
  // curve_rotation <= hodograph_rotation + 2*pi, valid for any curve.
  bool slack_holds = false;
};

// Monte Carlo estimate of a spherical projection length: pi times the mean
// number of crossings with random central hyperplanes.
struct BuffonReport {
  double estimate = 0;    // pi * mean crossing count
  double stddev = 0;      // pi * sample standard deviation of the count
  double half_width = 0;  // 1.96 * stddev / sqrt(samples)
  long max_hits = 0;
  std::uint64_t samples = 0;
};

// Small-total-curvature certificate: when it holds, no affine hyperplane
// meets the curve in more than `dimension` points.
struct NonOscillationCertificate {
  bool certified = false;
  double integral = 0;   // arclength integral of sqrt(sum_i kappa_i^2)
  double tolerance = 0;  // quadrature allowance added before the comparison
  double threshold = 0;  // 1 / (dimension * sqrt(2))
  size_t dimension = 0;
};

// Sampled invariant checks: velocity bounded away from zero, and matching
// endpoint position/velocity when the closed flag is set. Throws
// std::invalid_argument on violation.
void validate_curve(const CurveSampler& curve, unsigned samples = 512);

// The velocity curve t -> x'(t); derivative orders shift down by one.
CurveSampler hodograph(const CurveSampler& curve);

// Geodesic distance between the radial projections of a and b onto the unit
// sphere (so the vectors need not be normalized). Ranges over [0, pi]; in
// dimension one the two antipodal projections are at distance pi.
double spherical_distance(const std::vector<double>& a, const std::vector<double>& b);

// Length (radians) of the projection t -> x(t)/|x(t)|. Composite-Simpson
// quadrature, doubling the grid until three consecutive levels agree to
// `tol` relative (floored at 1 absolute). Throws std::runtime_error when the
// curve comes within `min_norm` of the origin or the refinement fails to
// settle.
double spherical_length(const CurveSampler& curve, double tol = 1e-6, double min_norm = 1e-8);

// Projection lengths of the curve and of its hodograph plus the endpoint
// corrections; verdicts get slack proportional to the quadrature tolerance.
RotationReport rolle_rn_check(const CurveSampler& curve, double tol = 1e-6);

// Gram determinants and curvatures at parameter t from the derivatives
// x'(t), ..., x^(n)(t). Requires curve.max_order >= dim. Throws
// std::runtime_error when a denominator determinant degenerates (the first
// dim-1 derivatives nearly dependent), e.g. on straight lines in R^3.
FrenetData frenet_curvatures(const CurveSampler& curve, double t);

// Bound on the number of intersections of the curve with any affine
// hyperplane: dim + (4/pi) * sum of integral curvatures + number of sampled
// sign changes of the last curvature; the leading dim is dropped for closed
// curves. Curvature integrals are quadrature values and the hyperinflection
// count is a sampled quantity, as the certificate trace records.
BoundCertificate hyperplane_rotation_bound(const CurveSampler& curve, double tol = 1e-6,
                                           unsigned scan_grid = 2048);

// True when the arclength integral of sqrt(kappa_1^2 + ... + kappa_{n-1}^2)
// stays below 1/(n*sqrt(2)), granting that no affine hyperplane meets the
// curve in more than n points. Requires the last curvature to keep a strict
// constant sign on samples; throws std::runtime_error otherwise (straight
// segments fail degenerately: their last curvature is identically zero).
NonOscillationCertificate shapiro_certificate(const CurveSampler& curve, double tol = 1e-6,
                                              unsigned scan_grid = 2048);

// Monte Carlo counterpart of spherical_length(curve): pi times the mean
// crossing count over `samples` random central hyperplanes drawn from the
// counter stream of `seed`. Deterministic for fixed arguments.
BuffonReport buffon_estimate(const CurveSampler& curve, std::uint64_t samples, std::uint64_t seed,
                             unsigned grid = 512);

}  // namespace rolle
