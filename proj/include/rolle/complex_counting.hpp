#pragma once
// Zero bounds for complex-analytic functions through growth and argument
// variation: Jensen-type disk bounds, Bernstein indices of nested regions,
// Voorhoeve indices, growth-class parameters, and argument-variation bounds
// for exponential-polynomial sums.

#include <rolle/cert.hpp>
#include <rolle/poly.hpp>
#include <rolle/rational.hpp>
#include <rolle/sampler.hpp>
#include <rolle/sturm.hpp>

#include <complex>
#include <vector>

namespace rolle {

struct CircleRegion {
  CRational center;
  Rational radius;
};

// Nested disks K strictly inside U.
struct CPGonPair {
  CircleRegion inner;  // K
  CircleRegion outer;  // U
  // Certified lower bound on the gap between K and the boundary of U.
  Rational gap_lower() const;
  void validate() const;  // throws unless gap_lower() > 0
};

struct NestedTriple {
  CircleRegion inner, middle, outer;
  void validate() const;
};

// Certified enclosure of sup |p(z)|^2 over a circle. The circle is traced by
// two rational charts; on each chart |p|^2 is a rational function whose
// critical points are Sturm-isolated.
SupEnclosure sup_modulus_sq_on_circle(const CPoly& p, const CircleRegion& circle);

// Boundary max by sample doubling until three consecutive levels agree to
// 1e-8 relative.
double sampled_sup_modulus(const AnalyticSampler& f, const CircleRegion& circle);

// Zeros of f in the closed disk of radius r < 1, from the center value and a
// boundary max M1 of |f| on the unit circle: every zero in the r-disk costs a
// factor 1/r of growth, so the count is the largest k with |f(0)| (1/r)^k <= M1.
// All comparisons run on squared moduli in exact arithmetic.
BoundCertificate jensen_zero_bound(const AnalyticSampler& f, const CRational& center_value,
                                   const Rational& inner_radius, const Rational& boundary_max);

// B = ln(M_U / M_K), maxima of |f| over the two boundaries; >= 0, and 0
// exactly for nonzero constants. Exact-polynomial samplers use the certified
// circle suprema, everything else the adaptive boundary sampling.
double bernstein_index(const AnalyticSampler& f, const CPGonPair& pair);

struct BernsteinRolleReport {
  double index_f = 0;
  double index_df = 0;
  double defect = 0;  // index_f - index_df
};
BernsteinRolleReport bernstein_rolle_report(const AnalyticSampler& f, const NestedTriple& triple);

struct VoorhoeveResult {
  double variation = 0;  // total |d Arg f| along the contour, radians
  long winding = 0;
  unsigned samples = 0;
  bool converged = false;
};
// Absolute argument variation of f along the circle |z - center| = radius.
VoorhoeveResult voorhoeve_index(const AnalyticSampler& f, std::complex<double> center,
                                double radius, double tol = 1e-6);

// c = sup_k |a_k| R^k / max_{k <= nu} |a_k| R^k >= 1 for coefficient
// sequences a_0..a_N; the two attaining indices are reported.
struct GrowthClassParams {
  Rational c;
  size_t sup_index = 0;
  size_t head_index = 0;
};
GrowthClassParams bernstein_class_params(const std::vector<Rational>& coeffs, unsigned nu,
                                         const Rational& R);

// Exact rational upper bound for the total argument variation of an
// exponential-polynomial sum along a convex boundary of length L:
//   2 pi (n - 1) + 2 L sum_j (deg p_j + 1) |lambda_j|,   n = sum (deg p_j + 1).
Rational pseudopoly_variation_radians_upper(const PseudoPolynomial& p,
                                            const Rational& boundary_length);

// Zero bound implied by the variation bound: floor(variation / 2 pi), with
// directed rational brackets for pi.
BoundCertificate pseudopoly_voorhoeve_bound(const PseudoPolynomial& p,
                                            const Rational& boundary_length);

}  // namespace rolle
