#pragma once
// Independent numeric oracles. Everything here counts or measures by brute
// force (sign scans, winding numbers, numeric integration, Monte Carlo) and
// is deliberately disjoint from the certified-bound code paths so that
// "bound >= oracle count" is a genuine cross-check, not a tautology.

#include <rolle/interval.hpp>
#include <rolle/multipoly.hpp>
#include <rolle/sampler.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rolle {

struct RootCountReport {
  long count = 0;
  std::vector<double> locations;  // sorted ascending
  double resolution = 0;          // uncertainty of each location
  bool certified = false;         // true when backed by exact polynomial counting
  std::vector<std::string> notes;
};

// Distinct real zeros of f on [a, b]. Exact (Sturm) for polynomial samplers;
// otherwise a sign-scan over `budget` initial cells with bisection
// refinement — a lower bound on the true count by construction.
RootCountReport count_real_zeros(const RealSampler& f, double a, double b,
                                 unsigned budget = 2048);

struct WindingResult {
  long winding = 0;            // zeros inside, counted with multiplicity
  double total_variation = 0;  // integral of |d arg f| along the contour, radians
  double min_modulus = 0;
  unsigned samples = 0;
  bool converged = false;
};

// Argument-principle count on a circle |z - center| = radius. Adaptive: the
// sample count doubles until all phase increments are below pi/2 and the
// total variation stabilizes within tol over three consecutive levels.
// Throws std::runtime_error if the sampled modulus collapses (zero on the
// contour).
WindingResult count_disk_zeros(const AnalyticSampler& f, std::complex<double> center,
                               double radius, double tol = 1e-6);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  IntervalBox enclosure;  // certified to contain the exact trajectory
  unsigned picard_chunks = 0;

  std::vector<double> samples_of(const MultiPoly& u) const;
};

// Integrate x' = v(x) from rational initial point q over signed rational
// span. The enclosure box is certified by a Picard contraction check in
// exact interval arithmetic; throws std::runtime_error when the box cannot
// be closed over the whole (sub)span.
Trajectory integrate_field(const PolyVectorField& v, const std::vector<Rational>& q,
                           const Rational& span, double tol = 1e-10);

// Same, but splits the span into as many Picard-closable chunks as needed;
// the reported enclosure is the hull of the per-chunk boxes.
Trajectory integrate_span(const PolyVectorField& v, const std::vector<Rational>& q,
                          const Rational& span, double tol = 1e-10);

struct HyperplaneStats {
  double mean = 0;        // average number of curve/hyperplane intersections
  double stddev = 0;      // sample standard deviation
  double half_width = 0;  // 1.96 * stddev / sqrt(samples)
  long max_hits = 0;
  std::uint64_t samples = 0;
};

// Intersections of the curve with random hyperplanes through the origin;
// sample j draws its direction from the counter stream (seed, j).
HyperplaneStats random_hyperplane_hits(const CurveSampler& curve, std::uint64_t seed,
                                       std::uint64_t n_samples, unsigned grid = 512);

// Sign changes of t -> <normal, x(t)> on a uniform grid; used by the
// hyperplane oracle and exposed for the curve bounds.
long hyperplane_crossings(const CurveSampler& curve, const std::vector<double>& normal,
                          unsigned grid = 512);

}  // namespace rolle
