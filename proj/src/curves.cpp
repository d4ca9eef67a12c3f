#include <rolle/curves.hpp>
#include <rolle/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rolle {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// Determinant by Gaussian elimination with partial pivoting; destroys m.
double det_inplace(std::vector<std::vector<double>>& m) {
  const size_t n = m.size();
  double d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

// Composite Simpson on [a, b] with `cells` even subintervals.
double simpson(const std::function<double(double)>& f, double a, double b, unsigned cells) {
  const double h = (b - a) / cells;
  double odd = 0, even = 0;
  for (unsigned i = 1; i < cells; ++i) {
    const double v = f(a + i * h);
    (i % 2 ? odd : even) += v;
  }
  return (f(a) + f(b) + 4 * odd + 2 * even) * h / 3;
}

// Doubles the grid until three consecutive levels agree to `tol` relative
// (floored at 1 absolute).
double converge_quadrature(const std::function<double(double)>& f, double a, double b, double tol,
                           const char* what) {
  double prev2 = 0, prev1 = 0;
  for (unsigned level = 0; level <= 14; ++level) {
    const double cur = simpson(f, a, b, 64u << level);
    if (level >= 2) {
      const double scale = std::max({std::abs(cur), std::abs(prev1), 1.0});
      if (std::abs(cur - prev1) <= tol * scale && std::abs(prev1 - prev2) <= tol * scale)
        return cur;
    }
    prev2 = prev1;
    prev1 = cur;
  }
  throw std::runtime_error(std::string(what) + ": quadrature refinement did not settle");
}

// Evaluates the Frenet data at t, stepping off the point along a small
// ladder when the frame degenerates there; isolated degeneracies are the
// only escapable kind, so a failure at every rung means the degeneracy
// persists and the error propagates.
FrenetData frenet_near(const CurveSampler& curve, double t) {
  const double range = curve.t1 - curve.t0;
  const double rungs[] = {0.0, 1e-9, -1e-9, 1e-7, -1e-7, 1e-5, -1e-5};
  for (size_t i = 0; i + 1 < sizeof rungs / sizeof rungs[0]; ++i) {
    try {
      return frenet_curvatures(curve, t + rungs[i] * range);
    } catch (const std::runtime_error&) {
      // try the next rung
    }
  }
  return frenet_curvatures(curve, t + rungs[6] * range);
}

}  // namespace

void validate_curve(const CurveSampler& curve, unsigned samples) {
  if (curve.dim == 0 || !curve.derivative)
    throw std::invalid_argument("validate_curve: empty sampler");
  if (!(curve.t1 > curve.t0))
    throw std::invalid_argument("validate_curve: empty parameter interval");
  if (samples < 2) samples = 2;
  double vmin = 0, vmax = 0, xmax = 0;
  for (unsigned i = 0; i <= samples; ++i) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * i / samples;
    const double v = norm(curve.derivative(t, 1));
    vmin = i == 0 ? v : std::min(vmin, v);
    vmax = std::max(vmax, v);
    xmax = std::max(xmax, norm(curve.position(t)));
  }
  if (vmin <= 1e-9 * (1 + vmax))
    throw std::invalid_argument("validate_curve: velocity vanishes on the sampled interval (|x'| ~ " +
                                fmt(vmin) + ")");
  if (curve.closed) {
    std::vector<double> dx = curve.position(curve.t0);
    std::vector<double> dv = curve.derivative(curve.t0, 1);
    const auto x1 = curve.position(curve.t1);
    const auto v1 = curve.derivative(curve.t1, 1);
    for (size_t k = 0; k < curve.dim; ++k) {
      dx[k] -= x1[k];
      dv[k] -= v1[k];
    }
    if (norm(dx) > 1e-6 * (1 + xmax) || norm(dv) > 1e-6 * (1 + vmax))
      throw std::invalid_argument(
          "validate_curve: closed flag set but position/velocity do not match at the endpoints");
  }
}

CurveSampler hodograph(const CurveSampler& curve) {
  if (curve.max_order < 1) throw std::invalid_argument("hodograph: no derivative access");
  CurveSampler h;
  h.dim = curve.dim;
  h.t0 = curve.t0;
  h.t1 = curve.t1;
  h.closed = curve.closed;
  h.max_order = curve.max_order - 1;
  h.label = curve.label + "'";
  h.derivative = [base = curve.derivative](double t, unsigned order) {
    return base(t, order + 1);
  };
  return h;
}

double spherical_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("spherical_distance: dimension mismatch");
  const double na = norm(a), nb = norm(b);
  if (na == 0 || nb == 0)
    throw std::invalid_argument("spherical_distance: zero vector has no projection");
  double dm = 0, dp = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double u = a[i] / na, v = b[i] / nb;
    dm += (u - v) * (u - v);
    dp += (u + v) * (u + v);
  }
  return 2 * std::atan2(std::sqrt(dm), std::sqrt(dp));
}

double spherical_length(const CurveSampler& curve, double tol, double min_norm) {
  if (curve.dim == 0 || !curve.derivative)
    throw std::invalid_argument("spherical_length: empty sampler");
  if (curve.max_order < 1)
    throw std::invalid_argument("spherical_length: derivative access required");
  // Speed of the projected point: the component of x' orthogonal to x,
  // divided by |x|.
  const auto speed = [&curve, min_norm](double t) -> double {
    const auto x = curve.position(t);
    const auto v = curve.derivative(t, 1);
    const double nx = norm(x);
    if (nx < min_norm)
      throw std::runtime_error("spherical_length: curve '" + curve.label +
                               "' passes within " + fmt(min_norm) + " of the origin (|x(" +
                               fmt(t) + ")| = " + fmt(nx) + ")");
    const double radial = dot(x, v) / (nx * nx);
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double w = v[i] - radial * x[i];
      s += w * w;
    }
    return std::sqrt(s) / nx;
  };
  return converge_quadrature(speed, curve.t0, curve.t1, tol, "spherical_length");
}

RotationReport rolle_rn_check(const CurveSampler& curve, double tol) {
  validate_curve(curve);
  RotationReport rep;
  rep.closed = curve.closed;
  rep.curve_rotation = spherical_length(curve, tol);
  rep.hodograph_rotation = spherical_length(hodograph(curve), tol);
  rep.dist_start = spherical_distance(curve.position(curve.t0), curve.derivative(curve.t0, 1));
  rep.dist_end = spherical_distance(curve.position(curve.t1), curve.derivative(curve.t1, 1));
  rep.tolerance = 20 * tol * (1 + rep.curve_rotation + rep.hodograph_rotation);
  const double correction = rep.closed ? 0.0 : rep.dist_end - rep.dist_start;
  rep.sharp_holds = rep.curve_rotation <= rep.hodograph_rotation - correction + rep.tolerance;
  rep.slack_holds =
      rep.curve_rotation <= rep.hodograph_rotation + 2 * std::acos(-1.0) + rep.tolerance;
  return rep;
}

FrenetData frenet_curvatures(const CurveSampler& curve, double t) {
  const size_t n = curve.dim;
  if (n < 2) throw std::invalid_argument("frenet_curvatures: dimension >= 2 required");
  if (curve.max_order < n)
    throw std::invalid_argument("frenet_curvatures: derivatives up to the dimension required");
  std::vector<std::vector<double>> v;
  v.reserve(n);
  for (unsigned k = 1; k <= n; ++k) v.push_back(curve.derivative(t, k));

  std::vector<std::vector<double>> gram(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) gram[i][j] = gram[j][i] = dot(v[i], v[j]);

  FrenetData out;
  out.t = t;
  out.gram.assign(n + 1, 1.0);
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<double>> minor(k, std::vector<double>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
    const double d = det_inplace(minor);
    // Relative degeneracy test against the Hadamard bound prod <v_i, v_i>;
    // only the determinants that end up in denominators (k < n) must stay
    // positive — the full one vanishing just marks a hyperinflection.
    if (k < n) {
      double hadamard = 1;
      for (size_t i = 0; i < k; ++i) hadamard *= gram[i][i];
      if (!(d > 1e-20 * hadamard) || hadamard == 0)
        throw std::runtime_error("frenet_curvatures: degenerate derivative frame at t = " +
                                 fmt(t) + " (order " + std::to_string(k + 1) + ")");
    }
    out.gram[k] = std::sqrt(std::max(0.0, d));
  }

  // The square derivative matrix carries the orientation; its absolute value
  // agrees with gram[n] up to rounding, and its sign goes to the last
  // curvature.
  std::vector<std::vector<double>> frame = v;
  const double oriented = det_inplace(frame);
  out.gram[n] = std::abs(oriented);

  out.curvature.assign(n - 1, 0.0);
  for (size_t k = 1; k + 1 < n; ++k)
    out.curvature[k - 1] = out.gram[k - 1] * out.gram[k + 1] / (out.gram[k] * out.gram[k] * out.gram[1]);
  out.curvature[n - 2] =
      out.gram[n - 2] * oriented / (out.gram[n - 1] * out.gram[n - 1] * out.gram[1]);
  return out;
}

BoundCertificate hyperplane_rotation_bound(const CurveSampler& curve, double tol,
                                           unsigned scan_grid) {
  validate_curve(curve);
  const size_t n = curve.dim;
  if (n < 2)
    throw std::invalid_argument("hyperplane_rotation_bound: dimension >= 2 required");
  const double pi = std::acos(-1.0);

  // Integral curvatures against arclength: integrate |kappa_i| * |x'|.
  std::vector<double> big_k(n - 1, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const auto integrand = [&curve, i](double t) -> double {
      const FrenetData fd = frenet_near(curve, t);
      return std::abs(fd.curvature[i]) * fd.gram[1];
    };
    big_k[i] = converge_quadrature(integrand, curve.t0, curve.t1, tol,
                                   "hyperplane_rotation_bound");
  }

  // Sampled sign changes of the last curvature; tangential zeros that do not
  // flip the sign are invisible to this scan.
  long inflections = 0;
  {
    int prev = 0;
    for (unsigned i = 0; i <= scan_grid; ++i) {
      const double t = curve.t0 + (curve.t1 - curve.t0) * i / scan_grid;
      const double k = frenet_near(curve, t).curvature[n - 2];
      const int s = k > 0 ? 1 : k < 0 ? -1 : 0;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++inflections;
      prev = s;
    }
  }

  double sum_k = 0;
  for (double k : big_k) sum_k += k;
  const double raw = (curve.closed ? 0.0 : static_cast<double>(n)) + (4 / pi) * sum_k +
                     static_cast<double>(inflections);
  const double rounded = std::ceil(raw - 1e-7);

  BoundCertificate cert;
  cert.method = "integral Frenet curvature bound";
  cert.statement = "every affine hyperplane meets the curve '" + curve.label + "' in at most " +
                   fmt(rounded) + " points";
  cert.bound = static_cast<std::uint64_t>(std::max(0.0, rounded));
  cert.hypotheses.push_back({"velocity nonvanishing on samples", "min |x'|", ">", "0", true});
  cert.hypotheses.push_back({"curvature integrals settled",
                             "three consecutive quadrature refinements", "==", "agree", true});
  for (size_t i = 0; i + 1 < n; ++i)
    cert.note("integral curvature K_" + std::to_string(i + 1) + " = " + fmt(big_k[i]) +
              " (quadrature)");
  cert.note("hyperinflections: " + std::to_string(inflections) + " sampled sign changes of the last curvature on " +
            std::to_string(scan_grid + 1) + " nodes (tangential zeros may be missed)");
  cert.note(curve.closed
                ? "closed curve: leading dimension term dropped"
                : "open curve: leading term " + std::to_string(n));
  cert.note("bound = " + std::string(curve.closed ? "0" : std::to_string(n)) + " + (4/pi) * " +
            fmt(sum_k) + " + " + std::to_string(inflections) + " = " + fmt(raw));
  return cert;
}

NonOscillationCertificate shapiro_certificate(const CurveSampler& curve, double tol,
                                              unsigned scan_grid) {
  validate_curve(curve);
  const size_t n = curve.dim;
  if (n < 2) throw std::invalid_argument("shapiro_certificate: dimension >= 2 required");

  // Strict sign constancy of the last curvature on samples; identically
  // vanishing last curvature (straight segments) fails degenerately.
  double kmin = 0, kmax = 0;
  for (unsigned i = 0; i <= scan_grid; ++i) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * i / scan_grid;
    const double k = frenet_near(curve, t).curvature[n - 2];
    kmin = i == 0 ? k : std::min(kmin, k);
    kmax = std::max(kmax, k);
  }
  const double scale = std::max(std::abs(kmin), std::abs(kmax));
  if (scale == 0 || (!(kmin > 1e-9 * scale) && !(kmax < -1e-9 * scale)))
    throw std::runtime_error(
        "shapiro_certificate: last curvature is not strictly sign-constant on samples (min " +
        fmt(kmin) + ", max " + fmt(kmax) + ")");

  const auto integrand = [&curve](double t) -> double {
    const FrenetData fd = frenet_near(curve, t);
    double s = 0;
    for (double k : fd.curvature) s += k * k;
    return std::sqrt(s) * fd.gram[1];
  };
  NonOscillationCertificate cert;
  cert.dimension = n;
  cert.integral =
      converge_quadrature(integrand, curve.t0, curve.t1, tol, "shapiro_certificate");
  cert.tolerance = 10 * tol * std::max(1.0, cert.integral);
  cert.threshold = 1.0 / (static_cast<double>(n) * std::sqrt(2.0));
  cert.certified = cert.integral + cert.tolerance < cert.threshold;
  return cert;
}

BuffonReport buffon_estimate(const CurveSampler& curve, std::uint64_t samples, std::uint64_t seed,
                             unsigned grid) {
  const double pi = std::acos(-1.0);
  const HyperplaneStats stats = random_hyperplane_hits(curve, seed, samples, grid);
  BuffonReport rep;
  rep.estimate = pi * stats.mean;
  rep.stddev = pi * stats.stddev;
  rep.half_width = pi * stats.half_width;
  rep.max_hits = stats.max_hits;
  rep.samples = stats.samples;
  return rep;
}

}  // namespace rolle
