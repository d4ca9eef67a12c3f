#include <rolle/oracle.hpp>
#include <rolle/rng.hpp>
#include <rolle/sturm.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rolle {

namespace {

int dsign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

RootCountReport count_real_zeros(const RealSampler& f, double a, double b, unsigned budget) {
  if (!(a <= b)) throw std::invalid_argument("count_real_zeros: empty interval");
  RootCountReport rep;

  if (const UniPoly* p = f.exact_poly()) {
    // exact route: Sturm isolation on [a, b] (doubles convert to rationals exactly)
    Rational ra(a), rb(b);
    if (p->is_zero()) throw std::domain_error("count_real_zeros: identically zero polynomial");
    const auto roots = isolate_roots(*p, ra, rb, 48);
    rep.count = static_cast<long>(roots.size());
    for (const auto& r : roots) rep.locations.push_back(to_double(r.approx()));
    std::sort(rep.locations.begin(), rep.locations.end());
    rep.resolution = to_double((rb - ra) / pow_rational(Rational(2), 47));
    rep.certified = true;
    rep.notes.push_back("sturm-isolated exact count on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
    return rep;
  }

  // sign-scan route: lower bound on the count
  if (budget < 8) budget = 8;
  const double h = (b - a) / budget;
  std::vector<double> xs(budget + 1), vs(budget + 1);
  for (unsigned i = 0; i <= budget; ++i) {
    xs[i] = (i == budget) ? b : a + h * i;
    vs[i] = f.eval(xs[i]);
  }
  std::vector<double> roots;
  for (unsigned i = 0; i <= budget; ++i)
    if (vs[i] == 0.0) roots.push_back(xs[i]);
  for (unsigned i = 0; i < budget; ++i) {
    if (vs[i] == 0.0 || vs[i + 1] == 0.0) continue;
    if (dsign(vs[i]) == dsign(vs[i + 1])) continue;
    double lo = xs[i], hi = xs[i + 1], flo = vs[i];
    for (int it = 0; it < 60 && hi - lo > 1e-14 * (1 + std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f.eval(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (dsign(fm) == dsign(flo))
        lo = mid;
      else
        hi = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  // merge anything closer than one grid cell: the scan cannot distinguish it
  std::vector<double> merged;
  for (double r : roots)
    if (merged.empty() || r - merged.back() > h * 1e-9) merged.push_back(r);
  rep.count = static_cast<long>(merged.size());
  rep.locations = std::move(merged);
  rep.resolution = h;
  rep.certified = false;
  rep.notes.push_back("sign-scan lower bound, " + std::to_string(budget) + " cells");
  return rep;
}

WindingResult count_disk_zeros(const AnalyticSampler& f, std::complex<double> center,
                               double radius, double tol) {
  if (radius <= 0) throw std::invalid_argument("count_disk_zeros: radius must be positive");
  WindingResult res;
  unsigned n = 64;
  double prev_var = -1, prev_prev_var = -1;
  for (int level = 0; level < 16; ++level, n *= 2) {
    std::vector<std::complex<double>> vals(n + 1);
    double min_mod = 1e300, max_mod = 0;
    for (unsigned j = 0; j < n; ++j) {
      const double th = 2.0 * M_PI * j / n;
      vals[j] = f.eval(center + std::polar(radius, th));
      const double m = std::abs(vals[j]);
      min_mod = std::min(min_mod, m);
      max_mod = std::max(max_mod, m);
    }
    vals[n] = vals[0];  // close the loop exactly so the increments sum to 2*pi*winding
    if (min_mod <= 1e-13 * std::max(1.0, max_mod))
      throw std::runtime_error("count_disk_zeros: modulus collapses on the contour");
    double total = 0, var = 0;
    bool coarse = false;
    for (unsigned j = 0; j < n; ++j) {
      const double d = std::arg(vals[j + 1] / vals[j]);
      if (std::abs(d) >= M_PI / 2) {
        coarse = true;
        break;
      }
      total += d;
      var += std::abs(d);
    }
    if (coarse) continue;
    res.winding = std::lround(total / (2 * M_PI));
    res.total_variation = var;
    res.min_modulus = min_mod;
    res.samples = n;
    if (prev_var >= 0 && prev_prev_var >= 0 && std::abs(var - prev_var) <= tol &&
        std::abs(prev_var - prev_prev_var) <= tol) {
      res.converged = true;
      return res;
    }
    prev_prev_var = prev_var;
    prev_var = var;
  }
  return res;  // not converged within the sample cap; caller sees converged == false
}

std::vector<double> Trajectory::samples_of(const MultiPoly& u) const {
  std::vector<double> out(states.size());
  for (size_t i = 0; i < states.size(); ++i) out[i] = u.eval_d(states[i]);
  return out;
}

namespace {

std::vector<double> eval_field(const PolyVectorField& v, const std::vector<double>& x) {
  std::vector<double> out(v.components.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = v.components[i].eval_d(x);
  return out;
}

// One RK4 step.
std::vector<double> rk4_step(const PolyVectorField& v, const std::vector<double>& x, double h) {
  const size_t n = x.size();
  auto k1 = eval_field(v, x);
  std::vector<double> tmp(n);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  auto k2 = eval_field(v, tmp);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  auto k3 = eval_field(v, tmp);
  for (size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  auto k4 = eval_field(v, tmp);
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = x[i] + h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Certified Picard box around q for time span |span|: a cube of radius rho
// such that sup-norm of v over the cube times |span| stays below rho.
IntervalBox picard_box(const PolyVectorField& v, const std::vector<Rational>& q,
                       const Rational& abs_span) {
  const size_t n = q.size();
  Rational v0max = 0;
  for (const auto& comp : v.components) {
    const Rational val = rolle::abs(comp.eval(q));
    if (val > v0max) v0max = val;
  }
  Rational rho = abs_span * (v0max + 1);
  if (rho == 0) rho = 1;
  for (int attempt = 0; attempt < 48; ++attempt, rho *= 2) {
    IntervalBox box(n);
    for (size_t i = 0; i < n; ++i) box[i] = QIv(q[i] - rho, q[i] + rho);
    Rational vmax = 0;
    for (const auto& comp : v.components) {
      const Rational m = interval_eval(comp, box).mag();
      if (m > vmax) vmax = m;
    }
    if (vmax * abs_span <= rho) return box;
  }
  throw std::runtime_error("integrate_field: picard enclosure does not close over the span");
}

}  // namespace

Trajectory integrate_field(const PolyVectorField& v, const std::vector<Rational>& q,
                           const Rational& span, double tol) {
  if (q.size() != v.nvars())
    throw std::invalid_argument("integrate_field: dimension mismatch");
  const Rational abs_span = rolle::abs(span);
  Trajectory tr;
  tr.enclosure = picard_box(v, q, abs_span);
  tr.picard_chunks = 1;
  const double T = to_double(span);
  std::vector<double> x(q.size());
  for (size_t i = 0; i < q.size(); ++i) x[i] = to_double(q[i]);
  tr.times.push_back(0);
  tr.states.push_back(x);
  if (T == 0) return tr;

  const int min_steps = 512;
  double h = T / min_steps;
  double t = 0;
  // step doubling control: accept when |full - two halves| <= tol * scale
  while ((T > 0 && t < T) || (T < 0 && t > T)) {
    if ((T > 0 && t + h > T) || (T < 0 && t + h < T)) h = T - t;
    const auto full = rk4_step(v, x, h);
    const auto half = rk4_step(v, rk4_step(v, x, h / 2), h / 2);
    double err = 0, scale = 1;
    for (size_t i = 0; i < x.size(); ++i) {
      err = std::max(err, std::abs(full[i] - half[i]));
      scale = std::max(scale, std::abs(half[i]));
    }
    if (err <= tol * scale || std::abs(h) <= std::abs(T) * 1e-12) {
      t += h;
      x = half;
      tr.times.push_back(t);
      tr.states.push_back(x);
      if (err < tol * scale / 32 && std::abs(h) < std::abs(T) / min_steps)
        h *= 2;
    } else {
      h /= 2;
    }
  }
  return tr;
}

Trajectory integrate_span(const PolyVectorField& v, const std::vector<Rational>& q,
                          const Rational& span, double tol) {
  // halve the chunk until Picard closes, then march
  Rational remaining = rolle::abs(span);
  const int dir = span < 0 ? -1 : 1;
  Rational chunk = remaining;
  Trajectory total;
  std::vector<Rational> cur = q;
  double t_base = 0;
  bool first = true;
  int guard = 0;
  while (remaining > 0) {
    if (++guard > 4096)
      throw std::runtime_error("integrate_span: too many picard chunks");
    if (chunk > remaining) chunk = remaining;
    Trajectory piece;
    try {
      piece = integrate_field(v, cur, dir < 0 ? Rational(-chunk) : chunk, tol);
    } catch (const std::runtime_error&) {
      chunk /= 2;
      if (chunk < rolle::abs(span) / 4096)
        throw std::runtime_error("integrate_span: picard chunk underflow");
      continue;
    }
    // append, skipping the duplicated junction state
    const size_t start = first ? 0 : 1;
    for (size_t i = start; i < piece.times.size(); ++i) {
      total.times.push_back(t_base + piece.times[i]);
      total.states.push_back(piece.states[i]);
    }
    total.enclosure = first ? piece.enclosure : hull(total.enclosure, piece.enclosure);
    total.picard_chunks += piece.picard_chunks;
    t_base += to_double(dir < 0 ? Rational(-chunk) : chunk);
    // continue from a rational snapshot of the numeric endpoint; the box
    // certification below re-anchors at it
    const auto& last = piece.states.back();
    for (size_t i = 0; i < cur.size(); ++i) cur[i] = Rational(last[i]);
    remaining -= chunk;
    first = false;
  }
  return total;
}

long hyperplane_crossings(const CurveSampler& curve, const std::vector<double>& normal,
                          unsigned grid) {
  if (normal.size() != curve.dim)
    throw std::invalid_argument("hyperplane_crossings: dimension mismatch");
  long crossings = 0;
  int prev = 0;
  for (unsigned i = 0; i <= grid; ++i) {
    const double t = curve.t0 + (curve.t1 - curve.t0) * i / grid;
    const auto x = curve.position(t);
    double dot = 0;
    for (size_t k = 0; k < x.size(); ++k) dot += normal[k] * x[k];
    const int s = dsign(dot);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++crossings;
    prev = s;
  }
  return crossings;
}

HyperplaneStats random_hyperplane_hits(const CurveSampler& curve, std::uint64_t seed,
                                       std::uint64_t n_samples, unsigned grid) {
  if (n_samples == 0) throw std::invalid_argument("random_hyperplane_hits: zero samples");
  HyperplaneStats st;
  st.samples = n_samples;
  double sum = 0, sumsq = 0;
  for (std::uint64_t j = 0; j < n_samples; ++j) {
    CounterRng rng(seed, j);
    const auto normal = rng.unit_vector(curve.dim);
    const long hits = hyperplane_crossings(curve, normal, grid);
    st.max_hits = std::max(st.max_hits, hits);
    sum += hits;
    sumsq += static_cast<double>(hits) * hits;
  }
  st.mean = sum / n_samples;
  const double var =
      n_samples > 1 ? std::max(0.0, (sumsq - sum * sum / n_samples) / (n_samples - 1)) : 0.0;
  st.stddev = std::sqrt(var);
  st.half_width = 1.96 * st.stddev / std::sqrt(static_cast<double>(n_samples));
  return st;
}

}  // namespace rolle
