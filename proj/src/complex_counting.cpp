#include <rolle/complex_counting.hpp>

#include <rolle/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rolle {

Rational CPGonPair::gap_lower() const {
  const CRational dc = outer.center - inner.center;
  return outer.radius - inner.radius - modulus_upper(dc);
}

void CPGonPair::validate() const {
  if (!(inner.radius > 0) || !(outer.radius > 0))
    throw std::invalid_argument("regions need positive radii");
  if (!(gap_lower() > 0)) throw std::invalid_argument("inner region must sit strictly inside");
}

void NestedTriple::validate() const {
  CPGonPair a{inner, middle};
  CPGonPair b{middle, outer};
  a.validate();
  b.validate();
}

namespace {

// sup of N(t) / (1 + t^2)^{2d} over [-1, 1], N >= 0 on [-1, 1].
SupEnclosure sup_ratio_chart(const UniPoly& N, long d) {
  // explicit return type: gmpxx would otherwise hand back an expression
  // template referencing dead temporaries
  const auto val_at = [&](const Rational& t) -> Rational {
    return N.eval(t) / pow_rational(Rational(1) + t * t, 2 * d);
  };
  const auto den_iv = [&](const QIv& t) {
    const QIv base = QIv{Rational(1), Rational(1)} + t.pow(2);
    return base.pow(static_cast<unsigned>(2 * d));
  };

  SupEnclosure out{val_at(Rational(-1)), val_at(Rational(-1))};
  auto take_exact = [&](const Rational& v) {
    if (v > out.lo) out.lo = v;
    if (v > out.hi) out.hi = v;
  };
  take_exact(val_at(Rational(1)));

  const UniPoly D = poly_pow(UniPoly({Rational(1), Rational(0), Rational(1)}),
                             static_cast<unsigned>(2 * d));
  const UniPoly crit = N.derivative() * D - N * D.derivative();
  if (crit.degree() >= 1) {
    for (const auto& root : isolate_roots(squarefree_part(crit), Rational(-1), Rational(1), 48)) {
      if (root.exact) {
        take_exact(val_at(root.where.lo));
      } else {
        take_exact(val_at(root.where.lo));
        take_exact(val_at(root.where.hi));
        QIv nn = interval_eval(N, root.where);
        if (nn.hi < 0) nn.hi = Rational(0);
        const Rational up = nn.hi / den_iv(root.where).lo;
        if (up > out.hi) out.hi = up;
      }
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> split_re_im(const CPoly& p) {
  std::vector<Rational> re, im;
  for (long k = 0; k <= p.degree(); ++k) {
    re.push_back(p.coeff(k).re);
    im.push_back(p.coeff(k).im);
  }
  return {UniPoly(re), UniPoly(im)};
}

}  // namespace

SupEnclosure sup_modulus_sq_on_circle(const CPoly& p, const CircleRegion& circle) {
  if (!(circle.radius > 0)) throw std::invalid_argument("circle needs a positive radius");
  if (p.degree() < 0) return {Rational(0), Rational(0)};
  const long d = p.degree();

  // z(t) = center + R * ((1 - t^2) + 2 i t) / (1 + t^2) on one chart and
  // center + R * ((t^2 - 1) + 2 i t) / (1 + t^2) on the other; both with
  // t in [-1, 1] they cover the whole circle. Clearing denominators leaves
  // |p(z(t))|^2 = N(t) / (1 + t^2)^{2d} with polynomial N.
  const CRational R(circle.radius, Rational(0));
  const CRational two_i_R(Rational(0), Rational(2) * circle.radius);
  const CPoly one_plus_t2({CRational(Rational(1), Rational(0)), CRational(),
                           CRational(Rational(1), Rational(0))});

  SupEnclosure best;
  bool first = true;
  for (int chart = 0; chart < 2; ++chart) {
    const Rational sgn_r = chart == 0 ? Rational(1) : Rational(-1);
    // w(t) = center (1 + t^2) + sgn R (1 - t^2) + 2 i R t
    const CPoly w({circle.center + CRational(sgn_r * circle.radius, Rational(0)),
                   two_i_R,
                   circle.center - CRational(sgn_r * circle.radius, Rational(0))});
    CPoly q;  // sum a_k w^k (1 + t^2)^{d - k}
    for (long k = 0; k <= d; ++k) {
      const CRational a = p.coeff(k);
      if (a.re == 0 && a.im == 0) continue;
      CPoly term = poly_pow(w, static_cast<unsigned>(k)) *
                   poly_pow(one_plus_t2, static_cast<unsigned>(d - k));
      q = q + CPoly({a}) * term;
    }
    auto [qre, qim] = split_re_im(q);
    const UniPoly N = qre * qre + qim * qim;
    SupEnclosure s = sup_ratio_chart(N, d);
    if (first) {
      best = s;
      first = false;
    } else {
      if (s.lo > best.lo) best.lo = s.lo;
      if (s.hi > best.hi) best.hi = s.hi;
    }
  }
  return best;
}

double sampled_sup_modulus(const AnalyticSampler& f, const CircleRegion& circle) {
  const std::complex<double> c = circle.center.to_complex();
  const double R = to_double(circle.radius);
  double prev1 = -1, prev2 = -1;
  double best = 0;
  unsigned n = 64;
  for (int level = 0; level < 18; ++level, n *= 2) {
    best = 0;
    for (unsigned i = 0; i < n; ++i) {
      const double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
      const double m = std::abs(f.eval(c + std::complex<double>(R * std::cos(th),
                                                                R * std::sin(th))));
      if (m > best) best = m;
    }
    const double scale = std::max(best, 1e-300);
    if (prev2 >= 0 && std::abs(best - prev1) <= 1e-8 * scale &&
        std::abs(prev1 - prev2) <= 1e-8 * scale)
      return best;
    prev2 = prev1;
    prev1 = best;
  }
  return best;
}

BoundCertificate jensen_zero_bound(const AnalyticSampler& f, const CRational& center_value,
                                   const Rational& inner_radius, const Rational& boundary_max) {
  const Rational m2 = center_value.norm2();
  if (m2 == 0)
    throw std::invalid_argument("vanishing center value; factor out the known order first");
  if (!(inner_radius > 0) || !(inner_radius < 1))
    throw std::invalid_argument("inner radius must lie in (0, 1)");
  if (!(boundary_max > 0)) throw std::invalid_argument("boundary max must be positive");
  const Rational M2 = boundary_max * boundary_max;
  if (m2 > M2)
    throw std::invalid_argument("boundary max below the center value; not a boundary max");

  // largest k with |f(0)| (1/r)^k <= M1, compared as m2 <= M2 r^{2k}
  const Rational r2 = inner_radius * inner_radius;
  std::uint64_t k = 0;
  Rational pw = M2;
  while (k < (1u << 20)) {
    const Rational next = pw * r2;
    if (m2 <= next) {
      pw = next;
      ++k;
    } else {
      break;
    }
  }

  BoundCertificate cert;
  cert.bound = k;
  cert.method = "jensen-growth";
  cert.statement =
      "each zero in the r-disk contributes a factor >= 1/r between |f(0)| and the boundary max "
      "of |f| on the unit circle";
  cert.hypotheses.push_back({"center-within-boundary-max", to_string(m2), "<=", to_string(M2),
                             m2 <= M2});
  cert.trace.push_back("sampler = " + f.label());
  cert.trace.push_back("|f(0)|^2 = " + to_string(m2));
  cert.trace.push_back("M1^2 = " + to_string(M2));
  cert.trace.push_back("r = " + to_string(inner_radius));
  return cert;
}

double bernstein_index(const AnalyticSampler& f, const CPGonPair& pair) {
  pair.validate();
  if (const CPoly* p = f.exact_poly()) {
    if (p->degree() < 0) throw std::invalid_argument("zero function has no index");
    const SupEnclosure mk = sup_modulus_sq_on_circle(*p, pair.inner);
    const SupEnclosure mu = sup_modulus_sq_on_circle(*p, pair.outer);
    const double B = 0.5 * (std::log(to_double(mu.hi)) - std::log(to_double(mk.hi)));
    return B < 0 ? 0.0 : B;
  }
  const double mk = sampled_sup_modulus(f, pair.inner);
  const double mu = sampled_sup_modulus(f, pair.outer);
  if (mu < 1e-300) throw std::runtime_error("all boundary samples vanish; zero function?");
  const double B = std::log(mu) - std::log(mk);
  return B < 0 ? 0.0 : B;
}

BernsteinRolleReport bernstein_rolle_report(const AnalyticSampler& f, const NestedTriple& triple) {
  triple.validate();
  if (!f.differentiable())
    throw std::invalid_argument("sampler cannot produce the derivative");
  const CPGonPair pair{triple.inner, triple.outer};
  BernsteinRolleReport rep;
  rep.index_f = bernstein_index(f, pair);
  rep.index_df = bernstein_index(f.derivative(), pair);
  rep.defect = rep.index_f - rep.index_df;
  return rep;
}

VoorhoeveResult voorhoeve_index(const AnalyticSampler& f, std::complex<double> center,
                                double radius, double tol) {
  const WindingResult w = count_disk_zeros(f, center, radius, tol);
  VoorhoeveResult out;
  out.variation = w.total_variation;
  out.winding = w.winding;
  out.samples = w.samples;
  out.converged = w.converged;
  return out;
}

GrowthClassParams bernstein_class_params(const std::vector<Rational>& coeffs, unsigned nu,
                                         const Rational& R) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  if (!(R > 0)) throw std::invalid_argument("radius must be positive");

  GrowthClassParams out;
  Rational sup(0), head(0);
  Rational w(1);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const Rational v = abs(coeffs[k]) * w;
    if (v > sup) {
      sup = v;
      out.sup_index = k;
    }
    if (k <= nu && v > head) {
      head = v;
      out.head_index = k;
    }
    w = w * R;
  }
  if (head == 0) throw std::invalid_argument("coefficients up to nu all vanish");
  out.c = sup / head;
  return out;
}

Rational pseudopoly_variation_radians_upper(const PseudoPolynomial& p,
                                            const Rational& boundary_length) {
  PseudoPolynomial q = p;
  q.normalize();
  if (q.terms.empty()) throw std::invalid_argument("empty spectrum");
  if (!(boundary_length > 0)) throw std::invalid_argument("boundary length must be positive");
  const long n = q.degree_sum();
  Rational mult(0);
  for (const auto& term : q.terms)
    mult = mult + Rational(term.poly.degree() + 1) * modulus_upper(term.lambda);
  // peeling one exponential factor costs |lambda| L of variation each way,
  // and each of the n - 1 derivations costs one full turn
  return Rational(2) * pi_upper() * Rational(n - 1) + Rational(2) * boundary_length * mult;
}

BoundCertificate pseudopoly_voorhoeve_bound(const PseudoPolynomial& p,
                                            const Rational& boundary_length) {
  const Rational radians = pseudopoly_variation_radians_upper(p, boundary_length);
  const Integer implied = floor_int(radians / (Rational(2) * pi_lower()));

  PseudoPolynomial q = p;
  q.normalize();
  BoundCertificate cert;
  cert.bound = static_cast<std::uint64_t>(implied.get_ui());
  cert.method = "argument-variation-exponential-sum";
  cert.statement =
      "total argument variation of the sum along the convex boundary is at most the traced "
      "radian bound; interior zeros cannot exceed variation / 2 pi";
  cert.hypotheses.push_back({"radian-bound-nonnegative", to_string(radians), ">=", "0",
                             radians >= 0});
  cert.trace.push_back("degree = " + std::to_string(q.degree_sum()));
  cert.trace.push_back("variation bound (radians, exact upper) = " + to_string(radians));
  cert.trace.push_back("boundary length = " + to_string(boundary_length));
  return cert;
}

}  // namespace rolle
