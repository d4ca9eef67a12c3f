#include <rolle/ode_bounds.hpp>

#include <stdexcept>

namespace rolle {

OdeDomain OdeDomain::segment(const Rational& len) {
  OdeDomain d;
  d.kind = Kind::Segment;
  d.length = len;
  return d;
}

OdeDomain OdeDomain::disk(const CRational& c, const Rational& r) {
  OdeDomain d;
  d.kind = Kind::Disk;
  d.center = c;
  d.radius = r;
  return d;
}

void LinearOdeSpec::validate() const {
  if (order == 0) throw std::invalid_argument("ode: order must be >= 1");
  if (coeff_bounds.size() != order)
    throw std::invalid_argument("ode: need one magnitude bound per coefficient");
  for (const auto& A : coeff_bounds)
    if (A < 0) throw std::invalid_argument("ode: coefficient bounds must be >= 0");
  if (domain.kind == OdeDomain::Kind::Segment) {
    if (!(domain.length > 0)) throw std::invalid_argument("ode: segment length must be > 0");
  } else {
    if (!(domain.radius > 0)) throw std::invalid_argument("ode: disk radius must be > 0");
  }
}

Rational dlvp_sum(const std::vector<Rational>& A, const Rational& ell) {
  Rational s(0);
  Rational lk(1);
  for (size_t k = 1; k <= A.size(); ++k) {
    lk = lk * ell;
    s = s + A[k - 1] * lk / Rational(factorial(static_cast<unsigned>(k)));
  }
  return s;
}

AdmissibleLength dlvp_admissible_length(const std::vector<Rational>& A, const Rational& theta) {
  if (!(theta > 0)) throw std::invalid_argument("admissible length: theta must be > 0");
  bool all_zero = true;
  for (const auto& a : A)
    if (!(a == 0)) all_zero = false;
  if (all_zero) return {Rational(0), true};

  auto ok = [&](const Rational& ell) { return dlvp_sum(A, ell) < theta; };

  Rational lo, hi;
  if (ok(Rational(1))) {
    lo = Rational(1);
    hi = Rational(2);
    unsigned guard = 0;
    while (ok(hi)) {
      lo = hi;
      hi = hi * Rational(2);
      if (++guard > 256) throw std::runtime_error("admissible length: no upper bracket");
    }
  } else {
    hi = Rational(1);
    lo = Rational(1, 2);
    unsigned guard = 0;
    while (!ok(lo)) {
      hi = lo;
      lo = lo / Rational(2);
      if (++guard > 256) throw std::runtime_error("admissible length: no lower bracket");
    }
  }
  for (int i = 0; i < 64; ++i) {
    Rational mid = (lo + hi) / Rational(2);
    if (ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, false};
}

namespace {

Rational piece_theta() { return Rational(1) - Rational(1, Integer(1) << 20); }

std::uint64_t checked_product(const Integer& pieces, unsigned per_piece) {
  Integer total = pieces * Integer(per_piece);
  if (total > Integer(std::uint64_t(1) << 62))
    throw std::runtime_error("zero bound overflows: admissible length too small for domain");
  std::uint64_t out = 0;
  if (total > 0) out = static_cast<std::uint64_t>(total.get_ui());
  return out;
}

}  // namespace

BoundCertificate dlvp_zero_bound(const LinearOdeSpec& spec) {
  spec.validate();
  if (spec.domain.kind != OdeDomain::Kind::Segment)
    throw std::invalid_argument("segment bound called with a non-segment domain");
  const unsigned n = spec.order;
  const Rational L = spec.domain.length;
  const Rational theta = piece_theta();

  BoundCertificate cert;
  cert.method = "vallee-poussin-segment";
  cert.statement =
      "each piece with sum A_k l^k / k! < 1 carries at most n - 1 zeros of any solution";

  Integer m(1);
  Rational ell = L;
  const Rational whole = dlvp_sum(spec.coeff_bounds, L);
  if (whole < theta) {
    cert.trace.push_back("whole segment admissible");
  } else {
    AdmissibleLength adm = dlvp_admissible_length(spec.coeff_bounds, theta);
    // adm.unbounded is impossible here: the whole-segment test already failed.
    ell = adm.value;
    m = ceil_int(L / ell);
    cert.trace.push_back("admissible length = " + to_string(ell));
  }
  cert.bound = checked_product(m, n - 1);
  cert.hypotheses.push_back({"piece-sum", to_string(dlvp_sum(spec.coeff_bounds, ell)), "<",
                             to_string(theta), dlvp_sum(spec.coeff_bounds, ell) < theta});
  cert.trace.push_back("pieces = " + m.get_str());
  cert.trace.push_back("per-piece zeros <= " + std::to_string(n - 1));
  return cert;
}

BoundCertificate kim_zero_bound(const LinearOdeSpec& spec) {
  spec.validate();
  if (spec.domain.kind != OdeDomain::Kind::Disk)
    throw std::invalid_argument("disk bound called with a non-disk domain");
  const unsigned n = spec.order;
  const Rational r = spec.domain.radius;
  const Rational theta = piece_theta();

  BoundCertificate cert;
  cert.method = "convex-domain-covering";
  cert.statement =
      "each convex piece of diameter below the admissible length carries at most n - 1 zeros";

  const Rational diam = Rational(2) * r;
  Integer cells(1);
  Rational piece_diam = diam;
  if (dlvp_sum(spec.coeff_bounds, diam) < theta) {
    cert.trace.push_back("whole disk admissible (diameter " + to_string(diam) + ")");
  } else {
    AdmissibleLength adm = dlvp_admissible_length(spec.coeff_bounds, theta);
    // Square side s with s * sqrt(2) < l*: 181/256 < 1/sqrt(2) exactly
    // (181^2 = 32761 < 32768), so the cell diagonal stays admissible.
    const Rational s = adm.value * Rational(181, 256);
    piece_diam = adm.value;
    const Rational cx = spec.domain.center.re, cy = spec.domain.center.im;
    const Integer i0 = floor_int((cx - r) / s), i1 = ceil_int((cx + r) / s);
    const Integer j0 = floor_int((cy - r) / s), j1 = ceil_int((cy + r) / s);
    const Rational r2 = r * r;
    cells = 0;
    for (Integer i = i0; i < i1; i = i + 1) {
      const Rational x_lo = Rational(i) * s, x_hi = Rational(i + 1) * s;
      Rational dx(0);
      if (cx < x_lo)
        dx = x_lo - cx;
      else if (cx > x_hi)
        dx = cx - x_hi;
      for (Integer j = j0; j < j1; j = j + 1) {
        const Rational y_lo = Rational(j) * s, y_hi = Rational(j + 1) * s;
        Rational dy(0);
        if (cy < y_lo)
          dy = y_lo - cy;
        else if (cy > y_hi)
          dy = cy - y_hi;
        if (dx * dx + dy * dy <= r2) cells = cells + 1;
      }
    }
    cert.trace.push_back("admissible length = " + to_string(adm.value));
    cert.trace.push_back("cell side = " + to_string(s));
  }
  cert.bound = checked_product(cells, n - 1);
  cert.hypotheses.push_back({"piece-sum", to_string(dlvp_sum(spec.coeff_bounds, piece_diam)), "<",
                             to_string(theta),
                             dlvp_sum(spec.coeff_bounds, piece_diam) < theta});
  cert.trace.push_back("pieces = " + cells.get_str());
  cert.trace.push_back("per-piece zeros <= " + std::to_string(n - 1));
  return cert;
}

BoundCertificate complex_variation_bound(const LinearOdeSpec& spec) {
  spec.validate();
  if (spec.domain.kind != OdeDomain::Kind::Segment)
    throw std::invalid_argument("variation bound called with a non-segment domain");
  const unsigned n = spec.order;
  const Rational L = spec.domain.length;
  const Rational theta(1, 2);

  BoundCertificate cert;
  cert.method = "argument-variation-segment";
  cert.statement =
      "with sum A_k l^k / k! < 1/2 the argument of any solution varies by at most "
      "(n + 1) half-turns per piece; the bound is in half-turn units";

  Integer m(1);
  Rational ell = L;
  if (dlvp_sum(spec.coeff_bounds, L) < theta) {
    cert.trace.push_back("whole segment admissible");
  } else {
    AdmissibleLength adm = dlvp_admissible_length(spec.coeff_bounds, theta);
    ell = adm.value;
    m = ceil_int(L / ell);
    cert.trace.push_back("admissible length = " + to_string(ell));
  }
  cert.bound = checked_product(m, n + 1);
  cert.hypotheses.push_back({"piece-sum", to_string(dlvp_sum(spec.coeff_bounds, ell)), "<",
                             to_string(theta), dlvp_sum(spec.coeff_bounds, ell) < theta});
  cert.trace.push_back("pieces = " + m.get_str());
  cert.trace.push_back("variation <= bound * pi radians");
  return cert;
}

NormInequalityReport symplex_inequality_check(const UniPoly& f, unsigned n, const Rational& ell) {
  if (n == 0) throw std::invalid_argument("norm inequality: n must be >= 1");
  if (!(ell > 0)) throw std::invalid_argument("norm inequality: segment length must be > 0");

  NormInequalityReport rep;
  rep.roots_with_mult = count_multiplicity_closed(f, Rational(0), ell);
  rep.hypothesis_ok = rep.roots_with_mult >= Integer(n + 1);

  UniPoly dn = f;
  for (unsigned k = 0; k < n; ++k) dn = dn.derivative();
  rep.lhs = certified_sup(f, Rational(0), ell);
  rep.rhs = certified_sup(dn, Rational(0), ell);
  rep.factor = pow_rational(ell, n) / Rational(factorial(n));

  const Rational rhs_scaled_lo = rep.factor * rep.rhs.lo;
  const Rational rhs_scaled_hi = rep.factor * rep.rhs.hi;
  rep.verified = rep.lhs.hi <= rhs_scaled_lo;
  rep.indeterminate = !rep.verified && !(rep.lhs.lo > rhs_scaled_hi);
  return rep;
}

}  // namespace rolle
