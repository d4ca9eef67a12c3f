#include <rolle/sturm.hpp>

#include <deque>
#include <stdexcept>

namespace rolle {

namespace {

// Scale by a positive rational so coefficients become coprime integers.
// Sign-change counting is invariant under positive scaling, and primitive
// chains keep Euclidean remainder growth tame.
UniPoly make_primitive(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : p.c) {
    if (c == 0) continue;
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    den_lcm = l;
  }
  for (const auto& c : p.c) {
    if (c == 0) continue;
    const Integer n = c.get_num() * den_lcm / c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return p;
  const Rational scale = Rational(den_lcm) / Rational(num_gcd);
  return scale * p;
}

UniPoly deflate_at(UniPoly p, const Rational& r, int* removed = nullptr) {
  const UniPoly lin({-r, 1});
  while (!p.is_zero() && p.eval<Rational>(r) == 0) {
    p = exact_divide(p, lin);
    if (removed) ++*removed;
  }
  return p;
}

}  // namespace

SturmSeq SturmSeq::build(const UniPoly& p) {
  SturmSeq s;
  UniPoly a = make_primitive(p);
  UniPoly b = make_primitive(a.derivative());
  s.seq.push_back(a);
  while (!b.is_zero()) {
    s.seq.push_back(b);
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = make_primitive(-r);
  }
  return s;
}

int SturmSeq::sign_changes_at(const Rational& x) const {
  int changes = 0, prev = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval<Rational>(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int sturm_root_count(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("sturm_root_count: zero polynomial");
  if (a >= b) return 0;
  const bool b_is_root = p.eval<Rational>(b) == 0;
  UniPoly q = deflate_at(deflate_at(p, a), b);
  int interior = 0;
  if (!q.is_zero() && q.degree() > 0) {
    const SturmSeq s = SturmSeq::build(q);
    interior = s.sign_changes_at(a) - s.sign_changes_at(b);
  }
  return interior + (b_is_root ? 1 : 0);
}

int count_distinct_closed(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("count_distinct_closed: zero polynomial");
  if (a > b) return 0;
  const bool a_is_root = p.eval<Rational>(a) == 0;
  if (a == b) return a_is_root ? 1 : 0;
  return sturm_root_count(p, a, b) + (a_is_root ? 1 : 0);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  const UniPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return exact_divide(p, g);
}

std::vector<SquareFreeFactor> squarefree_decomposition(const UniPoly& p) {
  // Yun's algorithm over Q.
  std::vector<SquareFreeFactor> out;
  if (p.is_zero() || p.degree() == 0) return out;
  UniPoly g = poly_gcd(p, p.derivative());
  UniPoly w = exact_divide(p, g);
  UniPoly y = exact_divide(p.derivative(), g);
  UniPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly f = poly_gcd(w, z);
    if (f.degree() > 0) out.push_back({f, i});
    w = exact_divide(w, f.degree() > 0 ? f : UniPoly::constant(1));
    y = f.degree() > 0 ? exact_divide(z, f) : z;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Integer count_multiplicity_closed(const UniPoly& p, const Rational& a, const Rational& b) {
  Integer total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    total += Integer(mult) * count_distinct_closed(factor, a, b);
  return total;
}

std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Rational& a,
                                        const Rational& b, unsigned refine_bits) {
  std::vector<IsolatedRoot> out;
  if (p.is_zero() || a > b) return out;
  UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return out;

  if (q.eval<Rational>(a) == 0) {
    out.push_back({QIv(a), true});
    q = deflate_at(q, a);
  }
  if (b > a && q.eval<Rational>(b) == 0) {
    out.push_back({QIv(b), true});
    q = deflate_at(q, b);
  }
  if (q.degree() <= 0) return out;

  const Rational min_width = (b - a) / pow_rational(Rational(2), refine_bits);
  const SturmSeq s0 = SturmSeq::build(q);

  struct Task {
    Rational lo, hi;
    int count;
  };
  std::deque<Task> work;
  {
    const int n = s0.sign_changes_at(a) - s0.sign_changes_at(b);
    if (n > 0) work.push_back({a, b, n});
  }
  // Exact roots found mid-bisection get divided out, which invalidates the
  // chain; rebuild lazily.
  SturmSeq s = s0;
  while (!work.empty()) {
    Task t = work.front();
    work.pop_front();
    if (t.count == 1 && t.hi - t.lo <= min_width) {
      out.push_back({QIv(t.lo, t.hi), false});
      continue;
    }
    const Rational mid = (t.lo + t.hi) / 2;
    if (q.eval<Rational>(mid) == 0) {
      out.push_back({QIv(mid), true});
      q = deflate_at(q, mid);
      if (q.degree() <= 0) continue;
      s = SturmSeq::build(q);
      const int left = s.sign_changes_at(t.lo) - s.sign_changes_at(mid);
      const int right = s.sign_changes_at(mid) - s.sign_changes_at(t.hi);
      if (left > 0) work.push_back({t.lo, mid, left});
      if (right > 0) work.push_back({mid, t.hi, right});
      continue;
    }
    const int left = s.sign_changes_at(t.lo) - s.sign_changes_at(mid);
    const int right = t.count - left;
    if (left > 0) work.push_back({t.lo, mid, left});
    if (right > 0) work.push_back({mid, t.hi, right});
  }

  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.where.lo < y.where.lo; });
  return out;
}

QIv interval_eval(const UniPoly& p, const QIv& x) {
  QIv acc(Rational(0));
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + QIv(p.c[i]);
  return acc;
}

SupEnclosure certified_sup(const UniPoly& p, const Rational& a, const Rational& b,
                           unsigned depth) {
  if (a > b) throw std::invalid_argument("certified_sup: empty interval");
  if (p.is_zero()) return {0, 0};
  Rational lo = rolle::abs(p.eval<Rational>(a));
  {
    const Rational vb = rolle::abs(p.eval<Rational>(b));
    if (vb > lo) lo = vb;
  }
  Rational hi = lo;
  const UniPoly dp = p.derivative();
  if (!dp.is_zero() && a < b) {
    for (const auto& root : isolate_roots(dp, a, b, depth)) {
      if (root.exact) {
        const Rational v = rolle::abs(p.eval<Rational>(root.where.lo));
        if (v > lo) lo = v;
        if (v > hi) hi = v;
      } else {
        const Rational vl = rolle::abs(p.eval<Rational>(root.where.lo));
        const Rational vh = rolle::abs(p.eval<Rational>(root.where.hi));
        if (vl > lo) lo = vl;
        if (vh > lo) lo = vh;
        const Rational range = interval_eval(p, root.where).mag();
        if (range > hi) hi = range;
      }
    }
  }
  return {lo, hi};
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0)
    throw std::domain_error("cauchy_root_bound: needs positive degree");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const Rational v = rolle::abs(p.coeff(i));
    if (v > m) m = v;
  }
  return 1 + m / rolle::abs(p.leading());
}

}  // namespace rolle
