#include <rolle/multiplicity.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace rolle {

void MapGerm::validate() const {
  if (components.empty()) throw std::invalid_argument("MapGerm: empty system");
  const std::vector<Rational> origin(components.size(), Rational(0));
  for (const MultiPoly& f : components) {
    if (f.nvars() != components.size())
      throw std::invalid_argument("MapGerm: system is not square");
    if (f.eval(origin) != 0)
      throw std::invalid_argument("MapGerm: component does not vanish at the origin");
  }
}

unsigned univariate_mult(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("univariate_mult: zero polynomial");
  for (size_t i = 0; i < f.c.size(); ++i)
    if (f.c[i] != 0) return static_cast<unsigned>(i);
  throw std::logic_error("univariate_mult: unreachable");
}

unsigned univariate_mult(const std::vector<Rational>& taylor) {
  for (size_t i = 0; i < taylor.size(); ++i)
    if (taylor[i] != 0) return static_cast<unsigned>(i);
  std::ostringstream os;
  os << "multiplicity >= truncation order (" << taylor.size() << ")";
  throw std::runtime_error(os.str());
}

JetMatrix jet_matrix(const MapGerm& F, unsigned k) {
  F.validate();
  const size_t n = F.dim();
  const auto monos = monomials_up_to(n, k);
  const size_t dim = monos.size();

  std::map<Exponents, size_t, GrlexLess> row_of;
  for (size_t r = 0; r < dim; ++r) row_of.emplace(monos[r], r);

  JetMatrix jm;
  jm.order = k;
  jm.jet_dimension = dim;
  jm.entries.assign(dim, std::vector<Rational>(n * dim, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t c = 0; c < dim; ++c) {
      const MultiPoly prod = MultiPoly::monomial(n, monos[c], Rational(1)) * F.components[i];
      const size_t col = i * dim + c;
      for (const auto& [e, coef] : prod.terms()) {
        if (total_degree(e) > k) continue;
        jm.entries[row_of.at(e)][col] = coef;
      }
    }
  }
  return jm;
}

MultiplicityReport local_algebra_multiplicity(const MapGerm& F, unsigned cap,
                                              unsigned stationary_steps) {
  F.validate();
  if (stationary_steps == 0) throw std::invalid_argument("stationary_steps must be >= 1");
  const size_t n = F.dim();

  MultiplicityReport rep;
  rep.method = "local-algebra";

  unsigned quiet = 0;
  for (unsigned k = 0; k <= cap; ++k) {
    // Unknowns: functional coefficients over monomials of degree <= k.
    const auto monos = monomials_up_to(n, k);
    std::map<Exponents, size_t, GrlexLess> col_of;
    for (size_t c = 0; c < monos.size(); ++c) col_of.emplace(monos[c], c);

    // One constraint per component and shift monomial of degree <= k - 1:
    // the functional must kill the order-k jet of x^beta * f_i.
    QMatrix a;
    if (k > 0) {
      for (const MultiPoly& f : F.components) {
        for (const Exponents& beta : monomials_up_to(n, k - 1)) {
          std::vector<Rational> row(monos.size(), Rational(0));
          for (const auto& [e, coef] : f.terms()) {
            Exponents shifted = e;
            for (size_t t = 0; t < n; ++t) shifted[t] += beta[t];
            if (total_degree(shifted) > k) continue;
            row[col_of.at(shifted)] = coef;
          }
          a.push_back(std::move(row));
        }
      }
    }
    const size_t dim = a.empty() ? monos.size() : kernel_dim(a);
    rep.dual_dims.push_back(dim);

    if (k > 0 && dim == rep.dual_dims[k - 1]) {
      if (++quiet >= stationary_steps) {
        rep.mu = static_cast<unsigned>(dim);
        return rep;
      }
    } else {
      quiet = 0;
    }
  }
  rep.capped = true;
  rep.mu = static_cast<unsigned>(rep.dual_dims.back());
  return rep;
}

CorankResult corank_jet_test(const MapGerm& F, unsigned k) {
  const JetMatrix jm = jet_matrix(F, k);
  CorankResult res;
  res.jet_dimension = jm.jet_dimension;
  res.rank = rank(jm.entries);
  res.corank = res.jet_dimension - res.rank;
  res.mult_at_most_k = res.corank <= k;
  return res;
}

MinorSignal multiplicity_operator_signal(const MapGerm& F, unsigned k) {
  const JetMatrix jm = jet_matrix(F, k);
  const CorankResult cr = corank_jet_test(F, k);

  MinorSignal sig;
  sig.minor_size = jm.jet_dimension > k ? jm.jet_dimension - k : 0;
  sig.all_vanish = cr.corank > k;
  if (sig.all_vanish) {
    sig.magnitude = Rational(0);
  } else {
    sig.magnitude = abs(greedy_minor_det(jm.entries, sig.minor_size));
  }
  std::ostringstream os;
  os << "minors of size " << sig.minor_size << " of the order-" << k
     << " jet matrix; entries are jet coefficients of monomial multiples of the components";
  sig.note = os.str();
  return sig;
}

UniPoly resultant_second_var(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw std::invalid_argument("resultant_second_var: needs bivariate inputs");

  // Rewrite p(x, y) as a polynomial in y with UniPoly-in-x coefficients.
  const auto by_y = [](const MultiPoly& p) {
    std::vector<UniPoly> c;
    for (const auto& [e, coef] : p.terms()) {
      if (c.size() <= e[1]) c.resize(e[1] + 1);
      std::vector<Rational> mono(e[0] + 1, Rational(0));
      mono[e[0]] = coef;
      c[e[1]] = c[e[1]] + UniPoly(std::move(mono));
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
  };
  const std::vector<UniPoly> a = by_y(f), b = by_y(g);
  if (a.empty() || b.empty()) return {};  // resultant with the zero polynomial
  const size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0 && n == 0) throw std::domain_error("resultant_second_var: neither input involves y");
  if (m == 0) return poly_pow(a[0], static_cast<unsigned>(n));
  if (n == 0) return poly_pow(b[0], static_cast<unsigned>(m));

  std::vector<std::vector<UniPoly>> syl(m + n, std::vector<UniPoly>(m + n));
  for (size_t r = 0; r < n; ++r)
    for (size_t j = 0; j <= m; ++j) syl[r][r + j] = a[m - j];
  for (size_t r = 0; r < m; ++r)
    for (size_t j = 0; j <= n; ++j) syl[n + r][r + j] = b[n - j];
  return det(std::move(syl));
}

namespace {

using Cx = std::complex<double>;

// Simultaneous root iteration on a monic-normalized coefficient list
// (index i = coefficient of z^i). Returns all complex roots.
std::vector<Cx> all_roots(std::vector<Cx> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) throw std::runtime_error("all_roots: degree zero polynomial");
  const size_t deg = c.size() - 1;
  for (auto& x : c) x /= c[deg];

  const auto eval = [&](Cx z) {
    Cx acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  };

  double radius = 0;
  for (size_t i = 0; i < deg; ++i) radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / (deg - i)));
  radius = 2 * radius + 1;

  std::vector<Cx> z(deg);
  for (size_t j = 0; j < deg; ++j) {
    const double ang = 2 * 3.14159265358979323846 * (j + 0.25) / deg + 0.5;
    z[j] = radius * Cx(std::cos(ang), std::sin(ang));
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0;
    for (size_t j = 0; j < deg; ++j) {
      Cx denom = 1;
      for (size_t mth = 0; mth < deg; ++mth)
        if (mth != j) denom *= (z[j] - z[mth]);
      if (std::abs(denom) == 0.0) {
        z[j] += Cx(1e-8, 1e-8);
        continue;
      }
      const Cx step = eval(z[j]) / denom;
      z[j] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-13) break;
  }
  return z;
}

std::vector<Cx> complex_coeffs(const UniPoly& p) {
  std::vector<Cx> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) c[i] = Cx(to_double(p.c[i]), 0.0);
  return c;
}

}  // namespace

long perturbed_preimage_count(const MapGerm& F, const std::vector<Rational>& target_in,
                              double ball_radius) {
  F.validate();
  if (target_in.size() != F.dim())
    throw std::invalid_argument("perturbed_preimage_count: target arity mismatch");
  if (F.dim() > 2)
    throw std::invalid_argument("perturbed_preimage_count: implemented for n <= 2 only");
  // Exact arithmetic downstream requires reduced fractions; don't trust the
  // caller's constructor discipline.
  std::vector<Rational> target = target_in;
  for (auto& t : target) t.canonicalize();

  if (F.dim() == 1) {
    UniPoly f;
    {
      // Flatten the one-variable MultiPoly.
      std::vector<Rational> c;
      for (const auto& [e, coef] : F.components[0].terms()) {
        if (c.size() <= e[0]) c.resize(e[0] + 1, Rational(0));
        c[e[0]] = coef;
      }
      f = UniPoly(std::move(c));
    }
    f = f - UniPoly::constant(target[0]);
    if (f.is_zero()) throw std::runtime_error("positive-dimensional fiber");
    if (f.degree() == 0) return 0;
    long count = 0;
    for (const Cx& z : all_roots(complex_coeffs(f)))
      if (std::norm(z) < ball_radius * ball_radius) ++count;
    return count;
  }

  const MultiPoly g1 = F.components[0] - MultiPoly::constant(2, target[0]);
  const MultiPoly g2 = F.components[1] - MultiPoly::constant(2, target[1]);
  const UniPoly elim = resultant_second_var(g1, g2);
  if (elim.is_zero()) throw std::runtime_error("positive-dimensional fiber");
  if (elim.degree() == 0) return 0;

  {
    // A shared factor with positive x-degree but no y-dependence (a common
    // vertical line, say) slips past the y-resultant, so run the swapped
    // elimination as well before trusting a finite count.
    const auto swap_vars = [](const MultiPoly& p) {
      MultiPoly q(2);
      for (const auto& [e, c] : p.terms()) q.add_term({e[1], e[0]}, c);
      return q;
    };
    if (resultant_second_var(swap_vars(g1), swap_vars(g2)).is_zero())
      throw std::runtime_error("positive-dimensional fiber");
  }

  // Solve the eliminant for x, then extend each x to full solutions by
  // solving one component in y. Candidate pairs are Newton-polished on the
  // full system afterwards: spurious pairings either drift onto a genuine
  // solution (and collapse in the dedupe below) or keep a large residual.
  const std::vector<Cx> xs = all_roots(complex_coeffs(elim));

  const MultiPoly d1x = g1.partial(0), d1y = g1.partial(1);
  const MultiPoly d2x = g2.partial(0), d2y = g2.partial(1);

  const auto eval2 = [](const MultiPoly& p, Cx x, Cx y) {
    Cx acc = 0;
    for (const auto& [e, coef] : p.terms())
      acc += to_double(coef) * std::pow(x, e[0]) * std::pow(y, e[1]);
    return acc;
  };
  // Residual measured against the summed term magnitudes: stays meaningful
  // near the origin where the components themselves are tiny.
  const auto relative_residual = [](const MultiPoly& p, Cx x, Cx y) {
    Cx acc = 0;
    double scale = 0;
    for (const auto& [e, coef] : p.terms()) {
      const Cx t = to_double(coef) * std::pow(x, e[0]) * std::pow(y, e[1]);
      acc += t;
      scale += std::abs(t);
    }
    return std::abs(acc) / std::max(scale, 1e-300);
  };
  const auto polish = [&](Cx& x, Cx& y) {
    for (int it = 0; it < 40; ++it) {
      const Cx f1 = eval2(g1, x, y), f2 = eval2(g2, x, y);
      const Cx a = eval2(d1x, x, y), b = eval2(d1y, x, y);
      const Cx c = eval2(d2x, x, y), d = eval2(d2y, x, y);
      const Cx det = a * d - b * c;
      if (std::abs(det) == 0.0) return;
      const Cx dx = (f1 * d - f2 * b) / det;
      const Cx dy = (a * f2 - c * f1) / det;
      x -= dx;
      y -= dy;
      if (std::abs(dx) + std::abs(dy) < 1e-14 * (1.0 + std::abs(x) + std::abs(y))) return;
    }
  };

  std::vector<std::pair<Cx, Cx>> sols;
  for (const Cx& x0 : xs) {
    // Coefficients of g1(x0, y) in y; fall back to g2 when it degenerates.
    bool extended = false;
    for (const MultiPoly* gp : {&g1, &g2}) {
      std::vector<Cx> cy;
      for (const auto& [e, coef] : gp->terms()) {
        if (cy.size() <= e[1]) cy.resize(e[1] + 1, Cx(0, 0));
        cy[e[1]] += to_double(coef) * std::pow(x0, e[0]);
      }
      double top = 0;
      for (const Cx& c : cy) top = std::max(top, std::abs(c));
      while (!cy.empty() && std::abs(cy.back()) <= 1e-9 * top) cy.pop_back();
      if (cy.size() <= 1) continue;  // no y-dependence at this x0; try the other
      for (const Cx& y0 : all_roots(cy)) {
        Cx px = x0, py = y0;
        polish(px, py);
        if (relative_residual(g1, px, py) > 1e-9 || relative_residual(g2, px, py) > 1e-9)
          continue;
        sols.emplace_back(px, py);
      }
      extended = true;
      break;
    }
    if (!extended && std::abs(eval2(g1, x0, 0)) < 1e-9 && std::abs(eval2(g2, x0, 0)) < 1e-9) {
      // Neither component depends on y at this root, yet both vanish: the
      // whole vertical line solves the system.
      throw std::runtime_error("positive-dimensional fiber");
    }
  }

  // Cluster numerically identical pairs (the eliminant repeats x when several
  // iterates land on the same root).
  std::vector<std::pair<Cx, Cx>> distinct;
  for (const auto& s : sols) {
    bool dup = false;
    for (const auto& d : distinct)
      if (std::abs(s.first - d.first) < 1e-6 && std::abs(s.second - d.second) < 1e-6) dup = true;
    if (!dup) distinct.push_back(s);
  }

  long count = 0;
  for (const auto& [x0, y0] : distinct) {
    const double r2 = std::norm(x0) + std::norm(y0);
    if (std::abs(r2 - ball_radius * ball_radius) < 1e-9)
      throw std::runtime_error("preimage sits on the ball boundary; count ambiguous");
    if (r2 < ball_radius * ball_radius) ++count;
  }
  return count;
}

}  // namespace rolle
