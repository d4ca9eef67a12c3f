#include <rolle/wronskian.hpp>

#include <complex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rolle {

RationalFn::RationalFn(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den = UniPoly::constant(Rational(1));
    return;
  }
  const UniPoly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = exact_divide(num, g);
    den = exact_divide(den, g);
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num = inv * num;
    den = inv * den;
  }
}

RationalFn RationalFn::derivative() const {
  return RationalFn(num.derivative() * den - num * den.derivative(), den * den);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num * b.num, a.den * b.den);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFn(a.num * b.den, a.den * b.num);
}

std::string to_string(const RationalFn& f, const std::string& var) {
  if (f.den.degree() == 0 && f.den.coeff(0) == 1) return poly_to_string(f.num, var);
  std::ostringstream os;
  os << "(" << poly_to_string(f.num, var) << ") / (" << poly_to_string(f.den, var) << ")";
  return os.str();
}

namespace {

// Rows are derivative orders 0..rows-1 of the tuple members (columns).
std::vector<std::vector<UniPoly>> derivative_matrix(const std::vector<UniPoly>& tuple,
                                                    size_t rows) {
  std::vector<std::vector<UniPoly>> m(rows, std::vector<UniPoly>(tuple.size()));
  for (size_t j = 0; j < tuple.size(); ++j) {
    UniPoly g = tuple[j];
    for (size_t i = 0; i < rows; ++i) {
      m[i][j] = g;
      g = g.derivative();
    }
  }
  return m;
}

std::vector<std::vector<UniPoly>> leading_block(const std::vector<std::vector<UniPoly>>& m,
                                                size_t k) {
  std::vector<std::vector<UniPoly>> b(k, std::vector<UniPoly>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) b[i][j] = m[i][j];
  return b;
}

}  // namespace

std::vector<UniPoly> wronskian_chain(const std::vector<UniPoly>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("wronskian_chain: empty tuple");
  const auto m = derivative_matrix(tuple, tuple.size());
  std::vector<UniPoly> w(tuple.size());
  for (size_t k = 1; k <= tuple.size(); ++k) w[k - 1] = det(leading_block(m, k));
  return w;
}

PolyaReport polya_verify(const std::vector<UniPoly>& tuple) {
  PolyaReport rep;
  rep.wronskians = wronskian_chain(tuple);
  const size_t n = tuple.size();
  if (rep.wronskians[n - 1].is_zero()) throw std::domain_error("linearly dependent tuple");

  // W_0 = 1 prepended so factors[k] below can index W_{k-1} uniformly.
  std::vector<UniPoly> w(n + 1);
  w[0] = UniPoly::constant(Rational(1));
  for (size_t k = 1; k <= n; ++k) w[k] = rep.wronskians[k - 1];
  // Intermediate Wronskians may vanish somewhere (or even identically for a
  // dependent prefix); only the top one is required to be nonzero for the
  // construction to make sense. Division by a zero intermediate is a hard
  // error rather than a silent wrong answer.
  for (size_t k = 1; k < n; ++k)
    if (w[k].is_zero()) throw std::domain_error("linearly dependent tuple");

  // Expand the composition D_n ... D_1 into coefficient form. Starting from
  // the identity operator, each step maps  sum_j c_j y^(j)  to
  //   (W_k/W_{k-1}) * sum_j [ (r c_j)' y^(j) + (r c_j) y^(j+1) ],
  // with r = W_{k-1}/W_k.
  std::vector<RationalFn> coeffs{RationalFn::constant(Rational(1))};
  for (size_t k = 1; k <= n; ++k) {
    const RationalFn r(w[k - 1], w[k]);
    const RationalFn s(w[k], w[k - 1]);
    std::vector<RationalFn> next(coeffs.size() + 1);
    for (size_t j = 0; j < coeffs.size(); ++j) {
      const RationalFn rc = r * coeffs[j];
      next[j] = next[j] + s * rc.derivative();
      next[j + 1] = next[j + 1] + s * rc;
    }
    coeffs = std::move(next);
  }
  rep.expanded = std::move(coeffs);

  // Annihilation is checked against the definition: apply D_1, then D_2, ...
  // to each member in the rational-function field. The expanded coefficient
  // form above is the same operator but is validated independently in tests.
  rep.annihilated.reserve(n);
  for (const UniPoly& f : tuple) {
    RationalFn g{f};
    for (size_t k = 1; k <= n; ++k) {
      const RationalFn r(w[k - 1], w[k]);
      const RationalFn s(w[k], w[k - 1]);
      g = s * (r * g).derivative();
    }
    rep.annihilated.push_back(g.is_zero());
  }
  return rep;
}

RiemannOperator riemann_operator(const std::vector<UniPoly>& tuple) {
  if (tuple.empty()) throw std::invalid_argument("riemann_operator: empty tuple");
  const size_t n = tuple.size();
  const auto m = derivative_matrix(tuple, n + 1);

  RiemannOperator op;
  op.coeffs.resize(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    // Minor that deletes derivative-order row k; the cofactor sign for entry
    // (row k, last column) of the (n+1)-square bordered matrix is (-1)^(k+n).
    std::vector<std::vector<UniPoly>> minor;
    minor.reserve(n);
    for (size_t i = 0; i <= n; ++i)
      if (i != k) minor.push_back(m[i]);
    UniPoly d = det(std::move(minor));
    op.coeffs[k] = ((k + n) % 2 == 0) ? d : -d;
  }
  if (op.coeffs[n].is_zero()) throw std::domain_error("linearly dependent tuple");

  op.annihilates = true;
  for (const UniPoly& f : tuple)
    if (!apply_operator(op.coeffs, f).is_zero()) op.annihilates = false;
  return op;
}

UniPoly apply_operator(const std::vector<UniPoly>& coeffs, const UniPoly& f) {
  UniPoly acc, g = f;
  for (const UniPoly& c : coeffs) {
    acc = acc + c * g;
    g = g.derivative();
  }
  return acc;
}

RationalFn apply_operator(const std::vector<RationalFn>& coeffs, const UniPoly& f) {
  RationalFn acc;
  UniPoly g = f;
  for (const RationalFn& c : coeffs) {
    acc = acc + c * RationalFn(g);
    g = g.derivative();
  }
  return acc;
}

namespace {

std::complex<double> complex_det(std::vector<std::vector<std::complex<double>>> a) {
  const size_t n = a.size();
  std::complex<double> d(1.0, 0.0);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      d = -d;
    }
    d *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      const std::complex<double> f = a[r][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return d;
}

}  // namespace

double annihilation_residual(const std::vector<AnalyticSampler>& tuple,
                             const std::vector<std::complex<double>>& points) {
  if (tuple.empty()) throw std::invalid_argument("annihilation_residual: empty tuple");
  const size_t n = tuple.size();

  // Precompute samplers for derivative orders 0..n of each member.
  std::vector<std::vector<AnalyticSampler>> jets(n);
  for (size_t j = 0; j < n; ++j) {
    AnalyticSampler g = tuple[j];
    for (size_t i = 0; i <= n; ++i) {
      jets[j].push_back(g);
      if (i < n) g = g.derivative();
    }
  }

  double worst = 0.0;
  for (const auto& z : points) {
    std::vector<std::vector<std::complex<double>>> base(n + 1,
                                                        std::vector<std::complex<double>>(n + 1));
    for (size_t i = 0; i <= n; ++i)
      for (size_t j = 0; j < n; ++j) base[i][j] = jets[j][i].eval(z);
    for (size_t pick = 0; pick < n; ++pick) {
      auto mat = base;
      for (size_t i = 0; i <= n; ++i) mat[i][n] = base[i][pick];
      worst = std::max(worst, std::abs(complex_det(std::move(mat))));
    }
  }
  return worst;
}

}  // namespace rolle
