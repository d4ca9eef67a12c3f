#pragma once
// Dense univariate polynomials over an exact field (Rational or CRational).
// Index i holds the coefficient of t^i; trailing zeros are stripped so the
// zero polynomial has an empty coefficient vector and degree -1.

#include <rolle/rational.hpp>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rolle {

template <class V, class K>
V scalar_cast(const K& x) {
  return static_cast<V>(x);
}
template <>
inline double scalar_cast<double, Rational>(const Rational& x) {
  return to_double(x);
}
template <>
inline std::complex<double> scalar_cast<std::complex<double>, Rational>(const Rational& x) {
  return {to_double(x), 0.0};
}
template <>
inline std::complex<double> scalar_cast<std::complex<double>, CRational>(const CRational& z) {
  return z.to_complex();
}
template <>
inline CRational scalar_cast<CRational, Rational>(const Rational& x) {
  return CRational(x);
}

template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { normalize(); }
  static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
  static Poly variable() { return Poly(std::vector<K>{K(0), K(1)}); }

  void normalize() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  K coeff(size_t i) const { return i < c.size() ? c[i] : K(0); }
  const K& leading() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<K> r = a.c;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const K& s, const Poly& a) {
    std::vector<K> r = a.c;
    for (auto& x : r) x = s * x;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  Poly derivative() const {
    if (c.size() <= 1) return {};
    std::vector<K> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = K(static_cast<int>(i)) * c[i];
    return Poly(std::move(r));
  }

  // t^k * p
  Poly shifted_up(size_t k) const {
    if (is_zero()) return {};
    std::vector<K> r(c.size() + k, K(0));
    std::copy(c.begin(), c.end(), r.begin() + k);
    return Poly(std::move(r));
  }

  template <class V>
  V eval(const V& x) const {
    V acc = V(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + scalar_cast<V>(c[i]);
    return acc;
  }
};

using UniPoly = Poly<Rational>;
using CPoly = Poly<CRational>;

// Euclidean division over the coefficient field: a = q*b + r, deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<K> r = a, q;
  q.c.assign(a.c.size(), K(0));
  const K inv_lead = K(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const size_t shift = static_cast<size_t>(r.degree() - b.degree());
    const K f = r.leading() * inv_lead;
    q.c[shift] = q.c[shift] + f;
    for (size_t i = 0; i < b.c.size(); ++i)
      r.c[shift + i] = r.c[shift + i] - f * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

// Exact quotient; throws if the division leaves a remainder.
template <class K>
Poly<K> exact_divide(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_divide: remainder nonzero");
  return q;
}

// Monic gcd over the coefficient field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (K(1) / a.leading()) * a;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, unsigned e) {
  Poly<K> acc = Poly<K>::constant(K(1)), base = p;
  for (; e; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

std::string poly_to_string(const UniPoly& p, const std::string& var = "t");
std::string poly_to_string(const CPoly& p, const std::string& var = "z");

// Widen a real polynomial to complex coefficients.
inline CPoly complexify(const UniPoly& p) {
  std::vector<CRational> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) c[i] = CRational(p.c[i]);
  return CPoly(std::move(c));
}

}  // namespace rolle
