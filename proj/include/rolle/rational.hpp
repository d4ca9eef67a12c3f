#pragma once
// Exact scalar layer: arbitrary-precision rationals on top of GMP, plus the
// small extensions the counting code needs everywhere: decimal-string
// parsing, directed square-root brackets, pi brackets, complex rationals
// with squared-modulus comparisons.

#include <gmpxx.h>

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace rolle {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }
inline double to_double(const Rational& q) { return q.get_d(); }

inline Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Integer ceil_int(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// q^e for integer e (e < 0 requires q != 0).
inline Rational pow_rational(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("pow_rational: 0^negative");
    return 1 / pow_rational(q, -e);
  }
  Rational base = q, acc = 1;
  for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1) {
    if (k & 1) acc *= base;
    if (k > 1) base *= base;
  }
  return acc;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Parses "3/7", "-12", "0.25", "2.5e-3" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  };
  if (s.empty()) return fail();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return fail();
    Integer n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) return fail();
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  // decimal form: [sign] digits [. digits] [e[sign]digits]
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0, exp10 = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    digits += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_len;
    }
  }
  if (digits.empty()) return fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    std::string ed;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ed += s[i++];
    if (ed.empty() || ed.size() > 6) return fail();
    exp10 = std::atol(ed.c_str());
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size()) return fail();
  Integer mant;
  if (mant.set_str(digits, 10) != 0) return fail();
  Rational q(mant);
  const long net = exp10 - frac_len;
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  if (net >= 0)
    q *= Rational(p10);
  else
    q /= Rational(p10);
  if (neg) q = -q;
  q.canonicalize();
  return q;
}

// Directed square-root bracket: lo^2 <= q <= hi^2 with hi - lo = 2^-bits.
struct SqrtBracket {
  Rational lo, hi;
};

inline SqrtBracket sqrt_bracket(const Rational& q, unsigned bits = 48) {
  if (q < 0) throw std::domain_error("sqrt_bracket: negative input");
  if (q == 0) return {0, 0};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * bits);
  const Integer t = floor_int(q * Rational(scale));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  Integer half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, bits);
  Rational lo(s, half), hi(s + 1, half);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

// Classical brackets 333/106 < pi < 355/113.
inline const Rational& pi_upper() {
  static const Rational v(355, 113);
  return v;
}
inline const Rational& pi_lower() {
  static const Rational v(333, 106);
  return v;
}

// Complex numbers with exact rational parts. Modulus comparisons go through
// norm2() so the exact paths never need a square root.
struct CRational {
  Rational re, im;

  CRational() : re(0), im(0) {}
  CRational(Rational r) : re(std::move(r)), im(0) {}
  CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CRational(int r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  CRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  friend CRational operator+(const CRational& a, const CRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRational operator-(const CRational& a, const CRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRational operator/(const CRational& a, const CRational& b) {
    const Rational n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("CRational: division by zero");
    const CRational p = a * b.conj();
    return {p.re / n2, p.im / n2};
  }
  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline std::string to_string(const CRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = to_string(z.re);
  s += (z.im < 0 ? "-" : "+");
  s += to_string(rolle::abs(z.im));
  s += "i";
  return s;
}

// Rational upper bound on |z|: exact on the axes, sqrt bracket otherwise.
inline Rational modulus_upper(const CRational& z, unsigned bits = 48) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_bracket(z.norm2(), bits).hi;
}
inline Rational modulus_lower(const CRational& z, unsigned bits = 48) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_bracket(z.norm2(), bits).lo;
}

}  // namespace rolle
