#pragma once
// Wronskian chains of polynomial tuples and the two classical ways to build
// the order-n linear ODE annihilating a given n-tuple of functions:
//
//  * a composition of first-order operators D_k(g) = (W_k/W_{k-1}) *
//    d/dt((W_{k-1}/W_k) * g), where W_k are the leading-principal Wronskians
//    of the tuple, and
//  * the determinant expansion of the bordered Wronski matrix along its last
//    column, whose minors give polynomial coefficients directly.
//
// Both constructions are carried out symbolically over the field of rational
// functions Q(t), so "annihilates" means the result is the literal zero
// element of that field, not a numerical residual.

#include <rolle/linalg.hpp>
#include <rolle/poly.hpp>
#include <rolle/sampler.hpp>

#include <string>
#include <vector>

namespace rolle {

// Rational function num/den over Q(t), kept in canonical form: den is monic,
// gcd(num, den) = 1, and the zero element is 0/1. Equality of canonical forms
// is therefore equality in the field.
struct RationalFn {
  UniPoly num;
  UniPoly den;

  RationalFn() : num(), den(UniPoly::constant(Rational(1))) {}
  explicit RationalFn(UniPoly n) : num(std::move(n)), den(UniPoly::constant(Rational(1))) {}
  RationalFn(UniPoly n, UniPoly d);

  static RationalFn constant(const Rational& q) { return RationalFn(UniPoly::constant(q)); }

  bool is_zero() const { return num.is_zero(); }

  RationalFn derivative() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }
};

std::string to_string(const RationalFn& f, const std::string& var = "t");

// W_k = det [ f_j^(i) ]_{i=0..k-1, j=1..k} for k = 1..n (n = tuple size).
// Computed exactly with the Bareiss determinant over polynomial entries.
std::vector<UniPoly> wronskian_chain(const std::vector<UniPoly>& tuple);

// Report produced by polya_verify.
struct PolyaReport {
  // W_1..W_n of the tuple, in order.
  std::vector<UniPoly> wronskians;
  // Coefficients c_0..c_n of the expanded composition D_n ... D_1 as an
  // operator sum c_k(t) y^(k); c_n is always the constant 1.
  std::vector<RationalFn> expanded;
  // Per-member results of applying the composition; all must be the zero
  // rational function.
  std::vector<bool> annihilated;

  bool all_annihilated() const {
    for (bool b : annihilated)
      if (!b) return false;
    return !annihilated.empty();
  }
};

// Builds the operators D_k from the Wronskian chain, applies the full
// composition to each tuple member symbolically, and also expands the
// composition into coefficient form. Throws std::domain_error with message
// "linearly dependent tuple" when the top Wronskian is identically zero.
PolyaReport polya_verify(const std::vector<UniPoly>& tuple);

// Annihilating operator from the bordered Wronski matrix: rows are derivative
// orders 0..n of (f_1, ..., f_n, y) and the determinant is expanded along the
// y column. coeffs[k] multiplies y^(k); coeffs[n] equals the top Wronskian of
// the tuple (the minor that deletes the highest-order row).
struct RiemannOperator {
  std::vector<UniPoly> coeffs;  // c_0..c_n, signs folded in
  bool annihilates = false;     // exact check of sum_k c_k f^(k) = 0 per member
};

RiemannOperator riemann_operator(const std::vector<UniPoly>& tuple);

// Applies sum_k coeffs[k] * f^(k) exactly.
UniPoly apply_operator(const std::vector<UniPoly>& coeffs, const UniPoly& f);
RationalFn apply_operator(const std::vector<RationalFn>& coeffs, const UniPoly& f);

// Numeric consistency probe for sampler tuples, where no symbolic form is
// available: at each sample point the bordered Wronski determinant is
// evaluated with the column y = f_m for every member m, and the largest
// absolute value is returned. Members must expose derivatives up to order n.
double annihilation_residual(const std::vector<AnalyticSampler>& tuple,
                             const std::vector<std::complex<double>>& points);

}  // namespace rolle
