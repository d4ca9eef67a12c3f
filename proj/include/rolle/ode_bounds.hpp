#pragma once
// Zero bounds for solutions of linear ODEs y^(n) + a_1 y^(n-1) + ... + a_n y = 0
// driven only by the magnitudes A_k >= sup |a_k| over the domain.

#include <rolle/cert.hpp>
#include <rolle/poly.hpp>
#include <rolle/rational.hpp>
#include <rolle/sturm.hpp>

#include <vector>

namespace rolle {

struct OdeDomain {
  enum class Kind { Segment, Disk } kind = Kind::Segment;
  // Segment: [0, length]. Disk: |z - center| <= radius.
  Rational length;
  CRational center;
  Rational radius;

  static OdeDomain segment(const Rational& len);
  static OdeDomain disk(const CRational& c, const Rational& r);
};

struct LinearOdeSpec {
  unsigned order = 0;                  // n >= 1
  std::vector<Rational> coeff_bounds;  // A_1 .. A_n (size == order)
  OdeDomain domain;

  void validate() const;
};

// sum_{k=1..n} A_k l^k / k! evaluated exactly.
Rational dlvp_sum(const std::vector<Rational>& A, const Rational& ell);

// Largest dyadic l with dlvp_sum(A, l) < theta (strict): doubling bracket
// then 64 bisections. All-zero A makes every length admissible.
struct AdmissibleLength {
  Rational value;
  bool unbounded = false;
};
AdmissibleLength dlvp_admissible_length(const std::vector<Rational>& A, const Rational& theta);

// Segment zero bound: split [0, L] into m = ceil(L / l*) admissible pieces,
// each contributing at most n - 1 zeros.
BoundCertificate dlvp_zero_bound(const LinearOdeSpec& spec);

// Disk zero bound: cover the disk with axis squares whose diagonal stays
// below the admissible length; each square (convex, small diameter)
// contributes at most n - 1 zeros.
BoundCertificate kim_zero_bound(const LinearOdeSpec& spec);

// Argument-variation bound along a segment, in half-turn units: with
// dlvp_sum < 1/2 a solution turns by at most (n + 1) half-turns per piece.
BoundCertificate complex_variation_bound(const LinearOdeSpec& spec);

// ||f||_[0,l] <= l^n / n! * ||f^(n)||_[0,l] for f with >= n + 1 roots
// (with multiplicity) in [0, l]. Both sides are enclosed by certified
// sup bounds; `verified` means lhs.hi <= factor * rhs.lo.
struct NormInequalityReport {
  bool hypothesis_ok = false;   // root count >= n + 1
  Integer roots_with_mult;
  SupEnclosure lhs;             // sup |f|
  SupEnclosure rhs;             // sup |f^(n)|
  Rational factor;              // l^n / n!
  bool verified = false;
  bool indeterminate = false;   // enclosures too wide to decide
};
NormInequalityReport symplex_inequality_check(const UniPoly& f, unsigned n, const Rational& ell);

}  // namespace rolle
