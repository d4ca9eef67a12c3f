#pragma once
// Constant-coefficient equations in the derivation t*d/dt and their zero
// bounds. Solutions are combinations of t^lambda * ln^k t; in the logarithmic
// chart z = ln t these become z^k * e^(lambda z), and the monodromy shift
// z -> z + 2*pi*i acts on them exactly. The shift-difference operators built
// here kill the solution space one characteristic root at a time, which turns
// an argument-variation estimate on short vertical segments into an integer
// bound for zeros of real solutions on (0, 1).
//
// Scalars live in an exact formal ring: polynomials in a symbol standing for
// the circle constant, tensored with unit phases u^q (one per rational
// winding q, representing e^(2*pi*i*q)). Phase exponents add freely and are
// never reduced, so equality of two scalars means equality of the formal
// expansions; formal zero implies numeric zero, never the other way around.

#include <rolle/cert.hpp>
#include <rolle/poly.hpp>
#include <rolle/rational.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace rolle {

// Polynomial in the formal circle constant over complex rationals. c()[m]
// multiplies the m-th power of the constant.
class PiPoly {
 public:
  PiPoly() = default;
  explicit PiPoly(CRational constant);
  // scale * pi^m
  static PiPoly pi_power(unsigned m, CRational scale);

  bool is_zero() const { return c_.empty(); }
  const std::vector<CRational>& c() const { return c_; }

  friend PiPoly operator+(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator-(const PiPoly& a, const PiPoly& b);
  friend PiPoly operator-(const PiPoly& a);
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }

  std::complex<double> eval(double pi_value) const;
  std::string str() const;

 private:
  std::vector<CRational> c_;
  void trim();
};

// Finite formal sum of terms c_q * u^q with PiPoly coefficients c_q and unit
// phases u^q indexed by rational windings q. Products add the windings.
class PhaseSum {
 public:
  PhaseSum() = default;
  explicit PhaseSum(PiPoly constant);
  explicit PhaseSum(CRational constant);
  // u^q alone
  static PhaseSum phase(const Rational& q);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Rational, PiPoly>& terms() const { return terms_; }
  void add(const Rational& q, const PiPoly& coeff);

  friend PhaseSum operator+(const PhaseSum& a, const PhaseSum& b);
  friend PhaseSum operator-(const PhaseSum& a, const PhaseSum& b);
  friend PhaseSum operator-(const PhaseSum& a);
  friend PhaseSum operator*(const PhaseSum& a, const PhaseSum& b);
  friend bool operator==(const PhaseSum& a, const PhaseSum& b) {
    return a.terms_ == b.terms_;
  }

  // Numeric value with u^q read as exp(2*pi*i*q).
  std::complex<double> eval(double pi_value) const;
  std::string str() const;

 private:
  std::map<Rational, PiPoly> terms_;
};

// Monic operator E^n + b_1 E^(n-1) + ... + b_n in the derivation E = t*d/dt.
struct EulerOperatorSpec {
  unsigned order = 0;
  std::vector<Rational> coeffs;  // b_1 .. b_n

  void validate() const;
  // lambda^n + b_1 lambda^(n-1) + ... + b_n
  UniPoly characteristic() const;
};

// Roots of the characteristic polynomial with multiplicities.
struct SpectrumData {
  struct Line {
    Rational lambda;
    unsigned multiplicity = 0;
  };
  std::vector<Line> lines;  // lambda strictly increasing

  unsigned total() const;
};

// Combination of terms z^k * e^(lambda z) (that is, t^lambda * ln^k t) with
// PhaseSum coefficients, stored per characteristic root as a z-polynomial.
class PseudomonomialSum {
 public:
  PseudomonomialSum() = default;
  static PseudomonomialSum term(const Rational& lambda, unsigned k, CRational coeff);

  void add(const Rational& lambda, unsigned k, const PhaseSum& coeff);
  bool is_zero() const { return parts_.empty(); }
  const std::map<Rational, std::vector<PhaseSum>>& parts() const { return parts_; }
  // Highest power of z attached to this root; -1 when the root is absent.
  int degree_in_z(const Rational& lambda) const;
  // True when every coefficient is a plain real rational (no phases, no
  // circle-constant powers): such a sum is real-valued for t > 0.
  bool real_for_positive_t() const;

  friend PseudomonomialSum operator+(const PseudomonomialSum& a, const PseudomonomialSum& b);
  friend PseudomonomialSum operator-(const PseudomonomialSum& a, const PseudomonomialSum& b);
  friend bool operator==(const PseudomonomialSum& a, const PseudomonomialSum& b) {
    return a.parts_ == b.parts_;
  }

  std::complex<double> eval_z(std::complex<double> z, double pi_value) const;
  std::string str() const;

 private:
  std::map<Rational, std::vector<PhaseSum>> parts_;
  void trim(const Rational& lambda);
};

struct EulerSolution {
  SpectrumData spectrum;
  // One generator per (root, power): z^k e^(lambda z), k below the root's
  // multiplicity; exactly `order` entries.
  std::vector<PseudomonomialSum> basis;
};

// Exact spectrum of the characteristic polynomial. Throws std::runtime_error
// when the roots are not all rational (unresolved or non-real spectrum).
EulerSolution euler_solve(const EulerOperatorSpec& spec);

// The difference operator mu^(-1) D - mu D^(-1) where (Df)(z) = f(z + 2 pi i)
// and mu = e^(2 pi i lambda_mu); exact on pseudomonomial sums.
PseudomonomialSum petrov_apply(const Rational& lambda_mu, const PseudomonomialSum& f);

struct AnnihilationReport {
  PseudomonomialSum remainder;  // image under the full composed operator
  bool annihilated = false;     // remainder formally zero
};

// Applies the composition of one difference operator per spectral line, each
// iterated to the line's multiplicity. Members of the solution space map to
// the formal zero; anything else leaves a nonzero remainder.
AnnihilationReport annihilator_check(const SpectrumData& spectrum, const PseudomonomialSum& f);

// Integer bound for the number of isolated zeros of any real solution on the
// interval (0, 1). Requires the full spectrum to be real (rational); the
// derivation runs through the argument-variation bound on vertical segments
// of length 4 pi in the logarithmic chart.
BoundCertificate roitman_zero_bound(const EulerOperatorSpec& spec);

}  // namespace rolle
