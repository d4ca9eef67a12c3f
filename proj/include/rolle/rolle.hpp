#pragma once
// Univariate real counting bounds: Descartes-style fewnomial bounds and the
// classical Rolle chain, with Sturm oracles for exact cross-checks.

#include <rolle/cert.hpp>
#include <rolle/poly.hpp>
#include <rolle/sturm.hpp>

#include <vector>

namespace rolle {

// Sparse (possibly Laurent) polynomial given by exponent/coefficient pairs.
struct Fewnomial {
  struct Term {
    long exponent;
    Rational coeff;  // nonzero
  };
  std::vector<Term> terms;  // strictly increasing exponents

  void validate() const;
  // Multiply by t^-min_exponent: positive roots are unchanged.
  UniPoly to_unipoly() const;
  std::vector<int> sign_sequence() const;
  int sign_changes() const;
};

// Positive-root bound: min(#terms - 1, sign changes of the coefficients).
BoundCertificate fewnomial_positive_bound(const Fewnomial& f);

// Exact count of distinct positive roots, Sturm on (0, M] with the Cauchy
// bound M; independent of the sign-counting path.
struct FewnomialCount {
  long count = 0;
  Rational cauchy_bound;
};
FewnomialCount fewnomial_positive_count(const Fewnomial& f);

// Z(f) <= Z(f') + phi(left) - phi(right) with phi = |sign f - sign f'| / 2
// at the segment endpoints; neither f nor f' may vanish there (signs are
// -1 or +1). Negative values clamp to zero.
BoundCertificate refined_rolle_bound(long z_fprime, int sign_f_left, int sign_df_left,
                                     int sign_f_right, int sign_df_right);

struct ChainRow {
  unsigned order = 0;        // which derivative
  long distinct = 0;         // Z on [a, b]
  Integer with_multiplicity; // N on [a, b]
};
struct ChainReport {
  std::vector<ChainRow> rows;
  bool distinct_ok = false;  // Z(f^(k)) <= Z(f^(k+1)) + 1 down the chain
  bool mult_ok = false;      // N(f^(k)) <= N(f^(k+1)) + 1
};
// Tabulates Z and N for f, f', f'', ... on [a, b] and verifies the Rolle
// descent inequalities.
ChainReport rolle_chain_check(const UniPoly& f, const Rational& a, const Rational& b);

}  // namespace rolle
