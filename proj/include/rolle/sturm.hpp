#pragma once
// Exact real-root counting and certified suprema for rational polynomials:
// Sturm sequences, bisection isolation, Yun square-free decomposition.

#include <rolle/interval.hpp>
#include <rolle/poly.hpp>

#include <vector>

namespace rolle {

// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k); entries scaled
// primitive to keep coefficient growth in check.
struct SturmSeq {
  std::vector<UniPoly> seq;

  static SturmSeq build(const UniPoly& p);
  int sign_changes_at(const Rational& x) const;
};

// Distinct real roots of p in the half-open interval (a, b].
int sturm_root_count(const UniPoly& p, const Rational& a, const Rational& b);

// Distinct real roots of p in the closed interval [a, b].
int count_distinct_closed(const UniPoly& p, const Rational& a, const Rational& b);

// An isolated real root: either an exact rational point (lo == hi) or an open
// bracket with a sign change of the square-free part.
struct IsolatedRoot {
  QIv where;
  bool exact;
  Rational approx() const { return where.mid(); }
};

// Disjoint isolating intervals for all distinct roots of p in [a, b], each
// refined until its width is at most (b-a) * 2^-refine_bits.
std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Rational& a,
                                        const Rational& b, unsigned refine_bits = 40);

UniPoly squarefree_part(const UniPoly& p);

struct SquareFreeFactor {
  UniPoly factor;  // monic, square-free
  unsigned multiplicity;
};
std::vector<SquareFreeFactor> squarefree_decomposition(const UniPoly& p);

// Roots in [a, b] counted with multiplicity.
Integer count_multiplicity_closed(const UniPoly& p, const Rational& a, const Rational& b);

// Enclosure of sup_{[a,b]} |p|: lo <= sup <= hi. Exact (lo == hi) whenever
// every interior extremum of p sits at a binary-rational point reached by the
// bisection, and always at polynomial endpoints/exact critical points.
struct SupEnclosure {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
};
SupEnclosure certified_sup(const UniPoly& p, const Rational& a, const Rational& b,
                           unsigned depth = 32);

// All real roots lie strictly inside (-M, M), M = 1 + max |c_i| / |lead|.
Rational cauchy_root_bound(const UniPoly& p);

// Conservative range of p over an interval (Horner in interval arithmetic).
QIv interval_eval(const UniPoly& p, const QIv& x);

inline int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace rolle
