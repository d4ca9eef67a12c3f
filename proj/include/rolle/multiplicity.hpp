#pragma once
// Intersection multiplicity of square polynomial map germs vanishing at the
// origin, computed two independent ways:
//
//  * the dual-space route: the dimension of the space of finite-order
//    functionals at 0 annihilating the ideal generated by the components,
//    found as the kernel of an exact rational constraint system order by
//    order until the dimension stops growing, and
//  * the jet-corank route: the rank of the truncated multiplication map
//    (a_1..a_n) |-> jet_k(sum a_i f_i) on order-k jets, whose corank drops
//    to the multiplicity once k is large enough.
//
// A numeric perturbation oracle (resultant elimination plus simultaneous
// root iteration, n <= 2) counts actual preimages of a nearby regular value
// so both algebraic answers can be cross-checked against geometry.

#include <rolle/linalg.hpp>
#include <rolle/multipoly.hpp>
#include <rolle/poly.hpp>

#include <string>
#include <vector>

namespace rolle {

struct MapGerm {
  std::vector<MultiPoly> components;  // n components, each in n variables

  size_t dim() const { return components.size(); }
  // Square system, matching variable counts, every component vanishing at 0.
  void validate() const;
};

// Order of vanishing at 0: index of the first nonzero coefficient.
// Throws std::invalid_argument when f is identically zero.
unsigned univariate_mult(const UniPoly& f);
// Same for a truncated coefficient list; all-zero data only bounds the order
// from below, reported as std::runtime_error("multiplicity >= truncation
// order ...").
unsigned univariate_mult(const std::vector<Rational>& taylor);

// Truncated multiplication map on order-k jets in the graded-lex monomial
// basis: rows are monomials of total degree <= k, column (i, m) holds the
// order-k jet of m * f_i.
struct JetMatrix {
  unsigned order = 0;
  size_t jet_dimension = 0;  // rows; columns = components * jet_dimension
  QMatrix entries;
};
JetMatrix jet_matrix(const MapGerm& F, unsigned k);

struct MultiplicityReport {
  unsigned mu = 0;
  bool capped = false;  // cap hit while the dimension was still growing
  std::string method;
  std::vector<size_t> dual_dims;  // dimension history for k = 0, 1, ...
};

// Dual-space multiplicity. Stabilization is declared after
// `stationary_steps` consecutive equal dimensions (default one stationary
// step); `capped` reports mu as a lower bound only, which is what a
// non-isolated germ produces.
MultiplicityReport local_algebra_multiplicity(const MapGerm& F, unsigned cap = 16,
                                              unsigned stationary_steps = 1);

struct CorankResult {
  size_t jet_dimension = 0;
  size_t rank = 0;
  size_t corank = 0;        // jet_dimension - rank
  bool mult_at_most_k = false;  // corank <= k
};
CorankResult corank_jet_test(const MapGerm& F, unsigned k);

// Minor-based signal on the same jet matrix: the multiplicity exceeds k
// exactly when every minor of size (jet_dimension - k) vanishes. The
// magnitude is the absolute determinant of a greedily pivoted minor of that
// size (0 when they all vanish, 1 for the empty minor).
struct MinorSignal {
  bool all_vanish = false;
  Rational magnitude;
  size_t minor_size = 0;
  std::string note;
};
MinorSignal multiplicity_operator_signal(const MapGerm& F, unsigned k);

// Numeric oracle, n <= 2: count solutions of F = target inside the complex
// ball |x|^2 + |y|^2 < radius^2 by eliminating the second variable with an
// exact resultant and clustering the root candidates. Throws
// std::runtime_error when the eliminant vanishes identically (positive-
// dimensional fiber) or the root clusters are too ambiguous to count.
long perturbed_preimage_count(const MapGerm& F, const std::vector<Rational>& target,
                              double ball_radius);

// Exact resultant of two bivariate polynomials with respect to the second
// variable, as a polynomial in the first (Sylvester determinant over
// polynomial entries).
UniPoly resultant_second_var(const MultiPoly& f, const MultiPoly& g);

}  // namespace rolle
