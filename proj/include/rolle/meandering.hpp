#pragma once
// How often can a polynomial trajectory cross a hyperplane? Differentiating
// an affine function u_0 along the field yields the chain u_{i+1} = D_v u_i;
// once some u_nu lies in the ideal generated by its predecessors — certified
// by explicit bounded-degree cofactors, u_nu = sum_i h_i u_{nu-i} — the
// restriction of u_0 to any trajectory satisfies a linear ODE of order nu
// whose coefficients are the cofactors evaluated along the trajectory. A
// certified enclosure of the trajectory then turns the cofactors into
// magnitude bounds, and the segment zero bound for such ODEs caps the number
// of crossings.

#include <rolle/cert.hpp>
#include <rolle/multipoly.hpp>

#include <optional>
#include <vector>

namespace rolle {

// Derivative of u along the field: sum_i (du/dx_i) v_i.
MultiPoly lie_derivative(const MultiPoly& u, const PolyVectorField& v);

struct IdealChainCertificate {
  unsigned nu = 0;
  std::vector<MultiPoly> chain;      // u_0 .. u_nu, each the derivative of its predecessor
  std::vector<MultiPoly> cofactors;  // h_1 .. h_nu with u_nu = sum_i h_i * u_{nu-i}
  unsigned slack_used = 0;           // degree slack that made the linear system solvable

  // Re-expands sum_i h_i * u_{nu-i} and compares against u_nu exactly.
  bool verify() const;
};

// Solves u_k = sum_{i=1..k} h_i u_{k-i} for polynomial cofactors with
// deg h_i <= deg u_k - deg u_{k-i} + slack, as an exact rational linear
// system in the unknown coefficients. `chain` holds u_0..u_k, k >= 1.
// Returns the cofactors, or nullopt when no solution exists at this slack.
std::optional<std::vector<MultiPoly>> membership_cofactors(const std::vector<MultiPoly>& chain,
                                                           unsigned slack);

// Extends the derivative chain from u_0 and returns the first step nu <= cap
// admitting a cofactor certificate. The degree slack starts at `slack` and
// escalates by 2 up to 8 at each step before moving on. Throws
// std::runtime_error("no certificate within cap") when the cap is exhausted
// — which only means the degree heuristic found nothing, not that the chain
// fails to stabilize.
IdealChainCertificate chain_stabilize(const MultiPoly& u0, const PolyVectorField& v,
                                      unsigned cap = 16, unsigned slack = 2);

// Smallest k >= 0 with (D_v^k P)(q) != 0, by exact evaluation. Throws
// std::domain_error("singular point") when v vanishes at q and
// std::runtime_error starting with "tangency >= cap" when every tested order
// evaluates to zero (the level set may contain the whole trajectory).
unsigned tangency_order(const PolyVectorField& v, const MultiPoly& P,
                        const std::vector<Rational>& q, unsigned cap = 32);

// Upper bound on the number of intersections of the trajectory through q,
// traced for time delta in both directions, with the hyperplane {u0 = 0}.
// Pipeline: chain_stabilize --> certified trajectory enclosure over
// [-delta, delta] --> interval magnitudes of the cofactors --> segment zero
// bound for the induced order-nu linear ODE.
BoundCertificate meandering_bound(const PolyVectorField& v, const MultiPoly& u0,
                                  const std::vector<Rational>& q, const Rational& delta,
                                  unsigned cap = 16, unsigned slack = 2);

}  // namespace rolle
