#pragma once
// Exact linear algebra over the rationals (and Bareiss determinants over
// polynomial entries). Pivot selection is deterministic: first usable row in
// column order, so identical inputs always reduce identically.

#include <rolle/poly.hpp>
#include <rolle/rational.hpp>

#include <optional>
#include <vector>

namespace rolle {

using QMatrix = std::vector<std::vector<Rational>>;

size_t rank(QMatrix m);
inline size_t kernel_dim(const QMatrix& m) {
  return (m.empty() ? 0 : m[0].size()) - rank(m);
}

// One solution of A x = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_consistent(QMatrix a, std::vector<Rational> b);

Rational det(QMatrix m);

// Determinant of a square matrix of rational polynomials (fraction-free
// Bareiss; divisions are exact in the polynomial ring).
UniPoly det(std::vector<std::vector<UniPoly>> m);

// Greedy maximal-rank minor: walks columns left to right taking the first
// pivot row each time; returns the determinant of the first `size` x `size`
// nonsingular submatrix found that way, or 0 when rank(m) < size.
Rational greedy_minor_det(const QMatrix& m, size_t size);

}  // namespace rolle
