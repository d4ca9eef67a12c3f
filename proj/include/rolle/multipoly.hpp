#pragma once
// Sparse multivariate polynomials over the rationals with graded-lex term
// order (total degree first, then lexicographic with earlier variables
// ranked higher). The deterministic order matters: jet matrices and
// stabilization systems are assembled by walking these maps.

#include <rolle/interval.hpp>
#include <rolle/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace rolle {

using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (unsigned k : e) s += k;
  return s;
}

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;  // lexicographic tie-break
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit MultiPoly(size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(size_t nvars, Rational c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), std::move(c));
    return p;
  }
  static MultiPoly variable(size_t nvars, size_t i);
  static MultiPoly monomial(size_t nvars, Exponents e, Rational c) {
    MultiPoly p(nvars);
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_deg() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
  }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void add_term(Exponents e, Rational c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly partial(size_t var) const;
  Rational eval(const std::vector<Rational>& x) const;
  double eval_d(const std::vector<double>& x) const;
  // Drop all terms of total degree above k.
  MultiPoly truncate(unsigned k) const;

  std::string str() const;

 private:
  size_t nvars_;
  TermMap terms_;
};

// Conservative range of p over a rational box.
QIv interval_eval(const MultiPoly& p, const IntervalBox& box);

// All exponent vectors with total degree <= k, graded-lex ascending.
std::vector<Exponents> monomials_up_to(size_t nvars, unsigned k);

// dim of the space of polynomials of total degree <= k in n variables.
size_t jet_dim(size_t nvars, unsigned k);

// Truncated Taylor expansion at a rational center: the polynomial holds the
// shifted coordinates (x - center).
struct TaylorJet {
  std::vector<Rational> center;
  unsigned order = 0;
  MultiPoly poly;

  TaylorJet mul(const TaylorJet& other) const;
};

// Polynomial vector field on Q^n: component i gives dx_i/dt.
struct PolyVectorField {
  std::vector<MultiPoly> components;

  size_t nvars() const { return components.size(); }
  int max_degree() const {
    int d = 0;
    for (const auto& c : components)
      if (c.total_deg() > d) d = c.total_deg();
    return d;
  }
};

}  // namespace rolle
