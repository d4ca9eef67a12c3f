#pragma once
// Function samplers shared by the numeric oracles and the index/bound
// modules: complex-analytic samplers (with derivative access where the
// representation allows it), real-line samplers, and parametric curves.

#include <rolle/poly.hpp>

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rolle {

// Exponential-polynomial sums p(z) = sum_j e^{lambda_j z} p_j(z), exact
// complex-rational data, closed under d/dz.
struct PseudoPolynomial {
  struct Term {
    CRational lambda;
    CPoly poly;
  };
  std::vector<Term> terms;

  std::complex<double> eval(std::complex<double> z) const;
  PseudoPolynomial derivative() const;
  // sum over distinct exponents of (deg p_j + 1); the dimension of the
  // exponential-polynomial space the sum lives in
  long degree_sum() const;
  void normalize();  // merge equal exponents, drop zero polynomials
};

class AnalyticSampler {
 public:
  std::complex<double> eval(std::complex<double> z) const;
  bool differentiable() const;
  AnalyticSampler derivative() const;

  const CPoly* exact_poly() const;            // non-null only for polynomial samplers
  const PseudoPolynomial* pseudo() const;     // non-null only for exponential sums
  std::optional<Rational> taylor_radius() const;
  const std::string& label() const;

  static AnalyticSampler from_poly(CPoly p, std::string label = "poly");
  static AnalyticSampler from_real_poly(const UniPoly& p, std::string label = "poly");
  static AnalyticSampler from_pseudo(PseudoPolynomial p, std::string label = "exp-sum");
  static AnalyticSampler taylor(CPoly truncation, Rational radius, std::string label = "taylor");
  static AnalyticSampler black_box(std::function<std::complex<double>(std::complex<double>)> f,
                                   std::string label = "black-box");
  static AnalyticSampler product(AnalyticSampler a, AnalyticSampler b);
  static AnalyticSampler sum(AnalyticSampler a, AnalyticSampler b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit AnalyticSampler(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

class RealSampler {
 public:
  double eval(double t) const;
  const UniPoly* exact_poly() const;
  const std::string& label() const { return label_; }

  static RealSampler from_poly(UniPoly p, std::string label = "poly");
  static RealSampler black_box(std::function<double(double)> f, std::string label = "black-box");

 private:
  RealSampler() = default;
  std::shared_ptr<const UniPoly> poly_;
  std::function<double(double)> fn_;
  std::string label_;
};

// Parametric curve in R^n with derivative access up to max_order.
struct CurveSampler {
  size_t dim = 0;
  double t0 = 0, t1 = 1;
  bool closed = false;
  unsigned max_order = 3;
  std::string label;
  // derivative(t, k) = k-th derivative of the position vector, k <= max_order
  std::function<std::vector<double>(double, unsigned)> derivative;

  std::vector<double> position(double t) const { return derivative(t, 0); }
};

// One coordinate of a trigonometric-polynomial curve:
//   x(t) = c0 + c1 t + sum_k (a_k cos(f_k t) + b_k sin(f_k t))
struct TrigCoord {
  double c0 = 0, c1 = 0;
  struct Harmonic {
    double freq, a, b;
  };
  std::vector<Harmonic> harmonics;

  double eval(double t, unsigned order) const;
};

CurveSampler make_trig_curve(std::vector<TrigCoord> coords, double t0, double t1, bool closed,
                             std::string label);
CurveSampler make_poly_curve(std::vector<UniPoly> coords, double t0, double t1, std::string label);
CurveSampler make_circle(double radius = 1.0);
CurveSampler make_ellipse(double a, double b);
CurveSampler make_helix(double c, double t0, double t1);

}  // namespace rolle
