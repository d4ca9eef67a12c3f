#include <rolle/sampler.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace rolle {

// ---------- PseudoPolynomial ----------

std::complex<double> PseudoPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (const auto& t : terms)
    acc += std::exp(t.lambda.to_complex() * z) * t.poly.eval<std::complex<double>>(z);
  return acc;
}

PseudoPolynomial PseudoPolynomial::derivative() const {
  // d/dz (e^{lz} p) = e^{lz} (l p + p')
  PseudoPolynomial out;
  for (const auto& t : terms) {
    CPoly q = t.lambda * t.poly + t.poly.derivative();
    if (!q.is_zero()) out.terms.push_back({t.lambda, std::move(q)});
  }
  return out;
}

long PseudoPolynomial::degree_sum() const {
  long s = 0;
  for (const auto& t : terms)
    if (!t.poly.is_zero()) s += t.poly.degree() + 1;
  return s;
}

void PseudoPolynomial::normalize() {
  std::map<std::pair<std::string, std::string>, size_t> seen;
  std::vector<Term> merged;
  for (const auto& t : terms) {
    if (t.poly.is_zero()) continue;
    const auto key = std::make_pair(to_string(t.lambda.re), to_string(t.lambda.im));
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, merged.size());
      merged.push_back(t);
    } else {
      merged[it->second].poly = merged[it->second].poly + t.poly;
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.poly.is_zero(); });
  terms = std::move(merged);
}

// ---------- AnalyticSampler ----------

struct AnalyticSampler::Impl {
  enum class Kind { Poly, Pseudo, Taylor, BlackBox, Product, Sum } kind;
  CPoly poly;
  PseudoPolynomial pseudo;
  Rational radius;
  std::function<std::complex<double>(std::complex<double>)> fn;
  std::shared_ptr<const Impl> lhs, rhs;
  std::string label;
};

std::complex<double> AnalyticSampler::eval(std::complex<double> z) const {
  const Impl& im = *impl_;
  switch (im.kind) {
    case Impl::Kind::Poly:
    case Impl::Kind::Taylor:
      return im.poly.eval<std::complex<double>>(z);
    case Impl::Kind::Pseudo:
      return im.pseudo.eval(z);
    case Impl::Kind::BlackBox:
      return im.fn(z);
    case Impl::Kind::Product:
      return AnalyticSampler(im.lhs).eval(z) * AnalyticSampler(im.rhs).eval(z);
    case Impl::Kind::Sum:
      return AnalyticSampler(im.lhs).eval(z) + AnalyticSampler(im.rhs).eval(z);
  }
  return 0;
}

bool AnalyticSampler::differentiable() const {
  const Impl& im = *impl_;
  switch (im.kind) {
    case Impl::Kind::BlackBox:
      return false;
    case Impl::Kind::Product:
    case Impl::Kind::Sum:
      return AnalyticSampler(im.lhs).differentiable() && AnalyticSampler(im.rhs).differentiable();
    default:
      return true;
  }
}

AnalyticSampler AnalyticSampler::derivative() const {
  const Impl& im = *impl_;
  switch (im.kind) {
    case Impl::Kind::Poly:
      return from_poly(im.poly.derivative(), im.label + "'");
    case Impl::Kind::Taylor:
      return taylor(im.poly.derivative(), im.radius, im.label + "'");
    case Impl::Kind::Pseudo:
      return from_pseudo(im.pseudo.derivative(), im.label + "'");
    case Impl::Kind::Product: {
      AnalyticSampler a(im.lhs), b(im.rhs);
      return sum(product(a.derivative(), b), product(a, b.derivative()));
    }
    case Impl::Kind::Sum:
      return sum(AnalyticSampler(im.lhs).derivative(), AnalyticSampler(im.rhs).derivative());
    case Impl::Kind::BlackBox:
      throw std::domain_error("AnalyticSampler: black-box sampler has no derivative");
  }
  throw std::logic_error("unreachable");
}

const CPoly* AnalyticSampler::exact_poly() const {
  return impl_->kind == Impl::Kind::Poly ? &impl_->poly : nullptr;
}
const PseudoPolynomial* AnalyticSampler::pseudo() const {
  return impl_->kind == Impl::Kind::Pseudo ? &impl_->pseudo : nullptr;
}
std::optional<Rational> AnalyticSampler::taylor_radius() const {
  if (impl_->kind == Impl::Kind::Taylor) return impl_->radius;
  return std::nullopt;
}
const std::string& AnalyticSampler::label() const { return impl_->label; }

AnalyticSampler AnalyticSampler::from_poly(CPoly p, std::string label) {
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::Poly;
  im->poly = std::move(p);
  im->label = std::move(label);
  return AnalyticSampler(std::move(im));
}
AnalyticSampler AnalyticSampler::from_real_poly(const UniPoly& p, std::string label) {
  return from_poly(complexify(p), std::move(label));
}
AnalyticSampler AnalyticSampler::from_pseudo(PseudoPolynomial p, std::string label) {
  p.normalize();
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::Pseudo;
  im->pseudo = std::move(p);
  im->label = std::move(label);
  return AnalyticSampler(std::move(im));
}
AnalyticSampler AnalyticSampler::taylor(CPoly truncation, Rational radius, std::string label) {
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::Taylor;
  im->poly = std::move(truncation);
  im->radius = std::move(radius);
  im->label = std::move(label);
  return AnalyticSampler(std::move(im));
}
AnalyticSampler AnalyticSampler::black_box(
    std::function<std::complex<double>(std::complex<double>)> f, std::string label) {
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::BlackBox;
  im->fn = std::move(f);
  im->label = std::move(label);
  return AnalyticSampler(std::move(im));
}
AnalyticSampler AnalyticSampler::product(AnalyticSampler a, AnalyticSampler b) {
  // fold exact kinds so products of polynomials stay exact
  if (a.exact_poly() && b.exact_poly())
    return from_poly(*a.exact_poly() * *b.exact_poly(), a.label() + "*" + b.label());
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::Product;
  im->label = a.label() + "*" + b.label();
  im->lhs = a.impl_;
  im->rhs = b.impl_;
  return AnalyticSampler(std::move(im));
}
AnalyticSampler AnalyticSampler::sum(AnalyticSampler a, AnalyticSampler b) {
  if (a.exact_poly() && b.exact_poly())
    return from_poly(*a.exact_poly() + *b.exact_poly(), a.label() + "+" + b.label());
  auto im = std::make_shared<Impl>();
  im->kind = Impl::Kind::Sum;
  im->label = a.label() + "+" + b.label();
  im->lhs = a.impl_;
  im->rhs = b.impl_;
  return AnalyticSampler(std::move(im));
}

// ---------- RealSampler ----------

double RealSampler::eval(double t) const {
  if (poly_) return poly_->eval<double>(t);
  return fn_(t);
}
const UniPoly* RealSampler::exact_poly() const { return poly_.get(); }

RealSampler RealSampler::from_poly(UniPoly p, std::string label) {
  RealSampler s;
  s.poly_ = std::make_shared<UniPoly>(std::move(p));
  s.label_ = std::move(label);
  return s;
}
RealSampler RealSampler::black_box(std::function<double(double)> f, std::string label) {
  RealSampler s;
  s.fn_ = std::move(f);
  s.label_ = std::move(label);
  return s;
}

// ---------- curves ----------

double TrigCoord::eval(double t, unsigned order) const {
  double acc = 0;
  if (order == 0)
    acc = c0 + c1 * t;
  else if (order == 1)
    acc = c1;
  for (const auto& h : harmonics) {
    // k-th derivative of a cos(ft) + b sin(ft): multiply by f each time and
    // rotate (a, b) -> (b, -a)
    double a = h.a, b = h.b, scale = 1;
    for (unsigned k = 0; k < order; ++k) {
      scale *= h.freq;
      const double na = b, nb = -a;
      a = na;
      b = nb;
    }
    acc += scale * (a * std::cos(h.freq * t) + b * std::sin(h.freq * t));
  }
  return acc;
}

CurveSampler make_trig_curve(std::vector<TrigCoord> coords, double t0, double t1, bool closed,
                             std::string label) {
  CurveSampler c;
  c.dim = coords.size();
  c.t0 = t0;
  c.t1 = t1;
  c.closed = closed;
  c.max_order = 6;
  c.label = std::move(label);
  c.derivative = [coords = std::move(coords)](double t, unsigned order) {
    std::vector<double> v(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) v[i] = coords[i].eval(t, order);
    return v;
  };
  return c;
}

CurveSampler make_poly_curve(std::vector<UniPoly> coords, double t0, double t1,
                             std::string label) {
  CurveSampler c;
  c.dim = coords.size();
  c.t0 = t0;
  c.t1 = t1;
  c.closed = false;
  c.max_order = 6;
  c.label = std::move(label);
  std::vector<std::vector<UniPoly>> derivs(7, std::vector<UniPoly>());
  derivs[0] = std::move(coords);
  for (unsigned k = 1; k <= 6; ++k)
    for (const auto& p : derivs[k - 1]) derivs[k].push_back(p.derivative());
  c.derivative = [derivs = std::move(derivs)](double t, unsigned order) {
    const auto& row = derivs.at(order);
    std::vector<double> v(row.size());
    for (size_t i = 0; i < row.size(); ++i) v[i] = row[i].eval<double>(t);
    return v;
  };
  return c;
}

CurveSampler make_circle(double radius) {
  std::vector<TrigCoord> coords(2);
  coords[0].harmonics.push_back({1.0, radius, 0.0});
  coords[1].harmonics.push_back({1.0, 0.0, radius});
  return make_trig_curve(std::move(coords), 0, 2 * M_PI, true, "circle");
}

CurveSampler make_ellipse(double a, double b) {
  std::vector<TrigCoord> coords(2);
  coords[0].harmonics.push_back({1.0, a, 0.0});
  coords[1].harmonics.push_back({1.0, 0.0, b});
  return make_trig_curve(std::move(coords), 0, 2 * M_PI, true, "ellipse");
}

CurveSampler make_helix(double c, double t0, double t1) {
  std::vector<TrigCoord> coords(3);
  coords[0].harmonics.push_back({1.0, 1.0, 0.0});
  coords[1].harmonics.push_back({1.0, 0.0, 1.0});
  coords[2].c1 = c;
  return make_trig_curve(std::move(coords), t0, t1, false, "helix");
}

}  // namespace rolle
