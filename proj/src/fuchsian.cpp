#include <rolle/fuchsian.hpp>

#include <rolle/ode_bounds.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rolle {

namespace {

// i^m as an exact complex rational.
CRational i_power(unsigned m) {
  switch (m % 4) {
    case 0: return CRational(Rational(1));
    case 1: return CRational(Rational(0), Rational(1));
    case 2: return CRational(Rational(-1));
    default: return CRational(Rational(0), Rational(-1));
  }
}

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// PiPoly

PiPoly::PiPoly(CRational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PiPoly PiPoly::pi_power(unsigned m, CRational scale) {
  PiPoly p;
  if (scale.is_zero()) return p;
  p.c_.assign(m + 1, CRational());
  p.c_[m] = std::move(scale);
  return p;
}

void PiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), CRational());
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = r.c_[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
  r.trim();
  return r;
}

PiPoly operator-(const PiPoly& a, const PiPoly& b) { return a + (-b); }

PiPoly operator-(const PiPoly& a) {
  PiPoly r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
  PiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, CRational());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

std::complex<double> PiPoly::eval(double pi_value) const {
  std::complex<double> acc(0, 0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * pi_value + c_[i].to_complex();
  return acc;
}

std::string PiPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t m = 0; m < c_.size(); ++m) {
    if (c_[m].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c_[m]) << ")";
    if (m == 1) os << "*pi";
    if (m > 1) os << "*pi^" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PhaseSum

PhaseSum::PhaseSum(PiPoly constant) {
  if (!constant.is_zero()) terms_.emplace(Rational(0), std::move(constant));
}

PhaseSum::PhaseSum(CRational constant) : PhaseSum(PiPoly(std::move(constant))) {}

PhaseSum PhaseSum::phase(const Rational& q) {
  PhaseSum s;
  s.terms_.emplace(canonical(q), PiPoly(CRational(Rational(1))));
  return s;
}

void PhaseSum::add(const Rational& q, const PiPoly& coeff) {
  if (coeff.is_zero()) return;
  const Rational key = canonical(q);
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhaseSum operator+(const PhaseSum& a, const PhaseSum& b) {
  PhaseSum r = a;
  for (const auto& [q, c] : b.terms_) r.add(q, c);
  return r;
}

PhaseSum operator-(const PhaseSum& a, const PhaseSum& b) { return a + (-b); }

PhaseSum operator-(const PhaseSum& a) {
  PhaseSum r;
  for (const auto& [q, c] : a.terms_) r.terms_.emplace(q, -c);
  return r;
}

PhaseSum operator*(const PhaseSum& a, const PhaseSum& b) {
  PhaseSum r;
  for (const auto& [qa, ca] : a.terms_)
    for (const auto& [qb, cb] : b.terms_) r.add(qa + qb, ca * cb);
  return r;
}

std::complex<double> PhaseSum::eval(double pi_value) const {
  std::complex<double> acc(0, 0);
  for (const auto& [q, c] : terms_) {
    const double ang = 2.0 * pi_value * to_double(q);
    acc += c.eval(pi_value) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string PhaseSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    if (q != 0) os << "*u^(" << to_string(q) << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// EulerOperatorSpec

void EulerOperatorSpec::validate() const {
  if (order == 0) throw std::invalid_argument("euler operator: order must be >= 1");
  if (coeffs.size() != order)
    throw std::invalid_argument("euler operator: need exactly `order` coefficients");
}

UniPoly EulerOperatorSpec::characteristic() const {
  validate();
  std::vector<Rational> c(order + 1, Rational(0));
  c[order] = 1;
  for (unsigned j = 0; j < order; ++j) c[order - 1 - j] = canonical(coeffs[j]);
  return UniPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// SpectrumData / PseudomonomialSum

unsigned SpectrumData::total() const {
  unsigned s = 0;
  for (const auto& l : lines) s += l.multiplicity;
  return s;
}

PseudomonomialSum PseudomonomialSum::term(const Rational& lambda, unsigned k, CRational coeff) {
  PseudomonomialSum f;
  f.add(lambda, k, PhaseSum(std::move(coeff)));
  return f;
}

void PseudomonomialSum::add(const Rational& lambda, unsigned k, const PhaseSum& coeff) {
  if (coeff.is_zero()) return;
  const Rational key = canonical(lambda);
  auto& cz = parts_[key];
  if (cz.size() <= k) cz.resize(k + 1);
  cz[k] = cz[k] + coeff;
  trim(key);
}

void PseudomonomialSum::trim(const Rational& lambda) {
  const auto it = parts_.find(lambda);
  if (it == parts_.end()) return;
  auto& cz = it->second;
  while (!cz.empty() && cz.back().is_zero()) cz.pop_back();
  if (cz.empty()) parts_.erase(it);
}

int PseudomonomialSum::degree_in_z(const Rational& lambda) const {
  const auto it = parts_.find(canonical(lambda));
  if (it == parts_.end()) return -1;
  // Trailing zeros are trimmed on insertion, so size() is authoritative; a
  // zero slot below the top is still a legitimate gap.
  return static_cast<int>(it->second.size()) - 1;
}

bool PseudomonomialSum::real_for_positive_t() const {
  for (const auto& [lambda, cz] : parts_)
    for (const auto& c : cz) {
      for (const auto& [q, p] : c.terms()) {
        if (q != 0) return false;
        if (p.c().size() > 1) return false;
        if (!p.c().empty() && p.c()[0].im != 0) return false;
      }
    }
  return true;
}

PseudomonomialSum operator+(const PseudomonomialSum& a, const PseudomonomialSum& b) {
  PseudomonomialSum r = a;
  for (const auto& [lambda, cz] : b.parts_)
    for (size_t k = 0; k < cz.size(); ++k) r.add(lambda, static_cast<unsigned>(k), cz[k]);
  return r;
}

PseudomonomialSum operator-(const PseudomonomialSum& a, const PseudomonomialSum& b) {
  PseudomonomialSum r = a;
  for (const auto& [lambda, cz] : b.parts_)
    for (size_t k = 0; k < cz.size(); ++k) r.add(lambda, static_cast<unsigned>(k), -cz[k]);
  return r;
}

std::complex<double> PseudomonomialSum::eval_z(std::complex<double> z, double pi_value) const {
  std::complex<double> acc(0, 0);
  for (const auto& [lambda, cz] : parts_) {
    std::complex<double> poly(0, 0);
    for (size_t k = cz.size(); k-- > 0;) poly = poly * z + cz[k].eval(pi_value);
    acc += poly * std::exp(to_double(lambda) * z);
  }
  return acc;
}

std::string PseudomonomialSum::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, cz] : parts_)
    for (size_t k = 0; k < cz.size(); ++k) {
      if (cz[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << cz[k].str() << ")";
      if (k == 1) os << "*z";
      if (k > 1) os << "*z^" << k;
      if (lambda != 0) os << "*e^(" << to_string(lambda) << "z)";
    }
  return os.str();
}

// ---------------------------------------------------------------------------
// euler_solve

namespace {

// All rational roots of a monic UniPoly with multiplicities; throws when a
// nontrivial factor without rational roots remains.
std::map<Rational, unsigned> rational_spectrum(UniPoly chi) {
  std::map<Rational, unsigned> roots;

  unsigned zero_mult = 0;
  while (!chi.is_zero() && chi.coeff(0) == 0) {
    chi.c.erase(chi.c.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace(Rational(0), zero_mult);
  if (chi.degree() <= 0) return roots;

  // Rescale x = D*lambda so the polynomial becomes monic over the integers;
  // its rational roots are then integers dividing the constant term.
  Integer d_scale(1);
  for (const Rational& ck : chi.c) d_scale = lcm(d_scale, Integer(ck.get_den()));
  const unsigned deg = static_cast<unsigned>(chi.degree());
  std::vector<Integer> q(deg + 1);
  for (unsigned m = 0; m <= deg; ++m) {
    const Rational v = chi.coeff(m) * pow_rational(Rational(d_scale), deg - m);
    q[m] = v.get_num();  // exact by construction of d_scale
  }

  Integer q0 = q[0] < 0 ? Integer(-q[0]) : q[0];
  std::vector<Integer> divisors;
  {
    Integer i(1);
    unsigned long steps = 0;
    for (; i * i <= q0; ++i) {
      if (++steps > 4000000UL)
        throw std::runtime_error("characteristic roots: constant term too large for exact search");
      if (mpz_divisible_p(q0.get_mpz_t(), i.get_mpz_t())) {
        divisors.push_back(i);
        divisors.push_back(q0 / i);
      }
    }
  }

  unsigned remaining = deg;
  for (const Integer& u : divisors) {
    for (int sign : {1, -1}) {
      const Integer x0 = sign > 0 ? u : Integer(-u);
      for (;;) {
        // Synthetic division of the (monic) q by (x - x0).
        std::vector<Integer> b(remaining, Integer(0));
        Integer acc = q[remaining];  // leading 1
        for (unsigned m = remaining; m-- > 0;) {
          b[m] = acc;
          acc = q[m] + x0 * acc;
        }
        if (acc != 0) break;
        Rational root(x0, d_scale);
        root.canonicalize();
        ++roots[root];
        --remaining;
        for (unsigned m = 0; m <= remaining; ++m) q[m] = b[m];
        if (remaining == 0) break;
      }
      if (remaining == 0) break;
    }
    if (remaining == 0) break;
  }

  if (remaining != 0)
    throw std::runtime_error(
        "characteristic roots are not all rational: spectrum unresolved (possibly non-real)");
  return roots;
}

}  // namespace

EulerSolution euler_solve(const EulerOperatorSpec& spec) {
  const UniPoly chi = spec.characteristic();
  const std::map<Rational, unsigned> roots = rational_spectrum(chi);

  EulerSolution sol;
  for (const auto& [lambda, mult] : roots) sol.spectrum.lines.push_back({lambda, mult});
  for (const auto& line : sol.spectrum.lines)
    for (unsigned k = 0; k < line.multiplicity; ++k)
      sol.basis.push_back(PseudomonomialSum::term(line.lambda, k, CRational(Rational(1))));
  return sol;
}

// ---------------------------------------------------------------------------
// petrov_apply / annihilator_check

PseudomonomialSum petrov_apply(const Rational& lambda_mu, const PseudomonomialSum& f) {
  const Rational lm = canonical(lambda_mu);
  PseudomonomialSum out;
  for (const auto& [lambda, cz] : f.parts()) {
    // Shifting z by +-2*pi*i multiplies e^(lambda z) by the phase u^(+-lambda);
    // the outer mu^(-1) / mu factors contribute u^(-+lambda_mu).
    const PhaseSum fwd_phase = PhaseSum::phase(lambda - lm);
    const PhaseSum bwd_phase = PhaseSum::phase(lm - lambda);
    for (size_t k = 0; k < cz.size(); ++k) {
      if (cz[k].is_zero()) continue;
      for (size_t j = 0; j <= k; ++j) {
        const unsigned m = static_cast<unsigned>(k - j);  // power of 2*pi*i
        const CRational scale =
            i_power(m) * CRational(Rational(binomial(k, j)) * pow_rational(Rational(2), m));
        const PiPoly fwd = PiPoly::pi_power(m, scale);
        const PiPoly bwd = PiPoly::pi_power(m, m % 2 == 0 ? scale : -scale);
        const PhaseSum contribution =
            fwd_phase * (cz[k] * PhaseSum(fwd)) - bwd_phase * (cz[k] * PhaseSum(bwd));
        out.add(lambda, static_cast<unsigned>(j), contribution);
      }
    }
  }
  return out;
}

AnnihilationReport annihilator_check(const SpectrumData& spectrum, const PseudomonomialSum& f) {
  AnnihilationReport rep;
  rep.remainder = f;
  for (const auto& line : spectrum.lines)
    for (unsigned k = 0; k < line.multiplicity; ++k)
      rep.remainder = petrov_apply(line.lambda, rep.remainder);
  rep.annihilated = rep.remainder.is_zero();
  return rep;
}

// ---------------------------------------------------------------------------
// roitman_zero_bound

BoundCertificate roitman_zero_bound(const EulerOperatorSpec& spec) {
  spec.validate();
  const EulerSolution sol = euler_solve(spec);  // throws unless the spectrum is rational
  const unsigned n = spec.order;

  // In the logarithmic chart the equation has constant coefficients b_k, so
  // the argument of any solution varies along a vertical segment of length
  // 4*pi by at most B half-turns.
  LinearOdeSpec lode;
  lode.order = n;
  for (const Rational& b : spec.coeffs) lode.coeff_bounds.push_back(abs(canonical(b)));
  lode.domain = OdeDomain::segment(4 * pi_upper());
  const BoundCertificate vert = complex_variation_bound(lode);
  const Integer big_b(static_cast<unsigned long>(vert.bound));

  const Integer total = Integer(n) * (2 * big_b + 1);
  if (!total.fits_ulong_p())
    throw std::overflow_error("zero bound exceeds the certificate range");

  BoundCertificate cert;
  cert.bound = total.get_ui();
  cert.method = "petrov-difference-descent";
  cert.statement = "any real solution has at most " + total.get_str() +
                   " isolated zeros on the interval (0, 1)";

  std::string lines;
  for (const auto& line : sol.spectrum.lines) {
    if (!lines.empty()) lines += ", ";
    lines += to_string(line.lambda) + "^" + std::to_string(line.multiplicity);
  }
  cert.hypotheses.push_back({"spectrum is real rational", lines, "==", "resolved", true});
  for (const auto& h : vert.hypotheses) cert.hypotheses.push_back(h);

  cert.note("characteristic roots with multiplicities: " + lines);
  cert.note("vertical-segment variation bound B = " + big_b.get_str() + " half-turns");
  for (const auto& t : vert.trace) cert.note("segment-variation: " + t);
  cert.note("each difference step removes one spectral power and adds at most 2B+1 = " +
            Integer(2 * big_b + 1).get_str() + " zeros");
  cert.note("descent steps = order = " + std::to_string(n));
  return cert;
}

}  // namespace rolle
