#include <rolle/complex_counting.hpp>
#include <rolle/curves.hpp>
#include <rolle/fuchsian.hpp>
#include <rolle/meandering.hpp>
#include <rolle/multiplicity.hpp>
#include <rolle/ode_bounds.hpp>
#include <rolle/oracle.hpp>
#include <rolle/problem.hpp>
#include <rolle/rng.hpp>
#include <rolle/rolle.hpp>
#include <rolle/wronskian.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <set>
#include <thread>

namespace rolle {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Payload access helpers. Every accessor names the JSON path it was reading
// when it failed, so diagnostics point at the offending field.
// ---------------------------------------------------------------------------

const json& need(const json& payload, const char* field, const std::string& where) {
  if (!payload.contains(field))
    throw ProblemError(where + "." + field, "missing required field");
  return payload.at(field);
}

long need_int(const json& v, const std::string& where, long lo, long hi) {
  if (!v.is_number_integer())
    throw ProblemError(where, "expected an integer");
  const long n = v.get<long>();
  if (n < lo || n > hi)
    throw ProblemError(where, "expected an integer in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  return n;
}

long opt_int(const json& payload, const char* field, const std::string& where, long lo,
             long hi, long fallback) {
  if (!payload.contains(field)) return fallback;
  return need_int(payload.at(field), where + "." + std::string(field), lo, hi);
}

double opt_num(const json& payload, const char* field, const std::string& where,
               double fallback) {
  if (!payload.contains(field)) return fallback;
  return numeric_value(payload.at(field), where + "." + std::string(field));
}

const json& need_array(const json& payload, const char* field, const std::string& where) {
  const json& v = need(payload, field, where);
  if (!v.is_array())
    throw ProblemError(where + "." + field, "expected an array");
  return v;
}

std::vector<Rational> parse_value_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ProblemError(where, "expected an array of rational values");
  std::vector<Rational> out;
  out.reserve(v.size());
  size_t i = 0;
  for (const auto& e : v) out.push_back(exact_value(e, where + "[" + std::to_string(i++) + "]"));
  return out;
}

UniPoly parse_unipoly(const json& v, const std::string& where) {
  return UniPoly(parse_value_list(v, where));
}

CPoly parse_cpoly(const json& v, const std::string& where) {
  if (!v.is_array()) throw ProblemError(where, "expected an array of complex values");
  std::vector<CRational> c;
  c.reserve(v.size());
  size_t i = 0;
  for (const auto& e : v) c.push_back(exact_complex(e, where + "[" + std::to_string(i++) + "]"));
  return CPoly(std::move(c));
}

MultiPoly parse_multipoly(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProblemError(where, "expected a polynomial object");
  const size_t nvars =
      static_cast<size_t>(need_int(need(v, "nvars", where), where + ".nvars", 1, 16));
  MultiPoly p(nvars);
  const json& terms = need_array(v, "terms", where);
  size_t i = 0;
  for (const auto& t : terms) {
    const std::string tw = where + ".terms[" + std::to_string(i++) + "]";
    if (!t.is_object()) throw ProblemError(tw, "expected a term object");
    const json& ev = need_array(t, "exponents", tw);
    if (ev.size() != nvars)
      throw ProblemError(tw + ".exponents", "expected " + std::to_string(nvars) + " exponents");
    Exponents e;
    for (const auto& k : ev)
      e.push_back(static_cast<unsigned>(need_int(k, tw + ".exponents", 0, 64)));
    p.add_term(std::move(e), exact_value(need(t, "coeff", tw), tw + ".coeff"));
  }
  return p;
}

PolyVectorField parse_field(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty())
    throw ProblemError(where, "expected a nonempty array of polynomial components");
  PolyVectorField field;
  size_t i = 0;
  for (const auto& c : v)
    field.components.push_back(parse_multipoly(c, where + "[" + std::to_string(i++) + "]"));
  for (const auto& c : field.components)
    if (c.nvars() != field.components.size())
      throw ProblemError(where, "each component must use exactly " +
                                    std::to_string(field.components.size()) + " variables");
  return field;
}

PseudoPolynomial parse_pseudo(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProblemError(where, "expected an exponential-sum object");
  PseudoPolynomial p;
  const json& terms = need_array(v, "terms", where);
  size_t i = 0;
  for (const auto& t : terms) {
    const std::string tw = where + ".terms[" + std::to_string(i++) + "]";
    PseudoPolynomial::Term term;
    term.lambda = exact_complex(need(t, "lambda", tw), tw + ".lambda");
    term.poly = parse_cpoly(need(t, "coeffs", tw), tw + ".coeffs");
    p.terms.push_back(std::move(term));
  }
  p.normalize();
  return p;
}

CircleRegion parse_region(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProblemError(where, "expected {center, radius}");
  CircleRegion r;
  r.center = exact_complex(need(v, "center", where), where + ".center");
  r.radius = exact_value(need(v, "radius", where), where + ".radius");
  return r;
}

// Curves. Exact endpoints for polynomial curves; trigonometric and helix
// curves take their parameter range in full turns (t = 2*pi*turns) so that a
// closed loop is expressible exactly.
CurveSampler parse_curve(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProblemError(where, "expected a curve object");
  const std::string type =
      need(v, "type", where).is_string()
          ? v.at("type").get<std::string>()
          : throw ProblemError(where + ".type", "expected a string");
  const double two_pi = 2.0 * M_PI;

  auto turns_range = [&](double d0, double d1) {
    const double t0 = two_pi * opt_num(v, "t0_turns", where, d0);
    const double t1 = two_pi * opt_num(v, "t1_turns", where, d1);
    return std::pair<double, double>(t0, t1);
  };

  if (type == "circle") return make_circle(opt_num(v, "radius", where, 1.0));
  if (type == "ellipse")
    return make_ellipse(opt_num(v, "a", where, 2.0), opt_num(v, "b", where, 1.0));
  if (type == "helix") {
    const auto [t0, t1] = turns_range(0.0, 1.0);
    return make_helix(opt_num(v, "c", where, 1.0), t0, t1);
  }
  if (type == "poly") {
    const json& coords = need_array(v, "coords", where);
    std::vector<UniPoly> cs;
    size_t i = 0;
    for (const auto& c : coords)
      cs.push_back(parse_unipoly(c, where + ".coords[" + std::to_string(i++) + "]"));
    const double t0 = numeric_value(need(v, "t0", where), where + ".t0");
    const double t1 = numeric_value(need(v, "t1", where), where + ".t1");
    return make_poly_curve(std::move(cs), t0, t1, "poly-curve");
  }
  if (type == "trig") {
    const json& coords = need_array(v, "coords", where);
    std::vector<TrigCoord> cs;
    size_t i = 0;
    for (const auto& c : coords) {
      const std::string cw = where + ".coords[" + std::to_string(i++) + "]";
      TrigCoord tc;
      tc.c0 = opt_num(c, "c0", cw, 0.0);
      tc.c1 = opt_num(c, "c1", cw, 0.0);
      if (c.contains("harmonics")) {
        size_t h = 0;
        for (const auto& hj : c.at("harmonics")) {
          const std::string hw = cw + ".harmonics[" + std::to_string(h++) + "]";
          TrigCoord::Harmonic harm{};
          harm.freq = numeric_value(need(hj, "freq", hw), hw + ".freq");
          harm.a = opt_num(hj, "a", hw, 0.0);
          harm.b = opt_num(hj, "b", hw, 0.0);
          tc.harmonics.push_back(harm);
        }
      }
      cs.push_back(std::move(tc));
    }
    const bool closed = v.contains("closed") && v.at("closed").is_boolean()
                            ? v.at("closed").get<bool>()
                            : false;
    const auto [t0, t1] = turns_range(0.0, 1.0);
    return make_trig_curve(std::move(cs), t0, t1, closed, "trig-curve");
  }
  throw ProblemError(where + ".type",
                     "unknown curve type '" + type +
                         "' (expected circle, ellipse, helix, poly, or trig)");
}

// One-dimensional trigonometric signal used as a claimed ODE solution.
struct TrigSignal {
  double c0 = 0, c1 = 0;
  struct Harmonic {
    double freq, a, b;
  };
  std::vector<Harmonic> harmonics;

  double eval(double t) const {
    double s = c0 + c1 * t;
    for (const auto& h : harmonics)
      s += h.a * std::cos(h.freq * t) + h.b * std::sin(h.freq * t);
    return s;
  }
};

TrigSignal parse_signal(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProblemError(where, "expected a trigonometric signal object");
  TrigSignal s;
  s.c0 = opt_num(v, "c0", where, 0.0);
  s.c1 = opt_num(v, "c1", where, 0.0);
  if (v.contains("harmonics")) {
    size_t h = 0;
    for (const auto& hj : v.at("harmonics")) {
      const std::string hw = where + ".harmonics[" + std::to_string(h++) + "]";
      TrigSignal::Harmonic harm{};
      harm.freq = numeric_value(need(hj, "freq", hw), hw + ".freq");
      harm.a = opt_num(hj, "a", hw, 0.0);
      harm.b = opt_num(hj, "b", hw, 0.0);
      s.harmonics.push_back(harm);
    }
  }
  return s;
}

std::vector<Rational> parse_point(const json& payload, const char* field, size_t nvars,
                                  const std::string& where) {
  auto pt = parse_value_list(need(payload, field, where), where + "." + std::string(field));
  if (pt.size() != nvars)
    throw ProblemError(where + "." + std::string(field),
                       "expected " + std::to_string(nvars) + " coordinates");
  return pt;
}

// ---------------------------------------------------------------------------
// Outcome assembly
// ---------------------------------------------------------------------------

struct Outcome {
  json body;
  std::string status = "ok";  // ok | hypothesis-failure | contradiction
};

void settle(Outcome& out, const BoundCertificate& cert, std::optional<long> oracle) {
  if (cert.unbounded || !cert.hypotheses_hold()) {
    out.status = "hypothesis-failure";
    return;
  }
  if (oracle && *oracle > static_cast<long>(cert.bound)) out.status = "contradiction";
}

json rows_json(const ChainReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json rj;
    rj["order"] = r.order;
    rj["distinct"] = r.distinct;
    rj["with_multiplicity"] = r.with_multiplicity.get_str();
    rows.push_back(std::move(rj));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Kind handlers
// ---------------------------------------------------------------------------

Outcome do_descartes(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  Fewnomial f;
  const json& terms = need_array(spec.payload, "terms", where);
  size_t i = 0;
  for (const auto& t : terms) {
    const std::string tw = where + ".terms[" + std::to_string(i++) + "]";
    Fewnomial::Term term;
    term.exponent = need_int(need(t, "exponent", tw), tw + ".exponent", -1000000, 1000000);
    term.coeff = exact_value(need(t, "coeff", tw), tw + ".coeff");
    f.terms.push_back(std::move(term));
  }
  std::sort(f.terms.begin(), f.terms.end(),
            [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  for (size_t k = 1; k < f.terms.size(); ++k)
    if (f.terms[k - 1].exponent == f.terms[k].exponent)
      throw ProblemError(where + ".terms", "duplicate exponent " +
                                               std::to_string(f.terms[k].exponent));
  try {
    f.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where + ".terms", e.what());
  }

  Outcome out;
  const BoundCertificate cert = fewnomial_positive_bound(f);
  out.body["certificates"] = json::array({certificate_json(cert)});
  out.body["results"]["terms"] = f.terms.size();
  out.body["results"]["sign_changes"] = f.sign_changes();
  std::optional<long> oracle;
  if (spec.verify) {
    const FewnomialCount count = fewnomial_positive_count(f);
    oracle = count.count;
    json oj;
    oj["method"] = "exact positive-root isolation";
    oj["count"] = count.count;
    oj["cauchy_bound"] = count.cauchy_bound.get_str();
    out.body["oracle"] = std::move(oj);
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_chain(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const UniPoly f = parse_unipoly(need_array(spec.payload, "coeffs", where), where + ".coeffs");
  if (f.is_zero()) throw ProblemError(where + ".coeffs", "the zero polynomial has no chain");
  const Rational a = exact_value(need(spec.payload, "a", where), where + ".a");
  const Rational b = exact_value(need(spec.payload, "b", where), where + ".b");
  if (!(a < b)) throw ProblemError(where, "need a < b");

  const ChainReport rep = rolle_chain_check(f, a, b);
  Outcome out;
  out.body["results"]["degree"] = f.degree();
  out.body["results"]["rows"] = rows_json(rep);
  out.body["results"]["distinct_ok"] = rep.distinct_ok;
  out.body["results"]["with_multiplicity_ok"] = rep.mult_ok;
  // The descent inequalities are proved facts about exact Sturm counts; a
  // violation is a genuine contradiction, not a failed hypothesis.
  if (!rep.distinct_ok || !rep.mult_ok) out.status = "contradiction";
  return out;
}

LinearOdeSpec parse_ode_common(const json& payload, const std::string& where) {
  LinearOdeSpec spec;
  spec.order = static_cast<unsigned>(need_int(need(payload, "order", where),
                                              where + ".order", 1, 24));
  spec.coeff_bounds =
      parse_value_list(need_array(payload, "coeff_bounds", where), where + ".coeff_bounds");
  if (spec.coeff_bounds.size() != spec.order)
    throw ProblemError(where + ".coeff_bounds",
                       "expected exactly " + std::to_string(spec.order) +
                           " magnitude bounds (one per lower-order coefficient)");
  return spec;
}

Outcome do_dlvp(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  LinearOdeSpec ode = parse_ode_common(spec.payload, where);
  const Rational length = exact_value(need(spec.payload, "length", where), where + ".length");
  ode.domain = OdeDomain::segment(length);
  try {
    ode.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where, e.what());
  }

  Outcome out;
  const BoundCertificate cert = dlvp_zero_bound(ode);
  out.body["certificates"] = json::array({certificate_json(cert)});
  const AdmissibleLength al = dlvp_admissible_length(ode.coeff_bounds, Rational(1));
  out.body["results"]["admissible_length"] = al.value.get_str();
  out.body["results"]["admissible_length_unbounded"] = al.unbounded;

  std::optional<long> oracle;
  if (spec.verify) {
    if (spec.payload.contains("solution")) {
      const TrigSignal sig = parse_signal(spec.payload.at("solution"), where + ".solution");
      const unsigned budget = static_cast<unsigned>(
          opt_int(spec.payload, "budget", where, 64, 1 << 20, 4096));
      const RootCountReport rc = count_real_zeros(
          RealSampler::black_box([sig](double t) { return sig.eval(t); }, "claimed-solution"),
          0.0, to_double(length), budget);
      oracle = rc.count;
      json oj;
      oj["method"] = "sign-scan zero count of the supplied solution";
      oj["count"] = rc.count;
      oj["certified"] = rc.certified;
      out.body["oracle"] = std::move(oj);
    } else {
      out.body["oracle"] = json{{"skipped", "no solution supplied to count zeros of"}};
    }
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_kim(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  LinearOdeSpec ode = parse_ode_common(spec.payload, where);
  const CRational center = exact_complex(need(spec.payload, "center", where), where + ".center");
  const Rational radius = exact_value(need(spec.payload, "radius", where), where + ".radius");
  ode.domain = OdeDomain::disk(center, radius);
  try {
    ode.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where, e.what());
  }

  Outcome out;
  const BoundCertificate cert = kim_zero_bound(ode);
  out.body["certificates"] = json::array({certificate_json(cert)});

  std::optional<long> oracle;
  if (spec.verify) {
    if (spec.payload.contains("solution")) {
      const PseudoPolynomial sol =
          parse_pseudo(spec.payload.at("solution"), where + ".solution");
      const WindingResult w = count_disk_zeros(AnalyticSampler::from_pseudo(sol),
                                               center.to_complex(), to_double(radius));
      oracle = w.winding;
      json oj;
      oj["method"] = "argument-principle winding of the supplied solution";
      oj["winding"] = w.winding;
      oj["converged"] = w.converged;
      out.body["oracle"] = std::move(oj);
    } else {
      out.body["oracle"] = json{{"skipped", "no solution supplied to count zeros of"}};
    }
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_argvar(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  LinearOdeSpec ode = parse_ode_common(spec.payload, where);
  ode.domain = OdeDomain::segment(
      exact_value(need(spec.payload, "length", where), where + ".length"));
  try {
    ode.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where, e.what());
  }

  Outcome out;
  const BoundCertificate cert = complex_variation_bound(ode);
  out.body["certificates"] = json::array({certificate_json(cert)});
  settle(out, cert, std::nullopt);
  return out;
}

Outcome do_jensen(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const CPoly p = parse_cpoly(need_array(spec.payload, "coeffs", where), where + ".coeffs");
  if (p.is_zero()) throw ProblemError(where + ".coeffs", "the zero polynomial is excluded");
  const Rational inner =
      exact_value(need(spec.payload, "inner_radius", where), where + ".inner_radius");

  Rational boundary_max;
  bool computed_boundary = false;
  if (spec.payload.contains("boundary_max")) {
    boundary_max = exact_value(spec.payload.at("boundary_max"), where + ".boundary_max");
  } else {
    CircleRegion unit;
    unit.center = CRational(Rational(0));
    unit.radius = Rational(1);
    const SupEnclosure sup = sup_modulus_sq_on_circle(p, unit);
    boundary_max = sqrt_bracket(sup.hi).hi;
    computed_boundary = true;
  }

  Outcome out;
  const AnalyticSampler f = AnalyticSampler::from_poly(p);
  const BoundCertificate cert = jensen_zero_bound(f, p.coeff(0), inner, boundary_max);
  out.body["certificates"] = json::array({certificate_json(cert)});
  out.body["results"]["boundary_max"] = boundary_max.get_str();
  out.body["results"]["boundary_max_computed"] = computed_boundary;

  std::optional<long> oracle;
  if (spec.verify) {
    const WindingResult w = count_disk_zeros(f, {0.0, 0.0}, to_double(inner));
    oracle = w.winding;
    json oj;
    oj["method"] = "argument-principle winding";
    oj["winding"] = w.winding;
    oj["converged"] = w.converged;
    out.body["oracle"] = std::move(oj);
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_bernstein(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const CPoly p = parse_cpoly(need_array(spec.payload, "coeffs", where), where + ".coeffs");
  CPGonPair pair;
  pair.inner = parse_region(need(spec.payload, "inner", where), where + ".inner");
  pair.outer = parse_region(need(spec.payload, "outer", where), where + ".outer");
  try {
    pair.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where, e.what());
  }

  Outcome out;
  const double index = bernstein_index(AnalyticSampler::from_poly(p), pair);
  out.body["results"]["index"] = index;
  out.body["results"]["gap_lower"] = pair.gap_lower().get_str();
  return out;
}

Outcome do_voorhoeve(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const CPoly p = parse_cpoly(need_array(spec.payload, "coeffs", where), where + ".coeffs");
  if (p.is_zero()) throw ProblemError(where + ".coeffs", "the zero polynomial is excluded");
  const CRational center = spec.payload.contains("center")
                               ? exact_complex(spec.payload.at("center"), where + ".center")
                               : CRational(Rational(0));
  const Rational radius = spec.payload.contains("radius")
                              ? exact_value(spec.payload.at("radius"), where + ".radius")
                              : Rational(1);
  const double tol = opt_num(spec.payload, "tol", where, 1e-6);

  const VoorhoeveResult vr =
      voorhoeve_index(AnalyticSampler::from_poly(p), center.to_complex(), to_double(radius), tol);
  Outcome out;
  out.body["results"]["variation"] = vr.variation;
  out.body["results"]["winding"] = vr.winding;
  out.body["results"]["samples"] = vr.samples;
  out.body["results"]["converged"] = vr.converged;
  if (!vr.converged) {
    out.status = "hypothesis-failure";
  } else if (vr.variation + 1e-6 < 2.0 * M_PI * static_cast<double>(vr.winding)) {
    // The total argument variation majorizes 2*pi*(zeros inside); the winding
    // is the independent count.
    out.status = "contradiction";
  }
  return out;
}

Outcome do_pseudopoly(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const PseudoPolynomial p = parse_pseudo(spec.payload, where);
  const Rational length =
      exact_value(need(spec.payload, "boundary_length", where), where + ".boundary_length");

  Outcome out;
  const BoundCertificate cert = pseudopoly_voorhoeve_bound(p, length);
  out.body["certificates"] = json::array({certificate_json(cert)});
  out.body["results"]["spectrum_dimension"] = p.degree_sum();

  std::optional<long> oracle;
  if (spec.verify) {
    // The certificate covers any disk whose boundary has the given length.
    const double radius = to_double(length) / (2.0 * M_PI);
    const WindingResult w =
        count_disk_zeros(AnalyticSampler::from_pseudo(p), {0.0, 0.0}, radius);
    oracle = w.winding;
    json oj;
    oj["method"] = "argument-principle winding";
    oj["winding"] = w.winding;
    oj["converged"] = w.converged;
    oj["radius"] = radius;
    out.body["oracle"] = std::move(oj);
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_polya(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const json& tj = need_array(spec.payload, "tuple", where);
  if (tj.empty()) throw ProblemError(where + ".tuple", "expected at least one polynomial");
  std::vector<UniPoly> tuple;
  size_t i = 0;
  for (const auto& c : tj)
    tuple.push_back(parse_unipoly(c, where + ".tuple[" + std::to_string(i++) + "]"));

  const PolyaReport rep = polya_verify(tuple);
  const RiemannOperator rop = riemann_operator(tuple);

  Outcome out;
  json wr = json::array();
  for (const auto& w : rep.wronskians) wr.push_back(poly_to_string(w));
  out.body["results"]["wronskians"] = std::move(wr);
  json ex = json::array();
  for (const auto& c : rep.expanded) ex.push_back(to_string(c));
  out.body["results"]["factored_operator"] = std::move(ex);
  out.body["results"]["factored_annihilates"] = rep.all_annihilated();
  json rc = json::array();
  for (const auto& c : rop.coeffs) rc.push_back(poly_to_string(c));
  out.body["results"]["determinant_operator"] = std::move(rc);
  out.body["results"]["determinant_annihilates"] = rop.annihilates;

  if (!rep.all_annihilated() || !rop.annihilates) out.status = "hypothesis-failure";
  return out;
}

Outcome do_tangency(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const PolyVectorField v =
      parse_field(need_array(spec.payload, "field", where), where + ".field");
  const MultiPoly P = parse_multipoly(need(spec.payload, "p", where), where + ".p");
  if (P.nvars() != v.nvars())
    throw ProblemError(where + ".p", "variable count must match the field");
  const auto q = parse_point(spec.payload, "point", v.nvars(), where);
  const unsigned cap =
      static_cast<unsigned>(opt_int(spec.payload, "cap", where, 1, 256, 32));

  Outcome out;
  out.body["results"]["order"] = tangency_order(v, P, q, cap);
  return out;
}

long meander_crossing_oracle(const PolyVectorField& v, const MultiPoly& u0,
                             const std::vector<Rational>& q, const Rational& delta) {
  const Trajectory fwd = integrate_span(v, q, delta);
  const Trajectory bwd = integrate_span(v, q, -delta);
  std::vector<double> series = bwd.samples_of(u0);
  std::reverse(series.begin(), series.end());
  const std::vector<double> f = fwd.samples_of(u0);
  series.insert(series.end(), f.begin() + 1, f.end());

  long changes = 0;
  double prev = 0;
  for (double s : series) {
    if (s == 0) continue;
    if (prev != 0 && ((prev < 0) != (s < 0))) ++changes;
    prev = s;
  }
  return changes;
}

Outcome do_meander(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const PolyVectorField v =
      parse_field(need_array(spec.payload, "field", where), where + ".field");
  const MultiPoly u0 = parse_multipoly(need(spec.payload, "u0", where), where + ".u0");
  if (u0.nvars() != v.nvars())
    throw ProblemError(where + ".u0", "variable count must match the field");
  const auto q = parse_point(spec.payload, "point", v.nvars(), where);
  const Rational delta = spec.payload.contains("delta")
                             ? exact_value(spec.payload.at("delta"), where + ".delta")
                             : Rational(1, 4);
  const unsigned cap = static_cast<unsigned>(opt_int(spec.payload, "cap", where, 1, 64, 16));
  const unsigned slack =
      static_cast<unsigned>(opt_int(spec.payload, "slack", where, 0, 16, 2));

  Outcome out;
  const BoundCertificate cert = meandering_bound(v, u0, q, delta, cap, slack);
  out.body["certificates"] = json::array({certificate_json(cert)});

  std::optional<long> oracle;
  if (spec.verify) {
    const long crossings = meander_crossing_oracle(v, u0, q, delta);
    oracle = crossings;
    json oj;
    oj["method"] = "validated trajectory sign changes";
    oj["crossings"] = crossings;
    out.body["oracle"] = std::move(oj);
  }
  settle(out, cert, oracle);
  return out;
}

Outcome do_mult(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const json& cj = need_array(spec.payload, "components", where);
  MapGerm F;
  size_t i = 0;
  for (const auto& c : cj)
    F.components.push_back(
        parse_multipoly(c, where + ".components[" + std::to_string(i++) + "]"));
  try {
    F.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where + ".components", e.what());
  }
  const unsigned cap = static_cast<unsigned>(opt_int(spec.payload, "cap", where, 1, 64, 16));

  const MultiplicityReport rep = local_algebra_multiplicity(F, cap);
  Outcome out;
  out.body["results"]["mu"] = rep.mu;
  out.body["results"]["capped"] = rep.capped;
  out.body["results"]["dual_dimensions"] = rep.dual_dims;

  // Independent algebraic route: smallest jet order whose corank certifies
  // multiplicity <= order; it must land exactly on mu.
  long threshold = -1;
  size_t threshold_corank = 0;
  for (unsigned k = 1; k <= cap; ++k) {
    const CorankResult cr = corank_jet_test(F, k);
    if (cr.mult_at_most_k) {
      threshold = k;
      threshold_corank = cr.corank;
      break;
    }
  }
  out.body["results"]["corank_threshold"] = threshold;
  out.body["results"]["corank_at_threshold"] = threshold_corank;
  const bool agree = !rep.capped && threshold == static_cast<long>(rep.mu);
  out.body["results"]["methods_agree"] = agree;

  std::optional<long> oracle;
  if (spec.verify && F.dim() <= 2) {
    std::vector<Rational> target;
    if (spec.payload.contains("target")) {
      target = parse_point(spec.payload, "target", F.dim(), where);
    } else {
      target.assign(F.dim(), Rational(1, 32));
    }
    const double radius = opt_num(spec.payload, "ball_radius", where, 0.75);
    const long count = perturbed_preimage_count(F, target, radius);
    oracle = count;
    json oj;
    oj["method"] = "perturbed preimage count";
    oj["count"] = count;
    out.body["oracle"] = std::move(oj);
  } else if (spec.verify) {
    out.body["oracle"] = json{{"skipped", "preimage oracle supports dimension <= 2"}};
  }

  if (rep.capped || !agree) {
    out.status = "hypothesis-failure";
  } else if (oracle && *oracle != static_cast<long>(rep.mu)) {
    // Both algebraic methods agree on mu; a differing geometric preimage
    // count contradicts them.
    out.status = "contradiction";
  }
  return out;
}

Outcome do_fuchs(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  EulerOperatorSpec op;
  op.order = static_cast<unsigned>(need_int(need(spec.payload, "order", where),
                                            where + ".order", 1, 12));
  op.coeffs = parse_value_list(need_array(spec.payload, "coeffs", where), where + ".coeffs");
  if (op.coeffs.size() != op.order)
    throw ProblemError(where + ".coeffs",
                       "expected exactly " + std::to_string(op.order) + " coefficients");
  try {
    op.validate();
  } catch (const std::exception& e) {
    throw ProblemError(where, e.what());
  }

  const EulerSolution sol = euler_solve(op);
  const BoundCertificate cert = roitman_zero_bound(op);

  Outcome out;
  out.body["certificates"] = json::array({certificate_json(cert)});
  json lines = json::array();
  for (const auto& l : sol.spectrum.lines) {
    json lj;
    lj["lambda"] = l.lambda.get_str();
    lj["multiplicity"] = l.multiplicity;
    lines.push_back(std::move(lj));
  }
  out.body["results"]["spectrum"] = std::move(lines);

  if (spec.payload.contains("member")) {
    const json& mj = spec.payload.at("member");
    const std::string mw = where + ".member";
    PseudomonomialSum f;
    size_t i = 0;
    for (const auto& t : need_array(mj, "terms", mw)) {
      const std::string tw = mw + ".terms[" + std::to_string(i++) + "]";
      const Rational lambda = exact_value(need(t, "lambda", tw), tw + ".lambda");
      const unsigned k =
          static_cast<unsigned>(need_int(need(t, "k", tw), tw + ".k", 0, 32));
      f.add(lambda, k, PhaseSum(exact_complex(need(t, "coeff", tw), tw + ".coeff")));
    }
    const AnnihilationReport ann = annihilator_check(sol.spectrum, f);
    out.body["results"]["member_annihilated"] = ann.annihilated;
    out.body["results"]["member_remainder"] = ann.remainder.str();
    if (!ann.annihilated) out.status = "hypothesis-failure";
  }

  std::optional<long> oracle;
  if (spec.verify) {
    // Seeded random real-rational combination of the solution basis, counted
    // by sign scan on (1e-6, 1) in the original chart.
    CounterRng rng(spec.seed, 0);
    PseudomonomialSum f;
    bool nonzero = false;
    for (const auto& l : sol.spectrum.lines)
      for (unsigned k = 0; k < l.multiplicity; ++k) {
        const Rational c = rng.uniform_rational(-3, 3, 8);
        if (c != 0) {
          f.add(l.lambda, k, PhaseSum(CRational(c)));
          nonzero = true;
        }
      }
    if (!nonzero) f.add(sol.spectrum.lines.front().lambda, 0, PhaseSum(CRational(Rational(1))));
    const RootCountReport rc = count_real_zeros(
        RealSampler::black_box(
            [f](double t) { return f.eval_z(std::log(t), M_PI).real(); },
            "random-solution"),
        1e-6, 1.0 - 1e-9, 4096);
    oracle = rc.count;
    json oj;
    oj["method"] = "sign-scan zero count of a random real solution";
    oj["count"] = rc.count;
    oj["real_valued"] = f.real_for_positive_t();
    out.body["oracle"] = std::move(oj);
  }
  settle(out, cert, oracle);
  return out;
}

// Worst intersection count of the curve with seeded random affine
// hyperplanes; plane j draws its data from the counter stream (seed, j).
long worst_affine_hits(const CurveSampler& curve, std::uint64_t seed, unsigned planes,
                       unsigned grid) {
  long worst = 0;
  for (unsigned j = 0; j < planes; ++j) {
    CounterRng rng(seed, j);
    const std::vector<double> normal = rng.unit_vector(curve.dim);
    double lo = 0, hi = 0;
    std::vector<double> dots(grid + 1);
    for (unsigned g = 0; g <= grid; ++g) {
      const double t =
          curve.t0 + (curve.t1 - curve.t0) * static_cast<double>(g) / grid;
      const std::vector<double> x = curve.position(t);
      double d = 0;
      for (size_t k = 0; k < curve.dim; ++k) d += normal[k] * x[k];
      dots[g] = d;
      if (g == 0) {
        lo = hi = d;
      } else {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    }
    const double offset = rng.uniform(lo, hi);
    long hits = 0;
    double prev = 0;
    for (double d : dots) {
      const double s = d - offset;
      if (s == 0) continue;
      if (prev != 0 && ((prev < 0) != (s < 0))) ++hits;
      prev = s;
    }
    worst = std::max(worst, hits);
  }
  return worst;
}

Outcome do_curve(const ProblemSpec& spec) {
  const std::string where = "$.payload";
  const json& opj = need(spec.payload, "op", where);
  if (!opj.is_string()) throw ProblemError(where + ".op", "expected a string");
  const std::string op = opj.get<std::string>();
  const CurveSampler curve =
      parse_curve(need(spec.payload, "curve", where), where + ".curve");
  const double tol = opt_num(spec.payload, "tol", where, 1e-6);

  Outcome out;
  if (op == "rotation") {
    validate_curve(curve);
    const RotationReport rep = rolle_rn_check(curve, tol);
    out.body["results"]["curve_rotation"] = rep.curve_rotation;
    out.body["results"]["hodograph_rotation"] = rep.hodograph_rotation;
    out.body["results"]["dist_start"] = rep.dist_start;
    out.body["results"]["dist_end"] = rep.dist_end;
    out.body["results"]["closed"] = rep.closed;
    out.body["results"]["tolerance"] = rep.tolerance;
    out.body["results"]["sharp_holds"] = rep.sharp_holds;
    out.body["results"]["slack_holds"] = rep.slack_holds;
    // Both inequalities are theorems; the quadrature values violating them
    // would contradict, not merely fail a hypothesis.
    if (!rep.sharp_holds || !rep.slack_holds) out.status = "contradiction";
    return out;
  }
  if (op == "length") {
    validate_curve(curve);
    out.body["results"]["length"] = spherical_length(curve, tol);
    return out;
  }
  if (op == "frenet") {
    const double t = numeric_value(need(spec.payload, "t", where), where + ".t");
    const FrenetData fd = frenet_curvatures(curve, t);
    out.body["results"]["t"] = fd.t;
    out.body["results"]["gram"] = fd.gram;
    out.body["results"]["curvature"] = fd.curvature;
    return out;
  }
  if (op == "bound") {
    validate_curve(curve);
    const BoundCertificate cert = hyperplane_rotation_bound(curve, tol);
    out.body["certificates"] = json::array({certificate_json(cert)});
    std::optional<long> oracle;
    if (spec.verify) {
      const auto samples = static_cast<std::uint64_t>(
          opt_int(spec.payload, "samples", where, 1, 1000000, 1000));
      const unsigned grid =
          static_cast<unsigned>(opt_int(spec.payload, "grid", where, 16, 65536, 512));
      const HyperplaneStats hs = random_hyperplane_hits(curve, spec.seed, samples, grid);
      oracle = hs.max_hits;
      json oj;
      oj["method"] = "random central-hyperplane intersections";
      oj["max_hits"] = hs.max_hits;
      oj["mean"] = hs.mean;
      oj["samples"] = hs.samples;
      out.body["oracle"] = std::move(oj);
    }
    settle(out, cert, oracle);
    return out;
  }
  if (op == "shapiro") {
    validate_curve(curve);
    const NonOscillationCertificate cert = shapiro_certificate(curve, tol);
    out.body["results"]["certified"] = cert.certified;
    out.body["results"]["integral"] = cert.integral;
    out.body["results"]["tolerance"] = cert.tolerance;
    out.body["results"]["threshold"] = cert.threshold;
    out.body["results"]["dimension"] = cert.dimension;
    if (!cert.certified) {
      out.status = "hypothesis-failure";
      return out;
    }
    if (spec.verify) {
      const unsigned planes =
          static_cast<unsigned>(opt_int(spec.payload, "planes", where, 1, 100000, 1000));
      const unsigned grid =
          static_cast<unsigned>(opt_int(spec.payload, "grid", where, 64, 65536, 2048));
      const long worst = worst_affine_hits(curve, spec.seed, planes, grid);
      json oj;
      oj["method"] = "worst sampled affine-hyperplane intersection count";
      oj["worst"] = worst;
      oj["planes"] = planes;
      out.body["oracle"] = std::move(oj);
      if (worst > static_cast<long>(cert.dimension)) out.status = "contradiction";
    }
    return out;
  }
  if (op == "buffon") {
    validate_curve(curve);
    const auto samples = static_cast<std::uint64_t>(
        opt_int(spec.payload, "samples", where, 16, 10000000, 10000));
    const unsigned grid =
        static_cast<unsigned>(opt_int(spec.payload, "grid", where, 16, 65536, 512));
    const BuffonReport rep = buffon_estimate(curve, samples, spec.seed, grid);
    const double quadrature = spherical_length(curve, tol);
    out.body["results"]["estimate"] = rep.estimate;
    out.body["results"]["stddev"] = rep.stddev;
    out.body["results"]["half_width"] = rep.half_width;
    out.body["results"]["max_hits"] = rep.max_hits;
    out.body["results"]["samples"] = rep.samples;
    out.body["results"]["quadrature_length"] = quadrature;
    const double se = rep.stddev / std::sqrt(static_cast<double>(samples));
    const bool consistent = std::abs(rep.estimate - quadrature) <= 3.0 * se + 1e-9;
    out.body["results"]["consistent"] = consistent;
    if (!consistent) out.status = "contradiction";
    return out;
  }
  throw ProblemError(where + ".op",
                     "unknown curve operation '" + op +
                         "' (expected rotation, length, frenet, bound, shapiro, or buffon)");
}

Outcome dispatch(const ProblemSpec& spec) {
  if (spec.kind == "descartes") return do_descartes(spec);
  if (spec.kind == "chain") return do_chain(spec);
  if (spec.kind == "dlvp") return do_dlvp(spec);
  if (spec.kind == "kim") return do_kim(spec);
  if (spec.kind == "argvar") return do_argvar(spec);
  if (spec.kind == "jensen") return do_jensen(spec);
  if (spec.kind == "bernstein") return do_bernstein(spec);
  if (spec.kind == "voorhoeve") return do_voorhoeve(spec);
  if (spec.kind == "pseudopoly") return do_pseudopoly(spec);
  if (spec.kind == "polya") return do_polya(spec);
  if (spec.kind == "tangency") return do_tangency(spec);
  if (spec.kind == "meander") return do_meander(spec);
  if (spec.kind == "mult") return do_mult(spec);
  if (spec.kind == "fuchs") return do_fuchs(spec);
  if (spec.kind == "curve") return do_curve(spec);
  throw ProblemError("$.kind", "unknown kind '" + spec.kind + "'");
}

// ---------------------------------------------------------------------------
// Corpus instances. All randomness of instance i comes from counter streams
// seeded with (seed, i), so a failing index regenerates in isolation and the
// assembled report does not depend on scheduling.
// ---------------------------------------------------------------------------

struct InstanceResult {
  json record;
  std::string status;  // ok | skipped | contradiction
};

InstanceResult corpus_chain_instance(const CorpusSpec& cs, std::uint64_t i) {
  CounterRng rng(cs.seed, i);
  const long degree_max = opt_int(cs.params, "degree_max", "$.params", 1, 16, 8);
  const long lo = opt_int(cs.params, "coeff_lo", "$.params", -1000, 1000, -10);
  const long hi = opt_int(cs.params, "coeff_hi", "$.params", lo, 1000, 10);
  const long d = rng.uniform_int(1, degree_max);
  std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
  for (auto& c : coeffs) c = rng.uniform_rational(lo, hi, 8);
  while (coeffs.back() == 0) coeffs.back() = rng.uniform_rational(lo, hi, 8);
  const UniPoly f{coeffs};

  const ChainReport rep = rolle_chain_check(f, Rational(-10), Rational(10));
  InstanceResult out;
  out.record["index"] = i;
  out.record["degree"] = d;
  json distinct = json::array();
  for (const auto& r : rep.rows) distinct.push_back(r.distinct);
  out.record["distinct"] = std::move(distinct);
  const bool ok = rep.distinct_ok && rep.mult_ok;
  out.record["ok"] = ok;
  out.status = ok ? "ok" : "contradiction";
  return out;
}

InstanceResult corpus_descartes_instance(const CorpusSpec& cs, std::uint64_t i) {
  CounterRng rng(cs.seed, i);
  const long max_terms = opt_int(cs.params, "max_terms", "$.params", 1, 16, 5);
  const long max_exp = opt_int(cs.params, "max_exponent", "$.params", 1, 200, 30);
  const long nterms = rng.uniform_int(1, max_terms);
  std::set<long> exps;
  while (static_cast<long>(exps.size()) < nterms) exps.insert(rng.uniform_int(0, max_exp));
  Fewnomial f;
  for (long e : exps) {
    Rational c = rng.uniform_rational(-5, 5, 4);
    while (c == 0) c = rng.uniform_rational(-5, 5, 4);
    f.terms.push_back({e, c});
  }

  const BoundCertificate cert = fewnomial_positive_bound(f);
  const FewnomialCount count = fewnomial_positive_count(f);
  InstanceResult out;
  out.record["index"] = i;
  out.record["terms"] = f.terms.size();
  out.record["bound"] = cert.bound;
  out.record["count"] = count.count;
  const bool certified = !cert.unbounded && cert.hypotheses_hold();
  const bool ok = certified && count.count <= static_cast<long>(cert.bound);
  out.record["ok"] = ok;
  out.status = !certified ? "skipped" : (ok ? "ok" : "contradiction");
  return out;
}

InstanceResult corpus_meander_instance(const CorpusSpec& cs, std::uint64_t i) {
  CounterRng rng(cs.seed, i);
  const long dmax = opt_int(cs.params, "degree_max", "$.params", 1, 4, 3);
  const auto monos = monomials_up_to(2, static_cast<unsigned>(dmax));

  PolyVectorField v;
  for (int comp = 0; comp < 2; ++comp) {
    const long deg_target = rng.uniform_int(1, dmax);
    MultiPoly p(2);
    for (const auto& e : monos) {
      if (total_degree(e) > static_cast<unsigned>(deg_target)) continue;
      if (rng.uniform01() < 0.5) continue;
      const Rational c = rng.uniform_rational(-2, 2, 4);
      if (c != 0) p.add_term(e, c);
    }
    if (p.is_zero()) p = MultiPoly::variable(2, static_cast<size_t>(1 - comp));
    v.components.push_back(std::move(p));
  }

  MultiPoly u0 = MultiPoly::constant(2, rng.uniform_rational(-1, 1, 8));
  const Rational l1 = rng.uniform_rational(-2, 2, 4);
  const Rational l2 = rng.uniform_rational(-2, 2, 4);
  u0 = u0 + l1 * MultiPoly::variable(2, 0) + l2 * MultiPoly::variable(2, 1);
  if (l1 == 0 && l2 == 0) u0 = u0 + MultiPoly::variable(2, 0);

  const std::vector<Rational> q{rng.uniform_rational(-1, 1, 8), rng.uniform_rational(-1, 1, 8)};
  const Rational delta(1, 4);

  InstanceResult out;
  out.record["index"] = i;
  BoundCertificate cert;
  try {
    cert = meandering_bound(v, u0, q, delta, 6, 2);
  } catch (const std::exception& e) {
    out.record["skipped"] = e.what();
    out.status = "skipped";
    return out;
  }
  if (cert.unbounded || !cert.hypotheses_hold()) {
    out.record["skipped"] = "bound not certified";
    out.status = "skipped";
    return out;
  }
  out.record["bound"] = cert.bound;
  if (cs.verify) {
    long crossings = 0;
    try {
      crossings = meander_crossing_oracle(v, u0, q, delta);
    } catch (const std::exception& e) {
      out.record["skipped"] = std::string("oracle: ") + e.what();
      out.status = "skipped";
      return out;
    }
    out.record["crossings"] = crossings;
    const bool ok = crossings <= static_cast<long>(cert.bound);
    out.record["ok"] = ok;
    out.status = ok ? "ok" : "contradiction";
  } else {
    out.record["ok"] = true;
    out.status = "ok";
  }
  return out;
}

// Random closed trigonometric curve kept away from the origin by a constant
// offset exceeding the total harmonic amplitude.
CurveSampler random_closed_curve(CounterRng& rng, size_t dim) {
  std::vector<TrigCoord> coords(dim);
  double total_amp = 0;
  for (auto& c : coords) {
    for (int freq = 1; freq <= 3; ++freq) {
      if (rng.uniform01() < 0.6) continue;
      TrigCoord::Harmonic h{};
      h.freq = freq;
      h.a = rng.uniform(-1, 1);
      h.b = rng.uniform(-1, 1);
      total_amp += std::abs(h.a) + std::abs(h.b);
      c.harmonics.push_back(h);
    }
    if (c.harmonics.empty()) {
      TrigCoord::Harmonic h{};
      h.freq = 1;
      h.a = rng.uniform(0.5, 1.5);
      h.b = rng.uniform(-1, 1);
      total_amp += std::abs(h.a) + std::abs(h.b);
      c.harmonics.push_back(h);
    }
  }
  coords[0].c0 = total_amp + 1 + rng.uniform01();
  return make_trig_curve(std::move(coords), 0.0, 2.0 * M_PI, true, "corpus-curve");
}

InstanceResult corpus_curve_instance(const CorpusSpec& cs, std::uint64_t i) {
  CounterRng rng(cs.seed, i);
  const std::string op =
      cs.params.contains("op") && cs.params.at("op").is_string()
          ? cs.params.at("op").get<std::string>()
          : "rotation";
  const size_t dim = static_cast<size_t>(2 + i % 2);
  const CurveSampler curve = random_closed_curve(rng, dim);

  InstanceResult out;
  out.record["index"] = i;
  out.record["dim"] = dim;
  try {
    validate_curve(curve);
  } catch (const std::exception& e) {
    out.record["skipped"] = e.what();
    out.status = "skipped";
    return out;
  }

  if (op == "buffon") {
    const long samples = opt_int(cs.params, "samples", "$.params", 16, 1000000, 10000);
    const BuffonReport rep =
        buffon_estimate(curve, static_cast<std::uint64_t>(samples), 1000 + i, 512);
    const double quadrature = spherical_length(curve);
    const double se = rep.stddev / std::sqrt(static_cast<double>(samples));
    const bool ok = std::abs(rep.estimate - quadrature) <= 3.0 * se + 1e-9;
    out.record["estimate"] = rep.estimate;
    out.record["quadrature_length"] = quadrature;
    out.record["ok"] = ok;
    out.status = ok ? "ok" : "contradiction";
    return out;
  }
  if (op != "rotation")
    throw ProblemError("$.params.op", "corpus curve op must be rotation or buffon");
  const RotationReport rep = rolle_rn_check(curve);
  out.record["curve_rotation"] = rep.curve_rotation;
  out.record["hodograph_rotation"] = rep.hodograph_rotation;
  const bool ok = rep.sharp_holds && rep.slack_holds;
  out.record["ok"] = ok;
  out.status = ok ? "ok" : "contradiction";
  return out;
}

InstanceResult corpus_instance(const CorpusSpec& cs, std::uint64_t i) {
  if (cs.kind == "chain") return corpus_chain_instance(cs, i);
  if (cs.kind == "descartes") return corpus_descartes_instance(cs, i);
  if (cs.kind == "meander") return corpus_meander_instance(cs, i);
  if (cs.kind == "curve") return corpus_curve_instance(cs, i);
  throw ProblemError("$.kind", "unknown corpus kind '" + cs.kind +
                                   "' (expected chain, descartes, meander, or curve)");
}

}  // namespace

RunResult run_problem(const ProblemSpec& spec) {
  json report;
  report["schema"] = kReportSchema;
  report["version"] = kToolVersion;
  report["kind"] = spec.kind;
  json input;
  input["kind"] = spec.kind;
  input["payload"] = spec.payload;
  input["seed"] = spec.seed;
  input["verify"] = spec.verify;
  report["input"] = std::move(input);

  Outcome out;
  try {
    out = dispatch(spec);
  } catch (const ProblemError&) {
    throw;
  } catch (const std::exception& e) {
    report["error"] = e.what();
    report["status"] = "hypothesis-failure";
    report["ok"] = false;
    return {std::move(report), 2};
  }
  for (auto& [key, value] : out.body.items()) report[key] = std::move(value);
  report["status"] = out.status;
  report["ok"] = out.status == "ok";
  const int code = out.status == "ok" ? 0 : (out.status == "contradiction" ? 3 : 2);
  return {std::move(report), code};
}

RunResult run_corpus(const CorpusSpec& spec, unsigned threads) {
  if (spec.kind != "chain" && spec.kind != "descartes" && spec.kind != "meander" &&
      spec.kind != "curve")
    throw ProblemError("$.kind", "unknown corpus kind '" + spec.kind +
                                     "' (expected chain, descartes, meander, or curve)");

  const std::uint64_t n = spec.count;
  std::vector<InstanceResult> results(n);
  unsigned workers = threads ? threads : default_thread_count();
  if (n > 0 && workers > n) workers = static_cast<unsigned>(n);
  if (workers == 0) workers = 1;

  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (std::uint64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        results[i] = corpus_instance(spec, i);
      } catch (const std::exception& e) {
        results[i].record = json{{"index", i}, {"skipped", e.what()}};
        results[i].status = "skipped";
      }
    }
  };
  if (n > 0) {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  json report;
  report["schema"] = kReportSchema;
  report["version"] = kToolVersion;
  report["kind"] = "corpus";
  json input;
  input["kind"] = spec.kind;
  input["count"] = spec.count;
  input["seed"] = spec.seed;
  input["verify"] = spec.verify;
  input["params"] = spec.params;
  report["input"] = std::move(input);

  json instances = json::array();
  std::uint64_t passed = 0, skipped = 0, contradicted = 0;
  json failed_indices = json::array();
  for (std::uint64_t i = 0; i < n; ++i) {
    instances.push_back(results[i].record);
    if (results[i].status == "ok") {
      ++passed;
    } else if (results[i].status == "skipped") {
      ++skipped;
    } else {
      ++contradicted;
      failed_indices.push_back(i);
    }
  }
  report["instances"] = std::move(instances);
  json summary;
  summary["passed"] = passed;
  summary["skipped"] = skipped;
  summary["contradicted"] = contradicted;
  summary["failed_indices"] = std::move(failed_indices);
  report["summary"] = std::move(summary);
  const bool ok = contradicted == 0;
  report["ok"] = ok;
  report["status"] = ok ? "ok" : "contradiction";
  return {std::move(report), ok ? 0 : 3};
}

}  // namespace rolle
