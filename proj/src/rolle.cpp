#include <rolle/rolle.hpp>

#include <algorithm>
#include <stdexcept>

namespace rolle {

void Fewnomial::validate() const {
  if (terms.empty()) throw std::invalid_argument("fewnomial: no terms");
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw std::invalid_argument("fewnomial: zero coefficient");
    if (i > 0 && terms[i].exponent <= terms[i - 1].exponent)
      throw std::invalid_argument("fewnomial: exponents must be strictly increasing");
  }
}

UniPoly Fewnomial::to_unipoly() const {
  validate();
  const long shift = terms.front().exponent;
  std::vector<Rational> c(static_cast<size_t>(terms.back().exponent - shift) + 1, Rational(0));
  for (const auto& t : terms) c[static_cast<size_t>(t.exponent - shift)] = t.coeff;
  return UniPoly(c);
}

std::vector<int> Fewnomial::sign_sequence() const {
  std::vector<int> s;
  s.reserve(terms.size());
  for (const auto& t : terms) s.push_back(sgn(t.coeff));
  return s;
}

int Fewnomial::sign_changes() const {
  auto s = sign_sequence();
  int changes = 0;
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] != s[i - 1]) ++changes;
  return changes;
}

BoundCertificate fewnomial_positive_bound(const Fewnomial& f) {
  f.validate();
  const long nterms = static_cast<long>(f.terms.size());
  const long changes = f.sign_changes();
  const long bound = std::min(nterms - 1, changes);

  BoundCertificate cert;
  cert.bound = static_cast<std::uint64_t>(bound);
  cert.method = "descartes-fewnomial";
  cert.statement =
      "distinct positive roots <= min(#terms - 1, sign changes of the coefficient sequence)";
  cert.hypotheses.push_back({"nonzero-terms", std::to_string(nterms), ">=", "1", nterms >= 1});
  cert.trace.push_back("terms = " + std::to_string(nterms));
  cert.trace.push_back("sign_changes = " + std::to_string(changes));
  return cert;
}

FewnomialCount fewnomial_positive_count(const Fewnomial& f) {
  const UniPoly p = f.to_unipoly();
  if (p.degree() <= 0) return {0, Rational(1)};
  FewnomialCount out;
  out.cauchy_bound = cauchy_root_bound(p);
  // (0, M] convention: t = 0 is never a positive root, so the half-open
  // Sturm count is exactly the positive-root count.
  out.count = sturm_root_count(squarefree_part(p), Rational(0), out.cauchy_bound);
  return out;
}

BoundCertificate refined_rolle_bound(long z_fprime, int sign_f_left, int sign_df_left,
                                     int sign_f_right, int sign_df_right) {
  auto check_sign = [](int s) {
    if (s != -1 && s != 1) throw std::invalid_argument("endpoint sign must be -1 or +1");
  };
  check_sign(sign_f_left);
  check_sign(sign_df_left);
  check_sign(sign_f_right);
  check_sign(sign_df_right);
  if (z_fprime < 0) throw std::invalid_argument("negative derivative count");

  // phi(t) = |sign f(t) - sign f'(t)| / 2 is 0 when the signs agree, 1 when
  // they differ. Agreement at the left end / disagreement at the right end
  // each pins an extra root of f' outside the gaps between roots of f, so
  // Z(f) <= Z(f') + phi(left) - phi(right).
  const long phi0 = std::abs(sign_f_left - sign_df_left) / 2;
  const long phi1 = std::abs(sign_f_right - sign_df_right) / 2;
  const long raw = z_fprime + phi0 - phi1;

  BoundCertificate cert;
  cert.bound = static_cast<std::uint64_t>(raw < 0 ? 0 : raw);
  cert.method = "rolle-boundary-refined";
  cert.statement = "Z(f) <= Z(f') + phi(left) - phi(right), phi = |sign f - sign f'| / 2";
  cert.trace.push_back("Z(f') = " + std::to_string(z_fprime));
  cert.trace.push_back("phi(left) = " + std::to_string(phi0));
  cert.trace.push_back("phi(right) = " + std::to_string(phi1));
  if (raw < 0)
    cert.trace.push_back("raw bound negative (sign pattern impossible for a derivative); "
                         "clamped to 0");
  return cert;
}

ChainReport rolle_chain_check(const UniPoly& f, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("empty segment");
  if (f.degree() < 0) throw std::invalid_argument("zero polynomial has no root count");

  ChainReport rep;
  UniPoly g = f;
  for (unsigned k = 0; g.degree() >= 0; ++k) {
    ChainRow row;
    row.order = k;
    row.distinct = count_distinct_closed(g, a, b);
    row.with_multiplicity = count_multiplicity_closed(g, a, b);
    rep.rows.push_back(row);
    if (g.degree() == 0) break;
    g = g.derivative();
  }
  rep.distinct_ok = true;
  rep.mult_ok = true;
  for (size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    if (rep.rows[i].distinct > rep.rows[i + 1].distinct + 1) rep.distinct_ok = false;
    if (rep.rows[i].with_multiplicity > rep.rows[i + 1].with_multiplicity + 1) rep.mult_ok = false;
  }
  return rep;
}

}  // namespace rolle
