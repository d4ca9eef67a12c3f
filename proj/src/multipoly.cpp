#include <rolle/multipoly.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rolle {

MultiPoly MultiPoly::variable(size_t nvars, size_t i) {
  if (i >= nvars) throw std::out_of_range("MultiPoly::variable index");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e), 1);
}

void MultiPoly::add_term(Exponents e, Rational c) {
  if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (c == 0) return;
  // find-then-insert: emplace could move from `c` even when the key already
  // exists, which would corrupt the accumulation below
  const auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.nvars_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(a.nvars_);
      for (size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& a) {
  if (s == 0) return MultiPoly(a.nvars_);
  MultiPoly r(a.nvars_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

MultiPoly MultiPoly::partial(size_t var) const {
  if (var >= nvars_) throw std::out_of_range("MultiPoly::partial index");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(std::move(d), Rational(static_cast<int>(e[var])) * c);
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::eval arity");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= pow_rational(x[i], e[i]);
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_d(const std::vector<double>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::eval_d arity");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::truncate(unsigned k) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > k) break;  // grlex order: once past k, all later terms are too
    r.terms_.emplace(e, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = rolle::abs(c);
    bool printed = false;
    if (a != 1 || total_degree(e) == 0) {
      os << to_string(a);
      printed = true;
    }
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

QIv interval_eval(const MultiPoly& p, const IntervalBox& box) {
  if (box.size() != p.nvars()) throw std::invalid_argument("interval_eval arity");
  QIv acc(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    QIv t(c);
    for (size_t i = 0; i < box.size(); ++i)
      if (e[i]) t = t * box[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

std::vector<Exponents> monomials_up_to(size_t nvars, unsigned k) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  // depth-first enumeration, then graded-lex sort
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, k);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

size_t jet_dim(size_t nvars, unsigned k) {
  const Integer b = binomial(nvars + k, nvars);
  return static_cast<size_t>(b.get_ui());
}

TaylorJet TaylorJet::mul(const TaylorJet& other) const {
  if (center != other.center) throw std::invalid_argument("TaylorJet::mul: centers differ");
  const unsigned k = std::min(order, other.order);
  return {center, k, (poly * other.poly).truncate(k)};
}

}  // namespace rolle
