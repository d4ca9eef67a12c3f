#include <rolle/poly.hpp>

#include <functional>
#include <sstream>

namespace rolle {

namespace {

template <class K>
std::string render(const Poly<K>& p, const std::string& var,
                   const std::function<std::string(const K&)>& fmt,
                   const std::function<bool(const K&)>& is_neg_unit,
                   const std::function<bool(const K&)>& is_unit) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = p.c.size(); i-- > 0;) {
    const K& c = p.c[i];
    if (c == K(0)) continue;
    if (!first) os << " + ";
    first = false;
    const bool suppress = i > 0 && (is_unit(c) || is_neg_unit(c));
    if (is_neg_unit(c) && i > 0)
      os << "-";
    else if (!suppress)
      os << fmt(c);
    if (i > 0) {
      if (!suppress) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string poly_to_string(const UniPoly& p, const std::string& var) {
  return render<Rational>(
      p, var, [](const Rational& c) { return to_string(c); },
      [](const Rational& c) { return c == -1; }, [](const Rational& c) { return c == 1; });
}

std::string poly_to_string(const CPoly& p, const std::string& var) {
  return render<CRational>(
      p, var, [](const CRational& c) { return "(" + to_string(c) + ")"; },
      [](const CRational& c) { return c == CRational(-1); },
      [](const CRational& c) { return c == CRational(1); });
}

}  // namespace rolle
