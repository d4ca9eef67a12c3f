#pragma once
// Closed rational intervals and boxes. All endpoints are exact rationals, so
// interval arithmetic here is conservative without any rounding step.

#include <rolle/rational.hpp>

#include <stdexcept>
#include <vector>

namespace rolle {

struct QIv {
  Rational lo, hi;

  QIv() : lo(0), hi(0) {}
  QIv(Rational a) : lo(a), hi(std::move(a)) {}
  QIv(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw std::invalid_argument("QIv: lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  // Largest absolute value attained on the interval.
  Rational mag() const {
    const Rational a = rolle::abs(lo), b = rolle::abs(hi);
    return a > b ? a : b;
  }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  friend QIv operator+(const QIv& a, const QIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend QIv operator-(const QIv& a, const QIv& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend QIv operator-(const QIv& a) { return {-a.hi, -a.lo}; }
  friend QIv operator*(const QIv& a, const QIv& b) {
    const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational& p : {p2, p3, p4}) {
      if (p < lo) lo = p;
      if (p > hi) hi = p;
    }
    return {lo, hi};
  }
  friend QIv operator*(const Rational& s, const QIv& a) {
    return s >= 0 ? QIv{s * a.lo, s * a.hi} : QIv{s * a.hi, s * a.lo};
  }

  QIv pow(unsigned e) const {
    if (e == 0) return QIv(Rational(1));
    QIv acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = acc * (*this);
    // even powers of a zero-straddling interval are tightened at the low end
    if (e % 2 == 0 && contains_zero() && acc.lo < 0) acc.lo = 0;
    return acc;
  }

  static QIv hull(const QIv& a, const QIv& b) {
    return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
  }
};

using IntervalBox = std::vector<QIv>;

inline IntervalBox hull(const IntervalBox& a, const IntervalBox& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hull: dimension mismatch");
  IntervalBox r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = QIv::hull(a[i], b[i]);
  return r;
}

inline bool box_contains(const IntervalBox& b, const std::vector<Rational>& x) {
  if (b.size() != x.size()) return false;
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].contains(x[i])) return false;
  return true;
}

}  // namespace rolle
