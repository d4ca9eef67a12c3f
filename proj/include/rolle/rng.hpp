#pragma once
// Counter-based deterministic randomness ("splitmix64-counter"): every draw
// is a pure function of (seed, stream, position), so corpus sample i can be
// regenerated in isolation and reports stay byte-identical across runs and
// thread counts.

#include <rolle/rational.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace rolle {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    s = stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL;
    state_ ^= splitmix64(s);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1) with 53 random bits
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // uniform integer in [lo, hi] inclusive
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  // random rational k/den with k/den in [lo, hi]
  Rational uniform_rational(long lo, long hi, long den = 16) {
    const long k = uniform_int(lo * den, hi * den);
    Rational q(k, den);
    q.canonicalize();
    return q;
  }

  double gaussian() {
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::vector<double> unit_vector(size_t n) {
    std::vector<double> v(n);
    double norm = 0;
    do {
      norm = 0;
      for (auto& x : v) {
        x = gaussian();
        norm += x * x;
      }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
  }

  static constexpr const char* name() { return "splitmix64-counter"; }

 private:
  std::uint64_t state_;
};

}  // namespace rolle
