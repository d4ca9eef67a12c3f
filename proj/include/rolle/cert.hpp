#pragma once
// Machine-checkable bound certificates. Every counting bound in the library
// returns one of these: the bound itself, the hypotheses that were checked in
// exact arithmetic, and a derivation trace. Nothing in `bound` may depend on
// floating point.

#include <cstdint>
#include <string>
#include <vector>

namespace rolle {

struct Hypothesis {
  std::string name;      // what was compared, human-readable
  std::string lhs;       // exact rational (or integer) rendering
  std::string relation;  // "<", "<=", "==", ">=", ">"
  std::string rhs;
  bool holds = false;
};

struct BoundCertificate {
  std::uint64_t bound = 0;
  bool unbounded = false;          // no finite bound derived
  std::string method;              // classical name of the inequality used
  std::string statement;           // what the certificate asserts
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> trace;  // derivation lines, exact values echoed

  bool hypotheses_hold() const {
    for (const auto& h : hypotheses)
      if (!h.holds) return false;
    return true;
  }
  void note(std::string line) { trace.push_back(std::move(line)); }
};

}  // namespace rolle
