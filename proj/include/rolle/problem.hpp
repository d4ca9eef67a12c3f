#pragma once
// JSON problem descriptions for the command-line driver, and the runner that
// dispatches them to the library. Every certified numeric field in a problem
// file is a decimal string parsed as an exact rational; floating-point JSON
// literals in those positions are rejected so that no precision is silently
// lost on the way in. Reports are emitted with sorted keys and no ambient
// state (timing goes to stderr, never into the report), so a command repeated
// with the same inputs produces byte-identical output.

#include <rolle/cert.hpp>
#include <rolle/rational.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rolle {

// Input-side failure: unreadable file, malformed JSON, missing or ill-typed
// field. `location` names the offending file or JSON path. The driver maps
// these to exit code 1.
struct ProblemError : std::runtime_error {
  std::string location;
  ProblemError(std::string loc, const std::string& msg)
      : std::runtime_error(loc + ": " + msg), location(std::move(loc)) {}
};

// A single problem instance: which computation to run, its payload, and the
// run options. `kind` is one of: descartes, chain, dlvp, kim, argvar, jensen,
// bernstein, voorhoeve, pseudopoly, polya, tangency, meander, mult, fuchs,
// curve. The pseudo-kind "verify" wraps another problem and forces
// verification.
struct ProblemSpec {
  std::string kind;
  nlohmann::json payload;
  std::uint64_t seed = 0;
  bool verify = false;
};

ProblemSpec parse_problem(const nlohmann::json& doc);
ProblemSpec load_problem(const std::string& path);

// Batch of seeded random instances of one kind (chain, descartes, meander,
// or curve). Instance i draws all of its randomness from the counter stream
// (seed, i), so any failing index can be regenerated in isolation.
struct CorpusSpec {
  std::string kind;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  bool verify = false;
  nlohmann::json params;  // kind-specific generation ranges, all optional
};

CorpusSpec parse_corpus(const nlohmann::json& doc);
CorpusSpec load_corpus(const std::string& path);

// Exact-value parsing: accepts "3/4", "-0.25", "17" (strings) and JSON
// integers; rejects JSON floats with a diagnostic naming `where`.
Rational exact_value(const nlohmann::json& v, const std::string& where);
// Complex variant: {"re": ..., "im": ...} or a bare real value.
CRational exact_complex(const nlohmann::json& v, const std::string& where);

// Plain numeric knob (tolerance, radius of a numeric probe): any JSON number
// or a rational string.
double numeric_value(const nlohmann::json& v, const std::string& where);

// Report fragments shared by the runner and the tests.
nlohmann::json certificate_json(const BoundCertificate& cert);

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;  // 0 ok, 2 hypotheses failed, 3 bound < oracle
};

// Dispatches one problem. Math-layer exceptions (violated preconditions,
// exhausted caps, degenerate data) become exit code 2 with an "error" field;
// a verified contradiction (oracle exceeds a certified bound) is exit 3 and
// nothing else ever is.
RunResult run_problem(const ProblemSpec& spec);

// Runs `spec.count` instances on `threads` workers (0 = automatic) and
// assembles the per-instance reports in index order; the aggregate is
// byte-for-byte independent of the thread count.
RunResult run_corpus(const CorpusSpec& spec, unsigned threads = 0);

// ROLLE_LAB_THREADS when set and positive, hardware concurrency otherwise.
unsigned default_thread_count();

// Flat key: value rendering of a report for --format text.
std::string render_text(const nlohmann::json& report);

inline constexpr const char* kToolVersion = "rolle-lab 0.1.0";
inline constexpr int kReportSchema = 1;

}  // namespace rolle
