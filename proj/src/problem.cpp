#include <rolle/problem.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace rolle {

namespace {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError(path, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProblemError(path, e.what());
  }
}

std::uint64_t get_seed(const nlohmann::json& doc, const std::string& where) {
  const auto& v = doc.at("seed");
  if (!v.is_number_integer())
    throw ProblemError(where + ".seed", "expected an integer seed");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const long long s = v.get<long long>();
  if (s < 0) throw ProblemError(where + ".seed", "seed must be nonnegative");
  return static_cast<std::uint64_t>(s);
}

}  // namespace

Rational exact_value(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ProblemError(where, e.what());
    }
  }
  if (v.is_number_integer()) {
    if (v.is_number_unsigned())
      return Rational(Integer(static_cast<unsigned long>(v.get<std::uint64_t>())));
    return Rational(Integer(static_cast<long>(v.get<long long>())));
  }
  if (v.is_number_float())
    throw ProblemError(where,
                       "floating-point literal rejected in an exact field; "
                       "write the value as a decimal string, e.g. \"" +
                           v.dump() + "\"");
  throw ProblemError(where, "expected a rational value (string or integer), got " +
                                std::string(v.type_name()));
}

CRational exact_complex(const nlohmann::json& v, const std::string& where) {
  if (v.is_object()) {
    CRational z;
    z.re = v.contains("re") ? exact_value(v.at("re"), where + ".re") : Rational(0);
    z.im = v.contains("im") ? exact_value(v.at("im"), where + ".im") : Rational(0);
    return z;
  }
  return CRational(exact_value(v, where));
}

double numeric_value(const nlohmann::json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(exact_value(v, where));
  throw ProblemError(where, "expected a number");
}

ProblemSpec parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ProblemError("$", "problem must be a JSON object");
  if (!doc.contains("kind")) throw ProblemError("$.kind", "missing required field");
  if (!doc.at("kind").is_string())
    throw ProblemError("$.kind", "expected a string");

  ProblemSpec spec;
  spec.kind = doc.at("kind").get<std::string>();
  if (doc.contains("seed")) spec.seed = get_seed(doc, "$");
  if (doc.contains("verify")) {
    if (!doc.at("verify").is_boolean())
      throw ProblemError("$.verify", "expected a boolean");
    spec.verify = doc.at("verify").get<bool>();
  }
  spec.payload = doc.contains("payload") ? doc.at("payload")
                                         : nlohmann::json::object();
  if (!spec.payload.is_object())
    throw ProblemError("$.payload", "expected an object");

  if (spec.kind == "verify") {
    if (!spec.payload.contains("problem"))
      throw ProblemError("$.payload.problem",
                         "missing required field (kind \"verify\" wraps another problem)");
    ProblemSpec inner = parse_problem(spec.payload.at("problem"));
    inner.verify = true;
    if (doc.contains("seed")) inner.seed = spec.seed;
    return inner;
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  return parse_problem(load_json_file(path));
}

CorpusSpec parse_corpus(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ProblemError("$", "corpus config must be a JSON object");
  if (!doc.contains("kind")) throw ProblemError("$.kind", "missing required field");
  if (!doc.at("kind").is_string()) throw ProblemError("$.kind", "expected a string");

  CorpusSpec spec;
  spec.kind = doc.at("kind").get<std::string>();
  if (!doc.contains("count")) throw ProblemError("$.count", "missing required field");
  if (!doc.at("count").is_number_integer() || doc.at("count").get<long long>() < 0)
    throw ProblemError("$.count", "expected a nonnegative integer");
  spec.count = doc.at("count").get<std::uint64_t>();
  if (spec.count > 1000000)
    throw ProblemError("$.count", "corpus size capped at 1000000");
  if (doc.contains("seed")) spec.seed = get_seed(doc, "$");
  if (doc.contains("verify")) {
    if (!doc.at("verify").is_boolean())
      throw ProblemError("$.verify", "expected a boolean");
    spec.verify = doc.at("verify").get<bool>();
  }
  spec.params = doc.contains("params") ? doc.at("params") : nlohmann::json::object();
  if (!spec.params.is_object()) throw ProblemError("$.params", "expected an object");
  return spec;
}

CorpusSpec load_corpus(const std::string& path) {
  return parse_corpus(load_json_file(path));
}

nlohmann::json certificate_json(const BoundCertificate& cert) {
  nlohmann::json j;
  j["bound"] = cert.bound;
  j["unbounded"] = cert.unbounded;
  j["method"] = cert.method;
  j["statement"] = cert.statement;
  j["hypotheses_hold"] = cert.hypotheses_hold();
  auto hyps = nlohmann::json::array();
  for (const auto& h : cert.hypotheses) {
    nlohmann::json hj;
    hj["name"] = h.name;
    hj["lhs"] = h.lhs;
    hj["relation"] = h.relation;
    hj["rhs"] = h.rhs;
    hj["holds"] = h.holds;
    hyps.push_back(std::move(hj));
  }
  j["hypotheses"] = std::move(hyps);
  j["trace"] = cert.trace;
  return j;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ROLLE_LAB_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

namespace {

void render_value(std::ostream& os, const nlohmann::json& v, const std::string& prefix) {
  if (v.is_object()) {
    for (const auto& [key, val] : v.items())
      render_value(os, val, prefix.empty() ? key : prefix + "." + key);
  } else if (v.is_array()) {
    // Arrays of scalars print inline; arrays of objects get indexed prefixes.
    bool scalar = true;
    for (const auto& e : v)
      if (e.is_structured()) scalar = false;
    if (scalar) {
      os << prefix << ":";
      for (const auto& e : v) os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      os << "\n";
    } else {
      size_t i = 0;
      for (const auto& e : v) render_value(os, e, prefix + "[" + std::to_string(i++) + "]");
    }
  } else if (v.is_string()) {
    os << prefix << ": " << v.get<std::string>() << "\n";
  } else if (v.is_boolean()) {
    os << prefix << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  } else {
    os << prefix << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  if (report.contains("version")) os << report.at("version").get<std::string>() << "\n";
  for (const auto& [key, val] : report.items()) {
    if (key == "version") continue;
    render_value(os, val, key);
  }
  return os.str();
}

}  // namespace rolle
