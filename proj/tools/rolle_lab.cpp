// Command-line driver: reads a JSON problem or corpus description, runs the
// requested computation with its independent cross-check, and prints a
// deterministic report (sorted keys, exact rationals echoed verbatim) to
// stdout or --out. Timing goes to stderr only, so repeated runs of the same
// command are byte-identical.
//
// Exit codes: 0 success; 1 unreadable/malformed input; 2 hypotheses not
// certified (including math-layer precondition failures); 3 a certified
// bound was exceeded by its oracle — reserved for that contradiction alone.

#include <rolle/problem.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct RunOptions {
  std::string file;
  bool verify = false;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out;
  std::string format = "json";
};

void add_io_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("file", o.file, "JSON problem file")->required();
  cmd->add_option("--seed", o.seed, "override the seed recorded in the file");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

int emit(const nlohmann::json& report, const RunOptions& o) {
  const std::string body =
      o.format == "text" ? rolle::render_text(report) : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return 1;
  }
  f << body;
  return 0;
}

class Timer {
 public:
  ~Timer() {
    const auto dt = std::chrono::steady_clock::now() - start_;
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(dt).count();
    std::fprintf(stderr, "timing: %.1f ms\n", ms);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_one(const RunOptions& o, const std::string& expected_kind) {
  Timer timer;
  try {
    rolle::ProblemSpec spec = rolle::load_problem(o.file);
    if (!expected_kind.empty() && spec.kind != expected_kind) {
      std::cerr << "error: " << o.file << ": kind is '" << spec.kind
                << "' but the subcommand expects '" << expected_kind << "'\n";
      return 1;
    }
    if (o.seed) spec.seed = *o.seed;
    if (o.verify) spec.verify = true;
    const rolle::RunResult result = rolle::run_problem(spec);
    if (const int rc = emit(result.report, o); rc != 0) return rc;
    return result.exit_code;
  } catch (const rolle::ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << "\n";
    return 1;
  }
}

int run_corpus_cmd(const RunOptions& o) {
  Timer timer;
  try {
    rolle::CorpusSpec spec = rolle::load_corpus(o.file);
    if (o.seed) spec.seed = *o.seed;
    if (o.verify) spec.verify = true;
    const rolle::RunResult result =
        rolle::run_corpus(spec, o.threads.value_or(0));
    if (const int rc = emit(result.report, o); rc != 0) return rc;
    return result.exit_code;
  } catch (const rolle::ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified zero and intersection bounds with independent numeric cross-checks"};
  app.set_version_flag("--version", std::string(rolle::kToolVersion));
  app.require_subcommand(1);

  int rc = 0;

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "run a problem file of any kind");
  add_io_options(run, run_opts);
  run->add_flag("--verify", run_opts.verify, "also run the independent oracle");
  run->callback([&]() { rc = run_one(run_opts, ""); });

  static const char* kinds[] = {"descartes", "chain",   "dlvp",      "kim",
                                "argvar",    "jensen",  "bernstein", "voorhoeve",
                                "pseudopoly", "polya",  "tangency",  "meander",
                                "mult",      "fuchs",   "curve"};
  // One options struct per alias so CLI11 option pointers stay valid.
  static RunOptions alias_opts[std::size(kinds)];
  for (size_t i = 0; i < std::size(kinds); ++i) {
    const std::string kind = kinds[i];
    CLI::App* cmd =
        app.add_subcommand(kind, "run a problem file of kind '" + kind + "'");
    RunOptions& o = alias_opts[i];
    add_io_options(cmd, o);
    cmd->add_flag("--verify", o.verify, "also run the independent oracle");
    cmd->callback([&rc, &o, kind]() { rc = run_one(o, kind); });
  }

  RunOptions corpus_opts;
  CLI::App* corpus =
      app.add_subcommand("corpus", "run a batch of seeded random instances");
  add_io_options(corpus, corpus_opts);
  corpus->add_flag("--verify", corpus_opts.verify,
                   "run the per-instance oracle where one exists");
  corpus->add_option("--threads", corpus_opts.threads,
                     "worker threads (default: ROLLE_LAB_THREADS or hardware)");
  corpus->callback([&]() { rc = run_corpus_cmd(corpus_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return rc;
}
