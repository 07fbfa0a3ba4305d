// polyalg: classify polyominoes, compute their invariants, and check them
// against the standard-monomial oracle.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 precondition, 4 resource guard,
// 5 falsification (two independent computations disagree).

#include "polyalg/enumerate.hpp"
#include "polyalg/errors.hpp"
#include "polyalg/grid.hpp"
#include "polyalg/oracle.hpp"
#include "polyalg/report.hpp"
#include "polyalg/rook.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

namespace {

using polyalg::Json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kPrecondition = 3,
  kResource = 4,
  kFalsification = 5,
};

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.path, "Polyomino file, or - for stdin")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "ascii", "coords"}))
      ->capture_default_str();
}

polyalg::Polyomino read_input(const InputOptions& in) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path);
    if (!file) throw polyalg::ParseError("cannot open " + in.path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  auto format = polyalg::InputFormat::automatic;
  if (in.format == "ascii") format = polyalg::InputFormat::ascii_grid;
  if (in.format == "coords") format = polyalg::InputFormat::coordinate_list;
  return polyalg::parse_polyomino(text, format);
}

class Stopwatch {
 public:
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const Json& laps() const { return laps_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json laps_ = Json::object();
};

void emit(Json report, const Stopwatch& clock, bool timings) {
  report["timings_ms"] = timings ? clock.laps() : Json(nullptr);
  std::cout << report.dump(2) << '\n';
}

int run_classify(const InputOptions& in, bool timings) {
  Stopwatch clock;
  const auto p = read_input(in);
  clock.lap("parse");
  Json report = polyalg::classify_report(p);
  clock.lap("classify");
  emit(std::move(report), clock, timings);
  return kOk;
}

int run_invariants(const InputOptions& in, bool timings) {
  Stopwatch clock;
  const auto p = read_input(in);
  clock.lap("parse");
  Json report = polyalg::invariants_report(p);
  clock.lap("invariants");
  emit(std::move(report), clock, timings);
  return kOk;
}

struct VerifyOptions {
  std::optional<unsigned> depth;
  std::string mode = "theorem";
  std::string dump_path;
};

int run_verify(const InputOptions& in, const VerifyOptions& opts, bool timings) {
  Stopwatch clock;
  const auto p = read_input(in);
  clock.lap("parse");
  const auto limits = polyalg::OracleLimits::from_environment();
  const bool theorem = opts.mode == "theorem";
  unsigned depth = 0;
  if (opts.depth) {
    depth = *opts.depth;
  } else {
    // The rook number bounds deg h, so these depths always suffice.
    depth = static_cast<unsigned>(polyalg::rook_number(p)) + (theorem ? 2 : 3);
  }
  if (!opts.dump_path.empty()) {
    std::ofstream dump(opts.dump_path);
    if (!dump) throw polyalg::PreconditionError("cannot write " + opts.dump_path);
    polyalg::write_ideal_dump(dump, p, depth, limits);
    clock.lap("dump");
  }
  Json report;
  if (theorem) {
    const auto check = polyalg::verify_main_theorem(p, depth, limits);
    clock.lap("oracle");
    if (!check.match)
      throw polyalg::FalsificationError("oracle Hilbert function disagrees with the rook-polynomial series " +
                                        check.series.to_string());
    report = polyalg::theorem_report(p, check);
  } else {
    const auto check = polyalg::verify_conjecture(p, depth, limits);
    clock.lap("oracle");
    report = polyalg::conjecture_report(p, check);
  }
  emit(std::move(report), clock, timings);
  return kOk;
}

struct ScanCliOptions {
  unsigned max_rank = 0;
  unsigned jobs = 1;
  std::string out_path;
};

int run_scan(const ScanCliOptions& opts, bool timings) {
  Stopwatch clock;
  polyalg::ScanOptions options;
  options.jobs = opts.jobs;
  const auto report = polyalg::conjecture_scan(opts.max_rank, options);
  clock.lap("scan");

  std::ofstream file;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path);
    if (!file) throw polyalg::PreconditionError("cannot write " + opts.out_path);
  }
  std::ostream& records = opts.out_path.empty() ? std::cout : file;
  for (const auto& record : report.records) records << polyalg::to_json(record).dump() << '\n';

  Json summary{{"summary", polyalg::to_json(report.summary, report.records)}};
  summary["max_rank"] = opts.max_rank;
  summary["timings_ms"] = timings ? clock.laps() : Json(nullptr);
  std::cout << summary.dump() << '\n';
  return kOk;
}

int fail(int code, const char* kind, const std::exception& e) {
  std::cerr << "polyalg: " << kind << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rook polynomials, Hilbert series and oracle checks for polyominoes"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "Add wall-clock timings to the report");

  InputOptions classify_in, invariants_in, verify_in;
  auto* classify = app.add_subcommand("classify", "Connectivity, simplicity, thinness, maximal intervals");
  add_input(classify, classify_in);

  auto* invariants = app.add_subcommand("invariants", "Rook polynomial, Hilbert series and invariants");
  add_input(invariants, invariants_in);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Compare against the standard-monomial oracle");
  add_input(verify, verify_in);
  verify->add_option("--depth", verify_opts.depth, "Hilbert function prefix length (default: rook number + 2/3)");
  verify->add_option("--mode", verify_opts.mode, "theorem or conjecture")
      ->check(CLI::IsMember({"theorem", "conjecture"}))
      ->capture_default_str();
  verify->add_option("--dump-gb", verify_opts.dump_path, "Write generators and Groebner basis to this file");

  ScanCliOptions scan_opts;
  auto* scan = app.add_subcommand("scan", "Conjecture scan over all fixed polyominoes up to a rank");
  scan->add_option("--max-rank", scan_opts.max_rank, "Largest rank to enumerate")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--jobs", scan_opts.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  scan->add_option("--out", scan_opts.out_path, "JSON-lines output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  // Only the scan runs in parallel.
  omp_set_num_threads(1);

  try {
    if (*classify) return run_classify(classify_in, timings);
    if (*invariants) return run_invariants(invariants_in, timings);
    if (*verify) return run_verify(verify_in, verify_opts, timings);
    if (*scan) return run_scan(scan_opts, timings);
  } catch (const polyalg::ParseError& e) {
    return fail(kParse, "parse error", e);
  } catch (const polyalg::PreconditionError& e) {
    return fail(kPrecondition, "precondition violated", e);
  } catch (const polyalg::ResourceError& e) {
    return fail(kResource, "resource limit", e);
  } catch (const polyalg::FalsificationError& e) {
    return fail(kFalsification, "falsification", e);
  }
  return kUsage;
}
