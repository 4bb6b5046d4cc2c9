#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rrclosure/rrclosure.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct ProblemDeleter {
  void operator()(rrc_problem* p) const { rrc_problem_free(p); }
};
struct ReportDeleter {
  void operator()(rrc_report* r) const { rrc_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { rrc_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

bool is_usage_status(rrc_status s) { return s == RRC_PARSE_ERROR || s == RRC_IO_ERROR; }

void report_error(std::ostream& err, const std::string& where, rrc_status s) {
  err << "rrclosure: " << where << rrc_status_name(s) << ": " << rrc_last_error() << "\n";
}

}  // namespace

int rrc_cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ratliff-Rush closure of m-primary ideals", "rrclosure"};
  app.set_version_flag("--version", std::string(rrc_version()));

  std::string command;
  std::string file;
  std::string mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
  std::string format = "text";
  std::string cache_dir;
  bool reduction_from_file = false;
  std::uint64_t bound_cap = 400;
  std::int64_t r_max = 20;
  std::int64_t k_cap = 100;

  app.add_option("command", command, "closure | closure-power | poincare | hilbert | reduction | check-closed | colon-powers")
      ->required()
      ->check(CLI::IsMember({"closure", "closure-power", "poincare", "hilbert", "reduction",
                             "check-closed", "colon-powers"}));
  app.add_option("problem", file, "problem file, or - for standard input")->required();
  app.add_option("--mode", mode, "heuristic or certified")
      ->check(CLI::IsMember({"heuristic", "certified"}));
  app.add_option("--seed", seed, "random seed for the reduction search");
  app.add_option("--k", k, "k for colon-powers (overrides the certified value)")
      ->check(CLI::PositiveNumber);
  app.add_option("--n", n, "power for closure-power, last index for hilbert")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", cache_dir, "cache directory (default: $RRCLOSURE_CACHE_DIR)");
  app.add_flag("--reduction-from-file", reduction_from_file,
               "use the problem file's reduction line instead of searching");
  app.add_option("--bound-cap", bound_cap, "largest Hilbert-Samuel sample index");
  app.add_option("--r-max", r_max, "largest reduction number tried")->check(CLI::NonNegativeNumber);
  app.add_option("--k-cap", k_cap, "largest certified k for colon-powers")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (command == "closure-power" && !n) {
    err << "rrclosure: closure-power needs --n\n";
    return kExitUsage;
  }
  if (command == "closure-power" && *n < 1) {
    err << "rrclosure: --n must be at least 1 for closure-power\n";
    return kExitUsage;
  }

  rrc_problem* raw = nullptr;
  std::size_t offset = SIZE_MAX;
  rrc_status s;
  if (file == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    s = rrc_problem_parse(text.c_str(), &raw, &offset);
  } else {
    s = rrc_problem_load(file.c_str(), &raw, &offset);
  }
  if (s != RRC_OK) {
    report_error(err, file + ": ", s);
    return kExitUsage;
  }
  std::unique_ptr<rrc_problem, ProblemDeleter> problem(raw);

  rrc_options opts;
  rrc_options_init(&opts);
  rrc_command_from_name(command.c_str(), &opts.command);
  if (mode == "heuristic") opts.mode = RRC_MODE_HEURISTIC;
  if (mode == "certified") opts.mode = RRC_MODE_CERTIFIED;
  if (seed) opts.has_seed = 1, opts.seed = *seed;
  if (k) opts.has_k = 1, opts.k = *k;
  if (n) opts.has_n = 1, opts.n = *n;
  opts.use_file_reduction = reduction_from_file ? 1 : 0;
  opts.bound_cap = bound_cap;
  opts.r_max = r_max;
  opts.k_cap = k_cap;
  if (cache_dir.empty())
    if (const char* env = std::getenv("RRCLOSURE_CACHE_DIR")) cache_dir = env;
  opts.cache_dir = cache_dir.empty() ? nullptr : cache_dir.c_str();

  rrc_report* rep_raw = nullptr;
  s = rrc_run(problem.get(), &opts, &rep_raw);
  if (s != RRC_OK) {
    report_error(err, "", s);
    return is_usage_status(s) ? kExitUsage : kExitCompute;
  }
  std::unique_ptr<rrc_report, ReportDeleter> report(rep_raw);

  char* text = nullptr;
  s = format == "json" ? rrc_report_json(report.get(), 2, &text) : rrc_report_text(report.get(), &text);
  if (s != RRC_OK) {
    report_error(err, "", s);
    return kExitCompute;
  }
  StringPtr holder(text);
  out << text;
  if (format == "json") out << "\n";
  return kExitOk;
}
