#include "rrclosure/rrclosure.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "rrclosure/error.hpp"
#include "rrclosure/report.hpp"

struct rrc_problem {
  rrc::Problem value;
};

struct rrc_report {
  rrc::Json doc;
  bool from_cache = false;
};

namespace {

thread_local std::string g_last_error;

rrc_status to_status(rrc::ErrorCode code) {
  using rrc::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RRC_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return RRC_PARSE_ERROR;
    case ErrorCode::NotMPrimary: return RRC_NOT_M_PRIMARY;
    case ErrorCode::RingMismatch: return RRC_RING_MISMATCH;
    case ErrorCode::Overflow: return RRC_OVERFLOW;
    case ErrorCode::ZeroPolynomial: return RRC_ZERO_POLYNOMIAL;
    case ErrorCode::BoundTooLarge: return RRC_BOUND_TOO_LARGE;
    case ErrorCode::GenericityFailure: return RRC_GENERICITY_FAILURE;
    case ErrorCode::NotSuperficial: return RRC_NOT_SUPERFICIAL;
    case ErrorCode::ElementNotInIdeal: return RRC_ELEMENT_NOT_IN_IDEAL;
    case ErrorCode::RMaxExceeded: return RRC_R_MAX_EXCEEDED;
    case ErrorCode::ChainUnstable: return RRC_CHAIN_UNSTABLE;
    case ErrorCode::IoError: return RRC_IO_ERROR;
    case ErrorCode::Internal: return RRC_INTERNAL;
  }
  return RRC_INTERNAL;
}

rrc_status fail(rrc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
rrc_status guarded(F&& body, std::size_t* error_offset = nullptr) {
  if (error_offset) *error_offset = SIZE_MAX;
  try {
    body();
    g_last_error.clear();
    return RRC_OK;
  } catch (const rrc::Error& e) {
    if (error_offset && e.offset()) *error_offset = *e.offset();
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RRC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RRC_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

void rrc_options_init(rrc_options* o) {
  if (!o) return;
  std::memset(o, 0, sizeof *o);
  o->command = RRC_CMD_CLOSURE;
  o->mode = RRC_MODE_DEFAULT;
  o->bound_cap = 400;
  o->r_max = 20;
  o->k_cap = 100;
}

rrc_status rrc_problem_parse(const char* text, rrc_problem** out, size_t* error_offset) {
  if (!text || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new rrc_problem{rrc::parse_problem(text)}; }, error_offset);
}

rrc_status rrc_problem_load(const char* path, rrc_problem** out, size_t* error_offset) {
  if (!path || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new rrc_problem{rrc::load_problem(path)}; }, error_offset);
}

void rrc_problem_free(rrc_problem* problem) { delete problem; }

rrc_status rrc_problem_print(const rrc_problem* problem, char** out) {
  if (!problem || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(rrc::print_problem(problem->value)); });
}

rrc_status rrc_run(const rrc_problem* problem, const rrc_options* options, rrc_report** out) {
  if (!problem || !options || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    rrc::RunOptions o;
    switch (options->command) {
      case RRC_CMD_CLOSURE: o.command = rrc::Command::Closure; break;
      case RRC_CMD_CLOSURE_POWER: o.command = rrc::Command::ClosurePower; break;
      case RRC_CMD_POINCARE: o.command = rrc::Command::Poincare; break;
      case RRC_CMD_HILBERT: o.command = rrc::Command::Hilbert; break;
      case RRC_CMD_REDUCTION: o.command = rrc::Command::Reduction; break;
      case RRC_CMD_CHECK_CLOSED: o.command = rrc::Command::CheckClosed; break;
      case RRC_CMD_COLON_POWERS: o.command = rrc::Command::ColonPowers; break;
      default: throw rrc::Error(rrc::ErrorCode::InvalidArgument, "unknown command");
    }
    if (options->mode == RRC_MODE_HEURISTIC) o.mode = rrc::Mode::Heuristic;
    else if (options->mode == RRC_MODE_CERTIFIED) o.mode = rrc::Mode::Certified;
    if (options->has_seed) o.seed = options->seed;
    if (options->has_k) o.k = options->k;
    if (options->has_n) o.n = options->n;
    o.use_file_reduction = options->use_file_reduction != 0;
    o.bound_cap = options->bound_cap;
    o.r_max = options->r_max;
    o.k_cap = options->k_cap;

    auto report = std::make_unique<rrc_report>();
    if (options->cache_dir && *options->cache_dir) {
      rrc::ReportCache cache(options->cache_dir);
      std::string key = rrc::cache_key(problem->value, o);
      if (auto hit = cache.lookup(key)) {
        report->doc = std::move(*hit);
        report->from_cache = true;
      } else {
        report->doc = rrc::run_command(problem->value, o);
        cache.store(key, report->doc);
      }
    } else {
      report->doc = rrc::run_command(problem->value, o);
    }
    *out = report.release();
  });
}

rrc_status rrc_report_json(const rrc_report* report, int indent, char** out) {
  if (!report || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(report->doc.dump(indent > 0 ? indent : -1)); });
}

rrc_status rrc_report_text(const rrc_report* report, char** out) {
  if (!report || !out) return fail(RRC_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(rrc::render_text(report->doc)); });
}

int rrc_report_from_cache(const rrc_report* report) { return report && report->from_cache ? 1 : 0; }

void rrc_report_free(rrc_report* report) { delete report; }

void rrc_string_free(char* s) { std::free(s); }

const char* rrc_last_error(void) { return g_last_error.c_str(); }

const char* rrc_status_name(rrc_status status) {
  switch (status) {
    case RRC_OK: return "OK";
    case RRC_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case RRC_PARSE_ERROR: return "PARSE_ERROR";
    case RRC_NOT_M_PRIMARY: return "NOT_M_PRIMARY";
    case RRC_RING_MISMATCH: return "RING_MISMATCH";
    case RRC_OVERFLOW: return "OVERFLOW";
    case RRC_ZERO_POLYNOMIAL: return "ZERO_POLYNOMIAL";
    case RRC_BOUND_TOO_LARGE: return "BOUND_TOO_LARGE";
    case RRC_GENERICITY_FAILURE: return "GENERICITY_FAILURE";
    case RRC_NOT_SUPERFICIAL: return "NOT_SUPERFICIAL";
    case RRC_ELEMENT_NOT_IN_IDEAL: return "ELEMENT_NOT_IN_IDEAL";
    case RRC_R_MAX_EXCEEDED: return "R_MAX_EXCEEDED";
    case RRC_CHAIN_UNSTABLE: return "CHAIN_UNSTABLE";
    case RRC_IO_ERROR: return "IO_ERROR";
    case RRC_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

int rrc_command_from_name(const char* name, rrc_command* out) {
  if (!name || !out) return -1;
  auto c = rrc::command_from_name(name);
  if (!c) return -1;
  *out = static_cast<rrc_command>(static_cast<int>(*c));
  return 0;
}

const char* rrc_version(void) { return rrc::kToolVersion; }

}  // extern "C"
