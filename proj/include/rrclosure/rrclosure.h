/* C interface to the rrclosure library. All handles are opaque; every
 * function that can fail returns an rrc_status and records a message that
 * rrc_last_error() returns for the calling thread. */
#ifndef RRCLOSURE_H
#define RRCLOSURE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RRC_API __declspec(dllexport)
#else
#define RRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rrc_status {
  RRC_OK = 0,
  RRC_INVALID_ARGUMENT,
  RRC_PARSE_ERROR,
  RRC_NOT_M_PRIMARY,
  RRC_RING_MISMATCH,
  RRC_OVERFLOW,
  RRC_ZERO_POLYNOMIAL,
  RRC_BOUND_TOO_LARGE,
  RRC_GENERICITY_FAILURE,
  RRC_NOT_SUPERFICIAL,
  RRC_ELEMENT_NOT_IN_IDEAL,
  RRC_R_MAX_EXCEEDED,
  RRC_CHAIN_UNSTABLE,
  RRC_IO_ERROR,
  RRC_INTERNAL
} rrc_status;

typedef enum rrc_command {
  RRC_CMD_CLOSURE = 0,
  RRC_CMD_CLOSURE_POWER,
  RRC_CMD_POINCARE,
  RRC_CMD_HILBERT,
  RRC_CMD_REDUCTION,
  RRC_CMD_CHECK_CLOSED,
  RRC_CMD_COLON_POWERS
} rrc_command;

typedef enum rrc_mode {
  RRC_MODE_DEFAULT = 0, /* take the mode from the problem file, else heuristic */
  RRC_MODE_HEURISTIC,
  RRC_MODE_CERTIFIED
} rrc_mode;

typedef struct rrc_problem rrc_problem;
typedef struct rrc_report rrc_report;

typedef struct rrc_options {
  rrc_command command;
  rrc_mode mode;
  int has_seed;
  uint64_t seed;
  int has_k;
  int64_t k;
  int has_n;
  int64_t n;
  int use_file_reduction;
  uint64_t bound_cap;
  int64_t r_max;
  int64_t k_cap;
  const char* cache_dir; /* NULL disables the cache */
} rrc_options;

RRC_API void rrc_options_init(rrc_options* options);

/* Parse errors also report the byte offset of the offending token through
 * error_offset (may be NULL; set to SIZE_MAX when not applicable). */
RRC_API rrc_status rrc_problem_parse(const char* text, rrc_problem** out, size_t* error_offset);
RRC_API rrc_status rrc_problem_load(const char* path, rrc_problem** out, size_t* error_offset);
RRC_API void rrc_problem_free(rrc_problem* problem);
/* Canonical problem text; release with rrc_string_free. */
RRC_API rrc_status rrc_problem_print(const rrc_problem* problem, char** out);

RRC_API rrc_status rrc_run(const rrc_problem* problem, const rrc_options* options,
                           rrc_report** out);
/* Pretty-printed JSON (indent > 0) or compact JSON (indent = 0). */
RRC_API rrc_status rrc_report_json(const rrc_report* report, int indent, char** out);
RRC_API rrc_status rrc_report_text(const rrc_report* report, char** out);
RRC_API int rrc_report_from_cache(const rrc_report* report);
RRC_API void rrc_report_free(rrc_report* report);

RRC_API void rrc_string_free(char* s);
RRC_API const char* rrc_last_error(void);
RRC_API const char* rrc_status_name(rrc_status status);
/* Returns 0 and sets *out when name is a known command, else -1. */
RRC_API int rrc_command_from_name(const char* name, rrc_command* out);
RRC_API const char* rrc_version(void);

#ifdef __cplusplus
}
#endif

#endif
