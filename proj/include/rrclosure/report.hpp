#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rrclosure/closure.hpp"
#include "rrclosure/problem.hpp"

namespace rrc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { Closure, ClosurePower, Poincare, Hilbert, Reduction, CheckClosed, ColonPowers };

std::string_view command_name(Command command);
std::optional<Command> command_from_name(std::string_view name);

/// Settings for one command; unset values fall back to the problem file and
/// then to the defaults (heuristic mode, seed 0).
struct RunOptions {
  Command command = Command::Closure;
  std::optional<Mode> mode;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n;
  bool use_file_reduction = false;
  std::uint64_t bound_cap = 400;
  std::int64_t r_max = 20;
  std::int64_t k_cap = 100;
};

/// Runs the command and returns the schema-versioned report.
Json run_command(const Problem& problem, const RunOptions& opts);

/// Plain-text rendering of a report produced by run_command.
std::string render_text(const Json& report);

/// "35 + 4*X + 4*X^2 - 2*X^4"
std::string numerator_text(const std::vector<std::int64_t>& coeffs);

/// Canonical description of (field, variables, order, reduced basis,
/// command, parameters); equal strings mean interchangeable reports.
std::string cache_key(const Problem& problem, const RunOptions& opts);

std::uint64_t fnv1a64(std::string_view data);

/// One JSON file per key. Writes go to a temporary file that is renamed into
/// place; unreadable or mismatched entries count as misses.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  std::optional<Json> lookup(const std::string& key) const;
  void store(const std::string& key, const Json& report) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rrc
