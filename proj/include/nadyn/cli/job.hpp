#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace nadyn::cli {

enum class Command { boettcher, verify, cf, newton_polygon, escape, degrees, kummer, transport };
enum class Backend { exact, capped };

std::string command_name(Command c);
Command parse_command(const std::string& name);

struct JobSpec {
  Command command = Command::boettcher;
  long prime = 0;
  Backend backend = Backend::exact;
  int precision = 40;
  int order = 16;
  std::vector<std::string> poly;  // a_0, ..., a_d as canonical "num/den"
  std::optional<std::string> point;
  int levels = 3;
  int max_iter = 32;
  int samples = 8;
  int d = 2;
  int N = 2;
  std::vector<std::pair<long, long>> generators;
  std::uint64_t seed = 0;
  bool emit_latex = false;
  std::string output;  // empty: stdout

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

// The "inputs" echo block; output path is not part of it.
nlohmann::json to_json(const JobSpec& job);
JobSpec job_from_json(const nlohmann::json& inputs);

// Throws UsageError on malformed arguments. Returns nullopt when help was
// printed to `out`.
std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::ostream& out);

}  // namespace nadyn::cli
