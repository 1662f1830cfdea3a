#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "girthkit/graph.hpp"

namespace girthkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// A girth value as reported: a finite length or infinity (forest).
struct GirthValue {
  std::optional<int> finite;
  friend bool operator==(const GirthValue&, const GirthValue&) = default;
};

struct ReportParams {
  std::optional<int> k;
  std::optional<int> alpha;
  std::optional<int> ell;
  std::optional<std::string> eps;
  std::optional<std::string> mode;
  std::optional<int> guess_reached;
  std::optional<double> hitting_constant;
  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

/// What every subcommand prints. `elapsed_ms` is serialized under a separate
/// "timing" key; everything else is a pure function of (command, seed).
struct RunReport {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> outcome;  // cycle | girth_exceeds | acyclic
  std::optional<std::vector<VertexId>> cycle;
  std::optional<int> bound;  // certified: girth > bound
  std::optional<GirthValue> girth;
  std::optional<GirthValue> oracle_girth;
  std::optional<bool> verified;
  std::vector<std::string> violations;
  ReportParams params;
  nlohmann::json data;  // subcommand-specific payload, null if none
  std::optional<double> elapsed_ms;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json to_json(const RunReport& report);
/// Inverse of to_json. Throws nlohmann::json::exception on malformed input.
RunReport report_from_json(const nlohmann::json& j);

/// Runs `girthkit <args...>` (args exclude the program name). Returns the
/// process exit code: 0 success, 1 contract violation under --verify, 2
/// usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace girthkit::cli
