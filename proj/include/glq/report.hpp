#pragma once

// Machine-readable verification reports.
//
// JSON layout (schema_version 1):
//   { "schema_version": 1, "tool_version": "...", "config": {...},
//     "pass": bool,
//     "checks": [ { "name", "paper_ref", "params",
//                   "deviation" | "exact_match", ["value"], ["note"],
//                   "pass", "millis" } ] }
// Checks are sorted by name, then by the compact dump of their params.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace glq {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
  std::string name;
  /// Tag of the identity being checked, e.g. "scale-commutator".
  std::string paper_ref;
  Json params = Json::object();
  std::optional<double> deviation;
  std::optional<bool> exact_match;
  std::optional<double> value;
  std::optional<std::string> note;
  bool pass = false;
  double millis = 0.0;
};

struct Report {
  Json config = Json::object();
  std::vector<CheckRecord> checks;

  bool pass() const;
  void sort_checks();

  Json to_json(bool include_timing = true) const;
  static Report from_json(const Json& doc);

  /// One line per check plus a summary line.
  std::string to_text() const;
};

/// Shortest decimal that keeps a decimal point: 1 -> "1.0", 0.25 -> "0.25".
std::string format_value(double x);

}  // namespace glq
