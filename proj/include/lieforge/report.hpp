#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lieforge {

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::uint64_t instances = 0;          // property instances exercised
  std::vector<std::string> witnesses;   // serialized counterexamples
  std::string note;
};

// One report per tool invocation. JSON is the single output format; the
// table view is rendered from the JSON document, never computed separately.
// With timing suppressed the JSON is byte-deterministic for a fixed input,
// seed and tool version.
struct Report {
  std::string tool = "lieforge";
  int schema_version = 1;
  std::string command;       // validate | analyze | check
  std::string input_name;
  std::string input_digest;  // fnv1a of the definition text
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<CheckResult> checks;
  bool with_timing = true;
  double elapsed_seconds = 0.0;

  bool all_passed() const;
  bool all_applicable_passed() const { return all_passed(); }
};

std::string fnv1a_hex(const std::string& data);

std::string report_to_json(const Report& r);           // pretty, 2 spaces
std::string render_table(const std::string& json_text);

}  // namespace lieforge
