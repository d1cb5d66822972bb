#include "lieforge/report.hpp"

#include <json.hpp>
#include <sstream>

namespace lieforge {

bool Report::all_passed() const {
  for (const CheckResult& c : checks) {
    if (c.applicable && !c.passed) return false;
  }
  return true;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = r.schema_version;
  j["tool"] = r.tool;
  j["command"] = r.command;
  j["input"] = {{"name", r.input_name}, {"digest", r.input_digest}};
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["passed"] = c.passed;
    cj["instances"] = c.instances;
    cj["witnesses"] = c.witnesses;
    if (!c.note.empty()) cj["note"] = c.note;
    j["checks"].push_back(cj);
  }
  j["summary"] = {{"checks", r.checks.size()},
                  {"all_passed", r.all_passed()}};
  if (r.with_timing) j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
  return j.dump(2) + "\n";
}

std::string render_table(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::ostringstream out;
  out << j["tool"].get<std::string>() << " " << j["command"].get<std::string>()
      << ": " << j["input"]["name"].get<std::string>() << " (digest "
      << j["input"]["digest"].get<std::string>() << ", seed " << j["seed"]
      << ")\n";
  for (const auto& c : j["checks"]) {
    std::string verdict = !c["applicable"].get<bool>() ? "skip"
                          : c["passed"].get<bool>()    ? "pass"
                                                       : "FAIL";
    std::uint64_t n = c["instances"].get<std::uint64_t>();
    out << "  [" << verdict << "] " << c["name"].get<std::string>() << " ("
        << n << (n == 1 ? " instance)" : " instances)");
    if (c.contains("note")) out << " " << c["note"].get<std::string>();
    out << "\n";
    for (const auto& w : c["witnesses"]) {
      out << "      witness: " << w.get<std::string>() << "\n";
    }
  }
  out << (j["summary"]["all_passed"].get<bool>() ? "all checks passed"
                                                 : "CHECKS FAILED")
      << "\n";
  return out.str();
}

}  // namespace lieforge
