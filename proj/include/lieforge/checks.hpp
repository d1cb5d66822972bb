#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieforge/parser.hpp"
#include "lieforge/report.hpp"

namespace lieforge {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint64_t samples = 25;  // per-property sampling scale
};

// Suite keys accepted by run_suite, in canonical order, excluding "all".
const std::vector<std::string>& suite_names();

// Runs one verification suite against a parsed definition and reports one
// CheckResult per property. Suites that do not fit the definition (wrong
// kind, wrong characteristic) return a single not-applicable result rather
// than failing. "all" runs every suite in canonical order. Unknown suite
// names throw Error.
std::vector<CheckResult> run_suite(const DefinitionFile& df,
                                   const std::string& suite,
                                   const SuiteOptions& opt);

}  // namespace lieforge
