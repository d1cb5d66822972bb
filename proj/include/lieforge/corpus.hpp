#pragma once

#include <string>
#include <vector>

#include "lieforge/parser.hpp"

namespace lieforge {

// Bundled definitions, stored in the cli text format and parsed on demand so
// the corpus exercises the same code path as user files.
struct CorpusEntry {
  std::string name;
  std::string definition;
};

const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_names();

// Throws Error for an unknown name.
DefinitionFile corpus_load(const std::string& name);

}  // namespace lieforge
