#include "lieforge/corpus.hpp"

#include "lieforge/errors.hpp"

namespace lieforge {

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"abelian-2",
       "algebra abelian-2 over Q dim 2\n"},
      {"abelian-4",
       "algebra abelian-4 over Q dim 4\n"},
      {"h3",
       "# Heisenberg algebra\n"
       "algebra h3 over Q dim 3\n"
       "[1,2] = 3\n"},
      {"filiform-4",
       "algebra filiform-4 over Q dim 4\n"
       "[1,2] = 3\n"
       "[1,3] = 4\n"},
      {"aff1",
       "# affine line: [t,y] = y\n"
       "algebra aff1 over Q dim 2\n"
       "[1,2] = 2\n"},
      {"sl2",
       "# basis h,e,f\n"
       "algebra sl2 over Q dim 3\n"
       "[1,2] = 2*2\n"
       "[1,3] = -2*3\n"
       "[2,3] = 1\n"},
      {"borel-sl2",
       "algebra borel-sl2 over Q dim 2\n"
       "[1,2] = 2*2\n"},
      {"h3-plus-line",
       "# Heisenberg algebra plus a central line\n"
       "algebra h3-plus-line over Q dim 4\n"
       "[1,2] = 3\n"},
      {"rot5",
       "# basis t,x1,x2,u,v; the Killing form vanishes on t although t is\n"
       "# not in the fitting ideal, so trace-form shortcuts fail here\n"
       "algebra rot5 over Q dim 5\n"
       "[1,2] = 3\n"
       "[1,3] = -1*2\n"
       "[1,4] = 4\n"
       "[1,5] = -1*5\n"},
      {"h3-f2",
       "algebra h3-f2 over F2 dim 3\n"
       "[1,2] = 3\n"},
      {"h3-f3",
       "algebra h3-f3 over F3 dim 3\n"
       "[1,2] = 3\n"},
      {"heis8",
       "# Heisenberg ring on (Z/2)^3\n"
       "ring heis8 factors 2,2,2\n"
       "[1,2] = 3\n"},
      {"ring-z4z2",
       "# mixed torsion: [g1,g2] = 2*g1 has order 2 = gcd(4,2)\n"
       "ring ring-z4z2 factors 4,2\n"
       "[1,2] = 2*1\n"},
      {"ring-z3",
       "# Heisenberg ring on (Z/3)^3\n"
       "ring ring-z3 factors 3,3,3\n"
       "[1,2] = 3\n"},
  };
  return entries;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const CorpusEntry& e : corpus_entries()) names.push_back(e.name);
  return names;
}

DefinitionFile corpus_load(const std::string& name) {
  for (const CorpusEntry& e : corpus_entries()) {
    if (e.name == name) return parse_definition(e.definition);
  }
  throw Error("no corpus entry named '" + name + "'");
}

}  // namespace lieforge
