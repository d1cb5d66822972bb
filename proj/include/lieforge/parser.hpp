#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "lieforge/constructions.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/finring.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

// Syntax-level failure (malformed header, bad token, index out of range).
// Alternation and antisymmetry conflicts are semantic and raise
// ValidationError instead, with the line number in the message.
struct ParseError : Error {
  ParseError(std::size_t line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  std::size_t line;
};

// One definition per file: an algebra (with optional representation blocks)
// or a ring.
//
// Line-oriented grammar, '#' starts a comment, indices are 1-based:
//   algebra NAME over Q dim N        |  algebra NAME over F5 dim N
//   [i,j] = TERM + TERM + ...        TERM = k | c*k, c rational a or a/b
//   ring NAME factors m1,m2,...      bracket terms with integer c
//   rep NAME on dim M
//   phi i = [r11,r12,...;r21,...]    one row per ';', M rows of M entries
// Omitted brackets are zero; [j,i] is filled in by antisymmetry.
struct DefinitionFile {
  std::optional<LieAlgebra> algebra;
  std::optional<FiniteLieRing> ring;
  std::vector<Representation> reps;

  bool is_algebra() const { return algebra.has_value(); }
  const std::string& name() const {
    return is_algebra() ? algebra->name() : ring->name();
  }
};

DefinitionFile parse_definition(const std::string& text);
DefinitionFile parse_definition_path(const std::string& path);

// Canonical text form; parse_definition(serialize(df)) reconstructs an
// equal definition (same_as algebras, identical ring tables and rep
// matrices).
std::string serialize(const DefinitionFile& df);

}  // namespace lieforge
