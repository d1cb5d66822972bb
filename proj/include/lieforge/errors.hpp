#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Raised by operations that only exist in characteristic zero (Fitting via
// traces, exp of ad) when handed an F_p object.
struct WrongCharacteristicError : Error {
  using Error::Error;
};

struct NotAnIdealError : Error {
  using Error::Error;
};

struct NotASubalgebraError : Error {
  using Error::Error;
};

struct NotAdNilpotentError : Error {
  using Error::Error;
};

struct InvalidRepresentationError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

// Structure-constant validation failure; indices are 0-based. The
// bad_torsion kind is ring-specific: order([g_i,g_j]) must divide
// gcd(m_i, m_j) for the bracket to extend bilinearly.
struct ValidationError : Error {
  enum class Kind { not_alternating, not_antisymmetric, jacobi_fails, bad_torsion };

  ValidationError(Kind kind_, std::size_t i_, std::size_t j_, std::size_t k_,
                  const std::string& msg)
      : Error(msg), kind(kind_), i(i_), j(j_), k(k_) {}

  Kind kind;
  std::size_t i, j, k;
};

// A mandatory post-verification failed. This signals an implementation bug,
// never bad user input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lieforge
