#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lieforge/errors.hpp"

namespace lieforge {

// Base field: Q (characteristic 0) or F_p with p prime. Every scalar, matrix
// and subspace carries its field; mixing fields is a hard error, not a
// coercion.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field gf(std::uint64_t p);  // validates primality

  std::uint64_t characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }
  std::string str() const;

  friend bool operator==(const Field& a, const Field& b) = default;

 private:
  explicit Field(std::uint64_t c) : char_(c) {}
  std::uint64_t char_;
};

// Immutable exact field element. Rationals stay canonical (lowest terms,
// positive denominator) via GMP; F_p residues stay in [0, p).
class Scalar {
 public:
  explicit Scalar(Field f) : field_(f), v_(0) {}
  Scalar(Field f, long n);
  static Scalar rational(long num, long den);
  static Scalar from_mpq(Field f, const mpq_class& v);

  const Field& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;
  static mpq_class reduce(const Field& f, const mpq_class& v);

  Field field_;
  mpq_class v_;
};

}  // namespace lieforge
