#include "lieforge/field.hpp"

namespace lieforge {

Field Field::gf(std::uint64_t p) {
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0) {
    throw Error("F_p requires a prime modulus, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "F" + std::to_string(char_);
}

Scalar::Scalar(Field f, long n) : field_(f), v_(reduce(f, mpq_class(n))) {}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(Field::rationals(), q);
}

Scalar Scalar::from_mpq(Field f, const mpq_class& v) {
  Scalar s(f);
  s.v_ = reduce(f, v);
  return s;
}

mpq_class Scalar::reduce(const Field& f, const mpq_class& v) {
  if (f.is_rationals()) {
    mpq_class c = v;
    c.canonicalize();
    return c;
  }
  // F_p: value must be integral once the denominator is inverted mod p.
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0) throw DivisionByZeroError("denominator vanishes mod p");
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw DivisionByZeroError("denominator not invertible mod p");
    }
    num = (num * inv) % p;
  }
  return mpq_class(num);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " +
                             o.field_.str());
  }
}

Scalar Scalar::operator-() const {
  return from_mpq(field_, mpq_class(-v_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return from_mpq(field_, mpq_class(v_ + o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return from_mpq(field_, mpq_class(v_ - o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return from_mpq(field_, mpq_class(v_ * o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (field_.is_rationals()) {
    return from_mpq(field_, mpq_class(1 / v_));
  }
  mpz_class p(static_cast<unsigned long>(field_.characteristic()));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  return from_mpq(field_, mpq_class(inv));
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && v_ == o.v_;
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace lieforge
