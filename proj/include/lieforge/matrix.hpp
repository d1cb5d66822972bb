#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieforge/field.hpp"

namespace lieforge {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
void vec_axpy(Vec& y, const Scalar& c, const Vec& x);  // y += c*x
std::string vec_str(const Vec& v);

// Dense row-major matrix over a single field. Operations return fresh values.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<long>>& rows,
                          std::size_t cols);
  static Matrix from_vec_rows(Field f, std::size_t cols,
                              const std::vector<Vec>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  Scalar& at(std::size_t i, std::size_t j);

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scale(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(std::size_t e) const;  // square matrices only
  Scalar trace() const;
  bool is_zero() const;

  Vec apply(const Vec& v) const;  // M * v

  Matrix vstack(const Matrix& below) const;
  static Matrix stack(Field f, std::size_t cols,
                      const std::vector<Matrix>& blocks);

  Vec flatten() const;  // row-major, for spans of matrix spaces
  static Matrix unflatten(Field f, std::size_t rows, std::size_t cols,
                          const Vec& v);

  bool operator==(const Matrix& o) const;
  std::string str() const;

 private:
  void check_compatible(const Matrix& o, bool same_shape) const;

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

}  // namespace lieforge
