#include "lieforge/matrix.hpp"

namespace lieforge {

Vec zero_vec(Field f, std::size_t n) {
  return Vec(n, Scalar(f));
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

static void check_vec_pair(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("vector lengths differ");
  }
}

Vec vec_add(const Vec& a, const Vec& b) {
  check_vec_pair(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_vec_pair(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = c * x;
  return r;
}

void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
  check_vec_pair(y, x);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = y[i] + c * x[i];
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long>>& rows,
                         std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatchError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_vec_rows(Field f, std::size_t cols,
                             const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatchError("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  return e_[i * cols_ + j];
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
  return e_[i * cols_ + j];
}

Vec Matrix::row(std::size_t i) const {
  return Vec(e_.begin() + static_cast<long>(i * cols_),
             e_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatchError("row length");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void Matrix::check_compatible(const Matrix& o, bool same_shape) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatchError("matrix fields differ: " + field_.str() + " vs " +
                             o.field_.str());
  }
  if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_)) {
    throw DimensionMismatchError("matrix shapes differ");
  }
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o, true);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o, true);
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o, false);
  if (cols_ != o.rows_) throw DimensionMismatchError("matmul shapes");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = r.at(i, j) + a * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

Matrix Matrix::scale(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.e_) x = c * x;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

Matrix Matrix::pow(std::size_t e) const {
  if (rows_ != cols_) throw DimensionMismatchError("pow of non-square matrix");
  Matrix r = identity(field_, rows_);
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatchError("trace of non-square");
  Scalar t(field_);
  for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatchError("apply length");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    }
  }
  return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
  check_compatible(below, false);
  if (cols_ != below.cols_) throw DimensionMismatchError("vstack widths");
  Matrix r(field_, rows_ + below.rows_, cols_);
  r.e_.assign(e_.begin(), e_.end());
  r.e_.insert(r.e_.end(), below.e_.begin(), below.e_.end());
  return r;
}

Matrix Matrix::stack(Field f, std::size_t cols,
                     const std::vector<Matrix>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.rows();
  Matrix r(f, total, cols);
  std::size_t at_row = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols || !(b.field() == f)) {
      throw DimensionMismatchError("stack block mismatch");
    }
    for (std::size_t i = 0; i < b.rows(); ++i, ++at_row) {
      r.set_row(at_row, b.row(i));
    }
  }
  return r;
}

Vec Matrix::flatten() const {
  return e_;
}

Matrix Matrix::unflatten(Field f, std::size_t rows, std::size_t cols,
                         const Vec& v) {
  if (v.size() != rows * cols) throw DimensionMismatchError("unflatten size");
  Matrix m(f, rows, cols);
  m.e_ = v;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) {
    return false;
  }
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!(e_[i] == o.e_[i])) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += vec_str(row(i));
    s += "\n";
  }
  return s;
}

}  // namespace lieforge
