#include "lieforge/subspace.hpp"

namespace lieforge {

// Scale a rational row to a primitive integer vector (clears denominators,
// divides by the content). Leaves the row space unchanged.
static void row_to_primitive(Matrix& a, std::size_t r) {
  mpz_class l(1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
            a.at(r, j).value().get_den().get_mpz_t());
  }
  mpz_class g(0);
  std::vector<mpz_class> ints(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ints[j] = a.at(r, j).value().get_num() *
              (l / a.at(r, j).value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
  }
  if (g == 0) return;  // zero row
  for (std::size_t j = 0; j < a.cols(); ++j) {
    a.at(r, j) = Scalar::from_mpq(a.field(), mpq_class(ints[j] / g));
  }
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const Field f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;

  if (f.is_rationals()) {
    for (std::size_t r = 0; r < rows; ++r) row_to_primitive(a, r);
    // Bareiss forward elimination: every intermediate entry is a minor of the
    // primitive integer input, so the one-step division is exact.
    Scalar prev(f, 1);
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
      std::size_t pr = row;
      while (pr < rows && a.at(pr, col).is_zero()) ++pr;
      if (pr == rows) continue;
      a.swap_rows(row, pr);
      const Scalar p = a.at(row, col);
      for (std::size_t i = row + 1; i < rows; ++i) {
        const Scalar head = a.at(i, col);
        for (std::size_t j = col + 1; j < cols; ++j) {
          a.at(i, j) = (a.at(i, j) * p - head * a.at(row, j)) / prev;
        }
        a.at(i, col) = Scalar(f);
      }
      prev = p;
      pivots.push_back(col);
      ++row;
    }
    for (std::size_t t = pivots.size(); t-- > 0;) {
      const Scalar inv = a.at(t, pivots[t]).inverse();
      for (std::size_t j = pivots[t]; j < cols; ++j) {
        a.at(t, j) = a.at(t, j) * inv;
      }
      for (std::size_t r2 = 0; r2 < t; ++r2) {
        const Scalar c = a.at(r2, pivots[t]);
        if (c.is_zero()) continue;
        for (std::size_t j = pivots[t]; j < cols; ++j) {
          a.at(r2, j) = a.at(r2, j) - c * a.at(t, j);
        }
      }
    }
  } else {
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
      std::size_t pr = row;
      while (pr < rows && a.at(pr, col).is_zero()) ++pr;
      if (pr == rows) continue;
      a.swap_rows(row, pr);
      const Scalar inv = a.at(row, col).inverse();
      for (std::size_t j = col; j < cols; ++j) {
        a.at(row, j) = a.at(row, j) * inv;
      }
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == row) continue;
        const Scalar c = a.at(i, col);
        if (c.is_zero()) continue;
        for (std::size_t j = col; j < cols; ++j) {
          a.at(i, j) = a.at(i, j) - c * a.at(row, j);
        }
      }
      pivots.push_back(col);
      ++row;
    }
  }
  return {a, pivots};
}

Subspace Subspace::zero(Field f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), piv);
}

Subspace Subspace::span_of(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Matrix basis(rows.field(), rr.pivots.size(), rows.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    basis.set_row(i, rr.r.row(i));
  }
  return Subspace(basis, rr.pivots);
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient()) throw DimensionMismatchError("reduce length");
  for (std::size_t t = 0; t < dim(); ++t) {
    const Scalar c = v[pivots_[t]];
    if (c.is_zero()) continue;
    vec_axpy(v, -c, basis_.row(t));
  }
  return v;
}

bool Subspace::contains_vec(const Vec& v) const {
  return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i) {
    if (!contains_vec(o.basis().row(i))) return false;
  }
  return true;
}

Matrix Subspace::annihilator() const {
  return kernel(basis_).basis();
}

bool Subspace::operator==(const Subspace& o) const {
  return basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
  const Field f = m.field();
  const std::size_t n = m.cols();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(f, n);
    v[j] = Scalar(f, 1);
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
      v[rr.pivots[t]] = -rr.r.at(t, j);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span_of(Matrix::from_vec_rows(f, n, basis));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw DimensionMismatchError("subspace sum ambient mismatch");
  }
  return Subspace::span_of(a.basis().vstack(b.basis()));
}

// Zassenhaus: reduce [A|A; B|0]; rows with vanishing left half carry an
// intersection basis in their right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field())) {
    throw DimensionMismatchError("subspace intersect ambient mismatch");
  }
  const Field f = a.field();
  const std::size_t n = a.ambient();
  Matrix block(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      block.at(a.dim() + i, j) = b.basis().at(i, j);
    }
  }
  RrefResult rr = rref(block);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] < n) continue;
    const Vec full = rr.r.row(i);
    rows.emplace_back(full.begin() + static_cast<long>(n), full.end());
  }
  return Subspace::span_of(Matrix::from_vec_rows(f, n, rows));
}

Subspace preimage(const Matrix& map, const Subspace& target) {
  if (map.rows() != target.ambient()) {
    throw DimensionMismatchError("preimage shape mismatch");
  }
  return kernel(target.annihilator() * map);
}

Vec solve_unique(const Matrix& a, const Vec& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) {
    throw DimensionMismatchError("solve_unique needs a square system");
  }
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() != n) throw Error("solve_unique: singular system");
  for (std::size_t i = 0; i < n; ++i) {
    if (rr.pivots[i] != i) throw Error("solve_unique: singular system");
  }
  Vec x = zero_vec(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rr.r.at(i, n);
  return x;
}

}  // namespace lieforge
