#include "lieforge/lie_algebra.hpp"

namespace lieforge {

LieAlgebra::LieAlgebra(std::string name, Field f, std::size_t dim,
                       std::vector<Vec> c)
    : name_(std::move(name)), field_(f), dim_(dim), c_(std::move(c)) {
  ad_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vec& v = structure(i, j);
      for (std::size_t r = 0; r < dim_; ++r) m.at(r, j) = v[r];
    }
    ad_.push_back(std::move(m));
  }
}

LieAlgebra LieAlgebra::validated(std::string name, Field f, std::size_t dim,
                                 std::vector<Vec> c) {
  if (c.size() != dim * dim) {
    throw DimensionMismatchError("structure tensor has wrong entry count");
  }
  for (const Vec& v : c) {
    if (v.size() != dim) {
      throw DimensionMismatchError("structure tensor entry has wrong length");
    }
    for (const Scalar& s : v) {
      if (!(s.field() == f)) {
        throw FieldMismatchError("structure constant field mismatch");
      }
    }
  }
  LieAlgebra l(std::move(name), f, dim, std::move(c));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!vec_is_zero(l.structure(i, i))) {
      throw ValidationError(ValidationError::Kind::not_alternating, i, i, 0,
                            "[e" + std::to_string(i + 1) + ",e" +
                                std::to_string(i + 1) + "] != 0");
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (!vec_is_zero(vec_add(l.structure(i, j), l.structure(j, i)))) {
        throw ValidationError(ValidationError::Kind::not_antisymmetric, i, j,
                              0,
                              "[e" + std::to_string(i + 1) + ",e" +
                                  std::to_string(j + 1) +
                                  "] != -[e" + std::to_string(j + 1) + ",e" +
                                  std::to_string(i + 1) + "]");
      }
    }
  }
  // Triples i<j<k suffice: with alternation and antisymmetry established, the
  // Jacobi sum of a permuted triple is a sign times the sorted one, and
  // repeated indices cancel identically.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::size_t k = j + 1; k < dim; ++k) {
        Vec s = bracket_vec(l, l.basis_element(i).coords, l.structure(j, k));
        s = vec_add(s, bracket_vec(l, l.basis_element(k).coords,
                                   l.structure(i, j)));
        s = vec_add(s, bracket_vec(l, l.basis_element(j).coords,
                                   l.structure(k, i)));
        if (!vec_is_zero(s)) {
          throw ValidationError(
              ValidationError::Kind::jacobi_fails, i, j, k,
              "Jacobi fails on (e" + std::to_string(i + 1) + ",e" +
                  std::to_string(j + 1) + ",e" + std::to_string(k + 1) +
                  "): cyclic sum = " + vec_str(s));
        }
      }
    }
  }
  return l;
}

Element LieAlgebra::element(Vec coords) const {
  if (coords.size() != dim_) throw DimensionMismatchError("element length");
  for (const Scalar& s : coords) {
    if (!(s.field() == field_)) {
      throw FieldMismatchError("element field mismatch");
    }
  }
  return Element{this, std::move(coords)};
}

Element LieAlgebra::basis_element(std::size_t i) const {
  Vec v = zero_vec(field_, dim_);
  v[i] = Scalar(field_, 1);
  return Element{this, std::move(v)};
}

Element LieAlgebra::zero_element() const {
  return Element{this, zero_vec(field_, dim_)};
}

bool LieAlgebra::same_as(const LieAlgebra& o) const {
  if (!(field_ == o.field_) || dim_ != o.dim_) return false;
  for (std::size_t t = 0; t < c_.size(); ++t) {
    for (std::size_t r = 0; r < dim_; ++r) {
      if (!(c_[t][r] == o.c_[t][r])) return false;
    }
  }
  return true;
}

static void check_same_algebra(const Element& x, const Element& y) {
  if (x.alg == y.alg) return;
  if (x.alg != nullptr && y.alg != nullptr && x.alg->same_as(*y.alg)) return;
  throw Error("elements belong to different algebras");
}

Vec bracket_vec(const LieAlgebra& l, const Vec& x, const Vec& y) {
  if (x.size() != l.dim() || y.size() != l.dim()) {
    throw DimensionMismatchError("bracket operand length");
  }
  Vec r = zero_vec(l.field(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (y[j].is_zero()) continue;
      vec_axpy(r, x[i] * y[j], l.structure(i, j));
    }
  }
  return r;
}

Element bracket(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.alg, bracket_vec(*x.alg, x.coords, y.coords)};
}

Matrix ad_of_vec(const LieAlgebra& l, const Vec& x) {
  Matrix m(l.field(), l.dim(), l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (x[i].is_zero()) continue;
    m = m + l.basis_ad(i).scale(x[i]);
  }
  return m;
}

Matrix ad_matrix(const Element& x) {
  return ad_of_vec(*x.alg, x.coords);
}

Subspace bracket_subspaces(const LieAlgebra& l, const Subspace& a,
                           const Subspace& b) {
  std::vector<Vec> prods;
  prods.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      prods.push_back(bracket_vec(l, a.basis().row(i), b.basis().row(j)));
    }
  }
  return Subspace::span_of(Matrix::from_vec_rows(l.field(), l.dim(), prods));
}

bool is_subalgebra_space(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_subspaces(l, s, s));
}

bool is_ideal_space(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_subspaces(l, l.full_space(), s));
}

SubStructure make_substructure(const LieAlgebra& l, Subspace s) {
  StructKind kind = StructKind::subspace;
  if (is_ideal_space(l, s)) {
    kind = StructKind::ideal;
  } else if (is_subalgebra_space(l, s)) {
    kind = StructKind::subalgebra;
  }
  return SubStructure{&l, std::move(s), kind};
}

SubStructure subalgebra_closure(const LieAlgebra& l, const Subspace& seed) {
  Subspace s = seed;
  for (;;) {
    Subspace next = subspace_sum(s, bracket_subspaces(l, s, s));
    if (next == s) break;
    s = next;
  }
  return SubStructure{&l, s, is_ideal_space(l, s) ? StructKind::ideal
                                                  : StructKind::subalgebra};
}

SubStructure ideal_closure(const LieAlgebra& l, const Subspace& seed) {
  Subspace s = seed;
  for (;;) {
    Subspace next = subspace_sum(s, bracket_subspaces(l, l.full_space(), s));
    if (next == s) break;
    s = next;
  }
  return SubStructure{&l, s, StructKind::ideal};
}

Quotient quotient(const LieAlgebra& l, const SubStructure& ideal) {
  if (ideal.kind != StructKind::ideal || !is_ideal_space(l, ideal.space)) {
    throw NotAnIdealError("quotient requires an ideal");
  }
  const Field f = l.field();
  const std::size_t n = l.dim();
  const Subspace& i = ideal.space;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : i.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> lift;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) lift.push_back(j);
  }
  const std::size_t m = lift.size();
  // projection: reduce mod the ideal, then read coordinates at free columns
  Matrix proj(f, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = zero_vec(f, n);
    e[j] = Scalar(f, 1);
    Vec red = i.reduce(std::move(e));
    for (std::size_t t = 0; t < m; ++t) proj.at(t, j) = red[lift[t]];
  }
  std::vector<Vec> c(m * m, zero_vec(f, m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      c[a * m + b] = proj.apply(l.structure(lift[a], lift[b]));
    }
  }
  LieAlgebra q = LieAlgebra::validated(l.name() + "_mod_i", f, m, std::move(c));
  return Quotient{std::move(q), std::move(proj), std::move(lift)};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatchError("direct sum over different fields");
  }
  const Field f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Vec> c(d * d, zero_vec(f, d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) c[i * d + j][r] = a.structure(i, j)[r];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < m; ++r) {
        c[(n + i) * d + (n + j)][n + r] = b.structure(i, j)[r];
      }
    }
  }
  return LieAlgebra::validated(a.name() + "+" + b.name(), f, d, std::move(c));
}

}  // namespace lieforge
