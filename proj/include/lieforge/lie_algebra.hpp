#pragma once

#include <string>
#include <vector>

#include "lieforge/subspace.hpp"

namespace lieforge {

class LieAlgebra;

struct Element {
  const LieAlgebra* alg;
  Vec coords;
};

enum class StructKind { subspace, subalgebra, ideal };

struct SubStructure {
  const LieAlgebra* alg;
  Subspace space;
  StructKind kind;
};

// Finite-dimensional Lie algebra given by its structure-constant tensor
// c[i][j] = coordinates of [e_i, e_j]. Construction validates alternation,
// antisymmetry and the Jacobi identity; basis ad matrices are precomputed.
class LieAlgebra {
 public:
  static LieAlgebra validated(std::string name, Field f, std::size_t dim,
                              std::vector<Vec> c);

  const std::string& name() const { return name_; }
  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Vec& structure(std::size_t i, std::size_t j) const {
    return c_[i * dim_ + j];
  }
  const Matrix& basis_ad(std::size_t i) const { return ad_[i]; }

  Element element(Vec coords) const;
  Element basis_element(std::size_t i) const;
  Element zero_element() const;
  Subspace full_space() const { return Subspace::full(field_, dim_); }
  Subspace zero_space() const { return Subspace::zero(field_, dim_); }

  bool same_as(const LieAlgebra& o) const;  // structural, ignores the name

 private:
  LieAlgebra(std::string name, Field f, std::size_t dim, std::vector<Vec> c);

  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<Vec> c_;
  std::vector<Matrix> ad_;
};

Vec bracket_vec(const LieAlgebra& l, const Vec& x, const Vec& y);
Element bracket(const Element& x, const Element& y);
Matrix ad_of_vec(const LieAlgebra& l, const Vec& x);
Matrix ad_matrix(const Element& x);

// span{[u, v] : u in a, v in b}; basis pairs suffice by bilinearity.
Subspace bracket_subspaces(const LieAlgebra& l, const Subspace& a,
                           const Subspace& b);

bool is_subalgebra_space(const LieAlgebra& l, const Subspace& s);
bool is_ideal_space(const LieAlgebra& l, const Subspace& s);

// Classifies s as ideal / subalgebra / bare subspace by testing containments.
SubStructure make_substructure(const LieAlgebra& l, Subspace s);

SubStructure subalgebra_closure(const LieAlgebra& l, const Subspace& seed);
SubStructure ideal_closure(const LieAlgebra& l, const Subspace& seed);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                      // dim(L/I) x dim(L)
  std::vector<std::size_t> lift_columns;  // standard lift: e_{q_t} per coord
};

// Quotient by a verified ideal, with the induced projection. The quotient
// bracket is re-validated on construction.
Quotient quotient(const LieAlgebra& l, const SubStructure& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lieforge
