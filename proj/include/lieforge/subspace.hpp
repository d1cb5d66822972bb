#pragma once

#include <cstddef>
#include <vector>

#include "lieforge/matrix.hpp"

namespace lieforge {

struct RrefResult {
  Matrix r;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form (pivot entries 1, zeros above and below,
// pivot columns strictly increasing). The forward pass over Q is fraction-free
// (Bareiss one-step updates on primitive integer rows); the result is exact.
RrefResult rref(const Matrix& m);

// Subspace of F^n held in canonical RREF basis, so equality of subspaces is
// syntactic equality of bases.
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span_of(const Matrix& rows);

  Field field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }

  // Residual after eliminating pivot coordinates against the basis; zero
  // exactly when the vector lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains_vec(const Vec& v) const;
  bool contains(const Subspace& o) const;

  // Rows spanning {f : B f = 0}. A vector v lies in this subspace iff the
  // annihilator applied to v vanishes; used for membership constraints.
  Matrix annihilator() const;

  bool operator==(const Subspace& o) const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);  // {v : m v = 0}
Vec solve_unique(const Matrix& a, const Vec& b);  // a square invertible
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// {x : map x in target}; map is q x n, target lives in F^q.
Subspace preimage(const Matrix& map, const Subspace& target);

}  // namespace lieforge
