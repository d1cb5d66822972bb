#pragma once

// Hand-built reference algebras used across the test binaries. Built directly
// from structure constants so tests do not depend on the parser or corpus.

#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace fixtures {

using namespace lieforge;

inline std::vector<Vec> empty_tensor(Field f, std::size_t n) {
  return std::vector<Vec>(n * n, zero_vec(f, n));
}

inline void set_bracket(std::vector<Vec>& c, Field f, std::size_t n,
                        std::size_t i, std::size_t j,
                        const std::vector<std::pair<std::size_t, long>>& sum) {
  Vec v = zero_vec(f, n);
  for (const auto& [k, coef] : sum) v[k] = Scalar(f, coef);
  c[i * n + j] = v;
  c[j * n + i] = vec_neg(v);
}

// Heisenberg: [e1,e2] = e3
inline LieAlgebra h3(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 3);
  set_bracket(c, f, 3, 0, 1, {{2, 1}});
  return LieAlgebra::validated("h3", f, 3, std::move(c));
}

// abelian of dimension n
inline LieAlgebra abelian(std::size_t n, Field f = Field::rationals()) {
  return LieAlgebra::validated("abelian" + std::to_string(n), f, n,
                               empty_tensor(f, n));
}

// affine line: [t,y] = y
inline LieAlgebra aff1(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 2);
  set_bracket(c, f, 2, 0, 1, {{1, 1}});
  return LieAlgebra::validated("aff1", f, 2, std::move(c));
}

// sl2 in the (h,e,f) basis: [h,e]=2e, [h,f]=-2f, [e,f]=h
inline LieAlgebra sl2(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 3);
  set_bracket(c, f, 3, 0, 1, {{1, 2}});
  set_bracket(c, f, 3, 0, 2, {{2, -2}});
  set_bracket(c, f, 3, 1, 2, {{0, 1}});
  return LieAlgebra::validated("sl2", f, 3, std::move(c));
}

// Borel of sl2: [h,e] = 2e
inline LieAlgebra borel_sl2(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 2);
  set_bracket(c, f, 2, 0, 1, {{1, 2}});
  return LieAlgebra::validated("borel_sl2", f, 2, std::move(c));
}

// filiform of dimension 4: [e1,e2]=e3, [e1,e3]=e4
inline LieAlgebra filiform4(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 4);
  set_bracket(c, f, 4, 0, 1, {{2, 1}});
  set_bracket(c, f, 4, 0, 2, {{3, 1}});
  return LieAlgebra::validated("filiform4", f, 4, std::move(c));
}

// h3 plus a central line
inline LieAlgebra h3_plus_line(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 4);
  set_bracket(c, f, 4, 0, 1, {{2, 1}});
  return LieAlgebra::validated("h3q", f, 4, std::move(c));
}

// Rotation-block regression algebra on (t,x1,x2,u,v):
// [t,x1]=x2, [t,x2]=-x1, [t,u]=u, [t,v]=-v. Killing form has K(t,t)=0 even
// though t is not in the Fitting ideal; guards against trace-form shortcuts.
inline LieAlgebra rot5(Field f = Field::rationals()) {
  auto c = empty_tensor(f, 5);
  set_bracket(c, f, 5, 0, 1, {{2, 1}});
  set_bracket(c, f, 5, 0, 2, {{1, -1}});
  set_bracket(c, f, 5, 0, 3, {{3, 1}});
  set_bracket(c, f, 5, 0, 4, {{4, -1}});
  return LieAlgebra::validated("rot5", f, 5, std::move(c));
}

inline Subspace span_rows(const LieAlgebra& l,
                          const std::vector<std::vector<long>>& rows) {
  return Subspace::span_of(Matrix::from_rows(l.field(), rows, l.dim()));
}

inline Vec coords(const LieAlgebra& l, const std::vector<long>& v) {
  Vec r = zero_vec(l.field(), l.dim());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Scalar(l.field(), v[i]);
  return r;
}

}  // namespace fixtures
