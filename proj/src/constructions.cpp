#include "lieforge/constructions.hpp"

#include "lieforge/errors.hpp"
#include "lieforge/radicals.hpp"

namespace lieforge {

namespace {

std::optional<std::size_t> matrix_nilpotency_index(const Matrix& a) {
  Matrix p = Matrix::identity(a.field(), a.rows());
  for (std::size_t k = 0; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

mpz_class factorial(std::size_t k) {
  mpz_class r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

bool is_bracket_preserving(const LieAlgebra& l, const Matrix& a) {
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vec lhs = a.apply(l.structure(i, j));
      Vec rhs = bracket_vec(l, a.apply(l.basis_element(i).coords),
                            a.apply(l.basis_element(j).coords));
      if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
    }
  }
  return true;
}

}  // namespace

Representation Representation::validated(const std::string& name,
                                         const LieAlgebra& g,
                                         std::vector<Matrix> phi) {
  if (phi.size() != g.dim()) {
    throw InvalidRepresentationError("need one matrix per basis vector");
  }
  std::size_t m = phi.empty() ? 0 : phi[0].rows();
  for (const Matrix& p : phi) {
    if (p.rows() != m || p.cols() != m) {
      throw InvalidRepresentationError("module matrices must be square and equal-sized");
    }
    if (!(p.field() == g.field())) {
      throw FieldMismatchError("module matrices must live over the algebra field");
    }
  }
  Representation rep{name, g.field(), g.dim(), m, std::move(phi)};
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs = rep.of_vec(g.structure(i, j));
      Matrix rhs = rep.phi[i] * rep.phi[j] - rep.phi[j] * rep.phi[i];
      if (!(lhs == rhs)) {
        throw InvalidRepresentationError(
            "phi([e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
            "]) differs from the commutator of the images");
      }
    }
  }
  return rep;
}

Matrix Representation::of_vec(const Vec& x) const {
  if (x.size() != algebra_dim) {
    throw DimensionMismatchError("representation applied to a wrong-sized vector");
  }
  Matrix r(field, module_dim, module_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i) {
    r = r + phi[i].scale(x[i]);
  }
  return r;
}

Representation adjoint_representation(const LieAlgebra& l) {
  std::vector<Matrix> phi;
  for (std::size_t i = 0; i < l.dim(); ++i) phi.push_back(l.basis_ad(i));
  return Representation::validated("ad " + l.name(), l, std::move(phi));
}

LieAlgebra semidirect_product(const LieAlgebra& g, const Representation& rep) {
  if (!(rep.field == g.field()) || rep.algebra_dim != g.dim()) {
    throw DimensionMismatchError("representation does not match the algebra");
  }
  const Field f = g.field();
  const std::size_t n = g.dim();
  const std::size_t m = rep.module_dim;
  const std::size_t d = n + m;

  std::vector<Vec> c(d * d, zero_vec(f, d));
  auto put = [&](std::size_t i, std::size_t j, const Vec& v) {
    c[i * d + j] = v;
    c[j * d + i] = vec_neg(v);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec gpart = g.structure(i, j);
      Vec v = zero_vec(f, d);
      for (std::size_t k = 0; k < n; ++k) v[k] = gpart[k];
      put(i, j, v);
    }
    for (std::size_t j = 0; j < m; ++j) {
      Vec v = zero_vec(f, d);
      for (std::size_t k = 0; k < m; ++k) v[n + k] = rep.phi[i].at(k, j);
      put(i, n + j, v);
    }
  }
  return LieAlgebra::validated(g.name() + "|x" + rep.name, f, d, std::move(c));
}

InnerAutomorphism exp_ad(const LieAlgebra& l, const Vec& x) {
  const Field f = l.field();
  Matrix a = ad_of_vec(l, x);
  auto index = matrix_nilpotency_index(a);
  if (!index) throw NotAdNilpotentError("exp needs an ad-nilpotent element");

  const std::size_t p = static_cast<std::size_t>(f.characteristic());
  Matrix sum = Matrix::identity(f, l.dim());
  Matrix pow = Matrix::identity(f, l.dim());
  for (std::size_t k = 1; k < *index; ++k) {
    if (p != 0 && k >= p) {
      throw WrongCharacteristicError("exp(ad) needs 1/" + std::to_string(k) +
                                     "! which vanishes over " + f.str());
    }
    pow = pow * a;
    sum = sum + pow.scale(Scalar::from_mpq(f, mpq_class(mpz_class(1), factorial(k))));
  }

  if (!is_bracket_preserving(l, sum)) {
    if (p != 0) {
      throw WrongCharacteristicError(
          "exp(ad x) is not an automorphism over " + f.str());
    }
    throw InternalCheckError("exp(ad x) failed the automorphism check");
  }
  return InnerAutomorphism{std::move(sum), {x}};
}

InnerAutomorphism compose(const InnerAutomorphism& after,
                          const InnerAutomorphism& before) {
  InnerAutomorphism r{after.matrix * before.matrix, before.word};
  r.word.insert(r.word.end(), after.word.begin(), after.word.end());
  return r;
}

Vec image(const InnerAutomorphism& aut, const Vec& v) {
  return aut.matrix.apply(v);
}

Subspace image(const InnerAutomorphism& aut, const Subspace& s) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    rows.push_back(aut.matrix.apply(s.basis().row(i)));
  }
  return Subspace::span_of(
      Matrix::from_vec_rows(aut.matrix.field(), s.ambient(), rows));
}

LemmaReport check_normalization_lemma(const LieAlgebra& l,
                                      const SubStructure& a,
                                      std::size_t bound) {
  LemmaReport rep;
  SubStructure zero{&l, l.zero_space(), StructKind::ideal};
  auto tower = iterated_centralizer_tower(l, a, zero, bound);

  std::size_t used = 0;
  for (std::size_t i = 0; i < a.space.dim(); ++i) {
    Vec x = a.space.basis().row(i);
    if (!ad_nilpotency_index(l, x)) continue;
    ++used;
    InnerAutomorphism aut = exp_ad(l, x);
    if (!(image(aut, a.space) == a.space)) {
      rep.passed = false;
      rep.witnesses.push_back("exp(ad " + vec_str(x) + ") moves the subalgebra");
    }
    for (std::size_t n = 0; n < tower.size(); ++n) {
      if (!(image(aut, tower[n]) == tower[n])) {
        rep.passed = false;
        rep.witnesses.push_back("exp(ad " + vec_str(x) + ") moves C^" +
                                std::to_string(n) + " of the subalgebra");
      }
    }
  }
  rep.applicable = used > 0;
  return rep;
}

BoundExperimentResult semidirect_bound_experiment(
    const std::vector<Matrix>& ops) {
  if (ops.empty()) {
    throw DimensionMismatchError("bound experiment needs at least one operator");
  }
  const Field f = ops[0].field();
  const std::size_t dim = ops[0].rows();

  BoundExperimentResult r;
  r.m = 1;
  for (const Matrix& op : ops) {
    if (op.rows() != dim || op.cols() != dim || !(op.field() == f)) {
      throw DimensionMismatchError("operators must be square and equal-sized");
    }
    auto idx = matrix_nilpotency_index(op);
    if (!idx) throw NotAdNilpotentError("bound experiment needs nilpotent operators");
    r.indices.push_back(*idx);
    r.m += *idx - 1;
  }

  r.commuting = true;
  for (std::size_t i = 0; i < ops.size() && r.commuting; ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!(ops[i] * ops[j] == ops[j] * ops[i])) {
        r.commuting = false;
        break;
      }
    }
  }

  r.all_length_m_zero = true;
  std::vector<std::size_t> word;
  auto dfs = [&](auto&& self, const Matrix& prefix) -> void {
    if (!prefix.is_zero() && word.size() > r.longest_nonzero) {
      r.longest_nonzero = word.size();
      r.longest_word = word;
      if (word.size() >= r.m) r.all_length_m_zero = false;
    }
    if (word.size() == r.m || prefix.is_zero()) return;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      word.push_back(i);
      self(self, prefix * ops[i]);
      word.pop_back();
    }
  };
  dfs(dfs, Matrix::identity(f, dim));
  return r;
}

BoundExperimentResult semidirect_bound_experiment(const Representation& rep,
                                                  const std::vector<Vec>& xs) {
  std::vector<Matrix> ops;
  for (const Vec& x : xs) ops.push_back(rep.of_vec(x));
  return semidirect_bound_experiment(ops);
}

Vec hartley_coefficients(Field f, std::size_t k) {
  if (f.characteristic() != 0) {
    throw WrongCharacteristicError("hartley coefficients need characteristic zero");
  }
  if (k == 0) throw DimensionMismatchError("hartley coefficients need k >= 1");
  Matrix v(f, k, k);
  Vec b = zero_vec(f, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class node(static_cast<unsigned long>(j + 1));
      mpz_class powed;
      mpz_pow_ui(powed.get_mpz_t(), node.get_mpz_t(),
                 static_cast<unsigned long>(i));
      v.at(i, j) = Scalar::from_mpq(f, mpq_class(powed));
    }
    if (i == 1) b[i] = Scalar(f, 1);
  }
  return solve_unique(v, b);
}

LemmaReport check_hartley_identity(const LieAlgebra& l, const Vec& x,
                                   std::size_t k) {
  LemmaReport rep;
  auto idx = ad_nilpotency_index(l, x);
  if (!idx || *idx > k) {
    rep.applicable = false;
    return rep;
  }
  Vec a = hartley_coefficients(l.field(), k);
  Matrix sum(l.field(), l.dim(), l.dim());
  for (std::size_t j = 0; j < k; ++j) {
    Vec jx = vec_scale(Scalar(l.field(), static_cast<long>(j + 1)), x);
    sum = sum + exp_ad(l, jx).matrix.scale(a[j]);
  }
  if (!(sum == ad_of_vec(l, x))) {
    rep.passed = false;
    rep.witnesses.push_back("sum_j a_j exp(j ad x) differs from ad x");
  }
  return rep;
}

}  // namespace lieforge
