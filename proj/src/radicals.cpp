#include "lieforge/radicals.hpp"

#include "lieforge/errors.hpp"
#include "lieforge/parallel.hpp"
#include "lieforge/structure.hpp"

namespace lieforge {

namespace {

// One closure pass: grow the span of words in the generators by one
// left factor per round until the dimension stops moving.
Subspace envelope_closure(const LieAlgebra& l, bool parallel) {
  const Field f = l.field();
  const std::size_t n = l.dim();
  const std::size_t nn = n * n;

  std::vector<Matrix> gens;
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(l.basis_ad(i));
    flat.push_back(gens.back().flatten());
  }
  Subspace env = Subspace::span_of(Matrix::from_vec_rows(f, nn, flat));

  while (true) {
    const Matrix& basis = env.basis();
    const std::size_t rows = basis.rows();
    if (rows == 0) return env;

    std::vector<Vec> prods(rows * n, zero_vec(f, nn));
    auto work = [&](std::size_t idx) {
      const std::size_t b = idx / n;
      const std::size_t g = idx % n;
      Matrix m = Matrix::unflatten(f, n, n, basis.row(b));
      prods[idx] = (gens[g] * m).flatten();
    };
    if (parallel) {
      par::for_each_index(rows * n, work);
    } else {
      for (std::size_t idx = 0; idx < rows * n; ++idx) work(idx);
    }

    std::vector<Vec> all;
    for (std::size_t r = 0; r < rows; ++r) all.push_back(basis.row(r));
    for (auto& p : prods) all.push_back(std::move(p));
    Subspace next = Subspace::span_of(Matrix::from_vec_rows(f, nn, all));
    if (next == env) return env;
    env = std::move(next);
  }
}

// Ideal closure of h inside the subalgebra k, computed in ambient
// coordinates: I_0 = h, I_{m+1} = I_m + [k, I_m]. Stays inside k because k
// is a subalgebra.
Subspace ideal_closure_within(const LieAlgebra& l, const Subspace& k,
                              const Subspace& h) {
  Subspace cur = h;
  while (true) {
    Subspace next = subspace_sum(cur, bracket_subspaces(l, k, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

void require_char_zero(const LieAlgebra& l, const char* what) {
  if (l.field().characteristic() != 0) {
    throw WrongCharacteristicError(std::string(what) +
                                   " requires characteristic zero, got " +
                                   l.field().str());
  }
}

}  // namespace

Subspace envelope(const LieAlgebra& l) {
  return envelope_closure(l, true);
}

Subspace envelope_ref(const LieAlgebra& l) {
  return envelope_closure(l, false);
}

std::optional<std::size_t> ad_nilpotency_index(const LieAlgebra& l,
                                               const Vec& x) {
  Matrix p = Matrix::identity(l.field(), l.dim());
  const Matrix a = ad_of_vec(l, x);
  // a nilpotent implies a^dim = 0, so the cutoff is exact
  for (std::size_t k = 0; k <= l.dim(); ++k) {
    if (p.is_zero()) return k;
    p = p * a;
  }
  return std::nullopt;
}

std::optional<std::size_t> nilpotency_class_within(const LieAlgebra& l,
                                                   const Subspace& s) {
  if (!is_subalgebra_space(l, s)) {
    throw NotASubalgebraError("nilpotency_class_within needs a subalgebra");
  }
  Subspace cur = s;
  std::size_t c = 0;
  while (!cur.is_zero()) {
    Subspace next = bracket_subspaces(l, s, cur);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
    ++c;
  }
  return c;
}

Subspace fitting_trace_kernel(const LieAlgebra& l) {
  require_char_zero(l, "fitting_trace_kernel");
  const Field f = l.field();
  const std::size_t n = l.dim();
  if (n == 0) return l.zero_space();

  Subspace env = envelope(l);
  const Matrix& basis = env.basis();

  // row per trace condition, one extra row for tr(ad_x) itself
  Matrix cond(f, basis.rows() + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    cond.at(0, i) = l.basis_ad(i).trace();
  }
  for (std::size_t b = 0; b < basis.rows(); ++b) {
    Matrix u = Matrix::unflatten(f, n, n, basis.row(b));
    for (std::size_t i = 0; i < n; ++i) {
      cond.at(b + 1, i) = (l.basis_ad(i) * u).trace();
    }
  }
  return kernel(cond);
}

FittingCertificate fitting_certificate(const LieAlgebra& l) {
  require_char_zero(l, "fitting_certificate");
  Subspace fit = fitting_trace_kernel(l);

  if (!is_ideal_space(l, fit)) {
    throw InternalCheckError("fitting ideal candidate is not an ideal");
  }

  FittingCertificate cert{SubStructure{&l, fit, StructKind::ideal}, {}, 0};

  Subspace cur = fit;
  cert.central_series.push_back(cur);
  while (!cur.is_zero()) {
    Subspace next = bracket_subspaces(l, fit, cur);
    if (next == cur) {
      throw InternalCheckError("fitting ideal candidate is not nilpotent");
    }
    cur = std::move(next);
    cert.central_series.push_back(cur);
  }

  Quotient q = quotient(l, cert.ideal);
  Subspace qk = fitting_trace_kernel(q.algebra);
  const Subspace qfull = q.algebra.full_space();
  if (!bracket_subspaces(q.algebra, qfull, qk).is_zero()) {
    throw InternalCheckError("quotient trace kernel is not central");
  }
  Subspace derived = bracket_subspaces(q.algebra, qfull, qfull);
  cert.quotient_obstruction_dim = subspace_intersect(qk, derived).dim();
  if (cert.quotient_obstruction_dim != 0) {
    throw InternalCheckError(
        "quotient trace kernel meets the quotient derived algebra");
  }

  // no coordinate direction extends F to a strictly larger nilpotent ideal
  for (std::size_t u = 0; u < l.dim(); ++u) {
    Vec unit = zero_vec(l.field(), l.dim());
    unit[u] = Scalar(l.field(), 1);
    if (fit.contains_vec(unit)) continue;
    Matrix ext = fit.basis().vstack(
        Matrix::from_vec_rows(l.field(), l.dim(), {unit}));
    Subspace bigger = ideal_closure(l, Subspace::span_of(ext)).space;
    if (nilpotency_class_within(l, bigger).has_value()) {
      throw InternalCheckError(
          "a coordinate direction extends the fitting ideal to a larger "
          "nilpotent ideal");
    }
  }
  return cert;
}

SubStructure fitting_ideal(const LieAlgebra& l) {
  return fitting_certificate(l).ideal;
}

EngelReport engel_check(const LieAlgebra& l, const Vec& x,
                        const Subspace& fitting) {
  EngelReport r;
  r.ad_nilpotent = ad_nilpotency_index(l, x).has_value();
  Matrix row = Matrix::from_vec_rows(l.field(), l.dim(), {x});
  Subspace closure = ideal_closure(l, Subspace::span_of(row)).space;
  r.closure_nilpotent = nilpotency_class_within(l, closure).has_value();
  r.in_fitting = fitting.contains_vec(x);
  return r;
}

SubidealChain subideal_chain(const LieAlgebra& l, const Subspace& h) {
  if (!is_subalgebra_space(l, h)) {
    throw NotASubalgebraError("subideal_chain needs a subalgebra");
  }
  SubidealChain r;
  r.chain.push_back(l.full_space());
  while (true) {
    Subspace next = ideal_closure_within(l, r.chain.back(), h);
    if (next == r.chain.back()) break;
    r.chain.push_back(std::move(next));
  }
  r.is_subideal = r.chain.back() == h;
  return r;
}

bool is_subideal(const LieAlgebra& l, const Subspace& h) {
  return subideal_chain(l, h).is_subideal;
}

bool element_generates_subideal(const LieAlgebra& l, const Vec& x) {
  Matrix row = Matrix::from_vec_rows(l.field(), l.dim(), {x});
  return is_subideal(l, Subspace::span_of(row));
}

}  // namespace lieforge
