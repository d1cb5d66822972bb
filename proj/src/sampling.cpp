#include "lieforge/sampling.hpp"

#include <numeric>
#include <string>

#include "lieforge/constructions.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/structure.hpp"
#include "lieforge/subspace.hpp"

namespace lieforge {

namespace {

long uniform_long(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// p(a) with coefficients coeffs[0] + coeffs[1] a + ...
Matrix poly_of(const Matrix& a, const std::vector<Scalar>& coeffs) {
  Matrix acc(a.field(), a.rows(), a.cols());
  Matrix p = Matrix::identity(a.field(), a.rows());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) p = p * a;
    acc = acc + p.scale(coeffs[k]);
  }
  return acc;
}

}  // namespace

Scalar random_scalar(Rng& rng, Field f, long lo, long hi) {
  if (!f.is_rationals()) {
    return Scalar(f, uniform_long(rng, 0, static_cast<long>(
                                             f.characteristic() - 1)));
  }
  return Scalar(f, uniform_long(rng, lo, hi));
}

Vec random_vec(Rng& rng, Field f, std::size_t n) {
  Vec v = zero_vec(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng, f);
  return v;
}

Vec random_nonzero_vec(Rng& rng, Field f, std::size_t n) {
  if (n == 0) throw DimensionMismatchError("no nonzero vector in dimension 0");
  for (int tries = 0; tries < 64; ++tries) {
    Vec v = random_vec(rng, f, n);
    if (!vec_is_zero(v)) return v;
  }
  Vec v = zero_vec(f, n);
  v[0] = Scalar(f, 1);
  return v;
}

Subspace random_subspace(Rng& rng, Field f, std::size_t ambient,
                         std::size_t max_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < max_dim; ++i) {
    rows.push_back(random_vec(rng, f, ambient));
  }
  return Subspace::span_of(Matrix::from_vec_rows(f, ambient, rows));
}

Matrix random_strictly_upper(Rng& rng, Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = random_scalar(rng, f);
    }
  }
  if (n > 1) {
    // pin one superdiagonal entry so the matrix is never zero
    std::size_t k =
        static_cast<std::size_t>(uniform_long(rng, 0, static_cast<long>(n) - 2));
    if (m.at(k, k + 1).is_zero()) m.at(k, k + 1) = Scalar(f, 1);
  }
  return m;
}

std::vector<Matrix> random_commuting_nilpotents(Rng& rng, Field f,
                                                std::size_t n, std::size_t k) {
  Matrix base = random_strictly_upper(rng, f, n);
  std::size_t index = 1;
  Matrix p = base;
  while (!p.is_zero()) {
    p = p * base;
    ++index;
  }

  std::vector<Matrix> ops;
  for (std::size_t t = 0; t < k; ++t) {
    // valuation v makes the operator a unit multiple of base^v, so its own
    // nilpotency index is ceil(index / v)
    std::size_t v = index < 2
                        ? 1
                        : static_cast<std::size_t>(uniform_long(
                              rng, 1, static_cast<long>(index) - 1));
    std::vector<Scalar> coeffs(v + 1, Scalar(f));
    Scalar lead = random_scalar(rng, f);
    if (lead.is_zero()) lead = Scalar(f, 1);
    coeffs[v] = lead;
    for (std::size_t d = v + 1; d < index; ++d) {
      coeffs.push_back(random_scalar(rng, f));
    }
    ops.push_back(poly_of(base, coeffs));
  }
  return ops;
}

LieAlgebra random_solvable_algebra(Rng& rng, Field f,
                                   std::size_t target_dim) {
  if (target_dim == 0) throw DimensionMismatchError("target dimension is 0");
  std::size_t start = std::min<std::size_t>(
      target_dim, 1 + static_cast<std::size_t>(uniform_long(rng, 0, 1)));
  std::vector<Vec> zero_tensor(start * start, zero_vec(f, start));
  LieAlgebra l =
      LieAlgebra::validated("sample", f, start, std::move(zero_tensor));
  bool abelian = true;

  while (l.dim() < target_dim) {
    if (abelian) {
      std::size_t m = std::min<std::size_t>(
          target_dim - l.dim(),
          1 + static_cast<std::size_t>(uniform_long(rng, 0, 2)));
      Matrix base(f, m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
          base.at(i, j) = random_scalar(rng, f);
        }
      }
      std::vector<Matrix> phi;
      for (std::size_t g = 0; g < l.dim(); ++g) {
        std::vector<Scalar> coeffs;
        for (std::size_t d = 0; d < m; ++d) {
          coeffs.push_back(random_scalar(rng, f));
        }
        phi.push_back(poly_of(base, coeffs));
      }
      Representation rep =
          Representation::validated("sample-act", l, std::move(phi));
      l = semidirect_product(l, rep);
      abelian = false;
      for (std::size_t i = 0; i < l.dim() && abelian; ++i) {
        for (std::size_t j = i + 1; j < l.dim() && abelian; ++j) {
          abelian = vec_is_zero(l.structure(i, j));
        }
      }
    } else {
      // act on a quotient of the adjoint module whose size keeps the total
      // dimension close to the target
      Series der = derived_series(l);
      const Subspace* best = nullptr;
      std::size_t want = target_dim - l.dim();
      for (const Subspace& ideal : der.terms) {
        std::size_t m = l.dim() - ideal.dim();
        if (m == 0) continue;
        if (!best) {
          best = &ideal;
          continue;
        }
        std::size_t bm = l.dim() - best->dim();
        bool b_reaches = bm >= want, m_reaches = m >= want;
        if ((m_reaches && (!b_reaches || m < bm)) ||
            (!m_reaches && !b_reaches && m > bm)) {
          best = &ideal;
        }
      }
      if (!best || best->is_zero()) {
        l = semidirect_product(l, adjoint_representation(l));
      } else {
        Quotient q = quotient(l, make_substructure(l, *best));
        std::vector<Matrix> phi;
        for (std::size_t i = 0; i < l.dim(); ++i) {
          phi.push_back(ad_of_vec(
              q.algebra, q.projection.apply(l.basis_element(i).coords)));
        }
        Representation rep =
            Representation::validated("quot-ad", l, std::move(phi));
        l = semidirect_product(l, rep);
      }
    }
  }
  return l;
}

namespace {

std::vector<std::uint64_t> strides_of(const std::vector<std::uint32_t>& f) {
  std::vector<std::uint64_t> s(f.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s[i] = acc;
    acc *= f[i];
  }
  return s;
}

// Random element whose additive order divides g: each component is a random
// multiple of m_k / gcd(m_k, g).
std::uint32_t random_bounded_order(Rng& rng,
                                   const std::vector<std::uint32_t>& factors,
                                   const std::vector<std::uint64_t>& strides,
                                   std::uint64_t g) {
  std::uint64_t e = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::uint64_t d = std::gcd<std::uint64_t>(factors[k], g);
    std::uint64_t step = factors[k] / d;
    std::uint64_t mult = static_cast<std::uint64_t>(
        uniform_long(rng, 0, static_cast<long>(d) - 1));
    e += (step * mult % factors[k]) * strides[k];
  }
  return static_cast<std::uint32_t>(e);
}

std::uint32_t neg_code(const std::vector<std::uint32_t>& factors,
                       const std::vector<std::uint64_t>& strides,
                       std::uint32_t a) {
  std::uint64_t e = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::uint64_t ak = (a / strides[k]) % factors[k];
    e += ((factors[k] - ak) % factors[k]) * strides[k];
  }
  return static_cast<std::uint32_t>(e);
}

}  // namespace

FiniteLieRing random_ring(Rng& rng, std::vector<std::uint32_t> factors) {
  const std::size_t r = factors.size();
  auto strides = strides_of(factors);
  using Table = std::vector<std::vector<std::uint32_t>>;

  for (int attempt = 0; attempt < 64; ++attempt) {
    Table t(r, std::vector<std::uint32_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        if (uniform_long(rng, 0, 1) == 0) continue;  // keep tables sparse
        std::uint64_t g = std::gcd<std::uint64_t>(factors[i], factors[j]);
        t[i][j] = random_bounded_order(rng, factors, strides, g);
        t[j][i] = neg_code(factors, strides, t[i][j]);
      }
    }
    try {
      return FiniteLieRing::validated("random", factors, std::move(t));
    } catch (const ValidationError&) {
      // Jacobi rejected the table; resample
    }
  }

  // Fallback: brackets land in the last generator, so every double bracket
  // vanishes and Jacobi holds identically.
  Table t(r, std::vector<std::uint32_t>(r, 0));
  if (r >= 3) {
    const std::size_t last = r - 1;
    for (std::size_t i = 0; i + 1 < last; ++i) {
      for (std::size_t j = i + 1; j < last; ++j) {
        std::uint64_t g = std::gcd<std::uint64_t>(
            std::gcd<std::uint64_t>(factors[i], factors[j]), factors[last]);
        std::uint64_t d = std::gcd<std::uint64_t>(factors[last], g);
        std::uint64_t step = factors[last] / d;
        std::uint64_t mult = static_cast<std::uint64_t>(
            uniform_long(rng, 0, static_cast<long>(d) - 1));
        t[i][j] = static_cast<std::uint32_t>(step * mult % factors[last] *
                                             strides[last]);
        t[j][i] = neg_code(factors, strides, t[i][j]);
      }
    }
  }
  return FiniteLieRing::validated("random", factors, std::move(t));
}

}  // namespace lieforge
