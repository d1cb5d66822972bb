#include "lieforge/structure.hpp"

#include "lieforge/parallel.hpp"

namespace lieforge {

namespace {

// Rows expressing "[x, v] lies in w" as linear conditions on x.
Matrix containment_conditions(const LieAlgebra& l, const Vec& v,
                              const Subspace& w) {
  return w.annihilator() * ad_of_vec(l, v);
}

Subspace kernel_of_conditions(const LieAlgebra& l,
                              const std::vector<Matrix>& blocks) {
  return kernel(Matrix::stack(l.field(), l.dim(), blocks));
}

SubStructure classify(const LieAlgebra& l, Subspace s) {
  return make_substructure(l, std::move(s));
}

}  // namespace

SubStructure centralizer(const LieAlgebra& l, const std::vector<Element>& xs) {
  std::vector<Vec> rows;
  rows.reserve(xs.size());
  for (const Element& x : xs) {
    if (x.alg != &l && !x.alg->same_as(l)) {
      throw Error("centralizer: element from a different algebra");
    }
    rows.push_back(x.coords);
  }
  return centralizer(
      l, Subspace::span_of(Matrix::from_vec_rows(l.field(), l.dim(), rows)));
}

SubStructure centralizer(const LieAlgebra& l, const Subspace& s) {
  std::vector<Matrix> blocks;
  blocks.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    blocks.push_back(ad_of_vec(l, s.basis().row(i)));
  }
  return classify(l, kernel_of_conditions(l, blocks));
}

Subspace center(const LieAlgebra& l) {
  return centralizer(l, l.full_space()).space;
}

SubStructure normalizer(const LieAlgebra& l, const Subspace& a) {
  std::vector<Matrix> blocks;
  blocks.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    blocks.push_back(containment_conditions(l, a.basis().row(i), a));
  }
  SubStructure n = classify(l, kernel_of_conditions(l, blocks));
  if (n.kind == StructKind::subspace) {
    throw InternalCheckError("normalizer is not a subalgebra");
  }
  return n;
}

std::vector<Subspace> iterated_centralizer_tower(const LieAlgebra& l,
                                                 const SubStructure& a,
                                                 const SubStructure& h,
                                                 std::size_t n) {
  if (!a.space.contains(h.space)) {
    throw Error("iterated centralizer: h is not contained in a");
  }
  if (!is_subalgebra_space(l, a.space)) {
    throw NotASubalgebraError("iterated centralizer: a is not a subalgebra");
  }
  if (!h.space.contains(bracket_subspaces(l, a.space, h.space))) {
    throw NotAnIdealError("iterated centralizer: h is not an ideal of a");
  }
  std::vector<Subspace> terms{h.space};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Matrix> blocks;
    // [x, a] <= C^{k-1}
    for (std::size_t i = 0; i < a.space.dim(); ++i) {
      blocks.push_back(
          containment_conditions(l, a.space.basis().row(i), terms[k - 1]));
    }
    // x normalizes C^1..C^{k-1}
    for (std::size_t t = 1; t < k; ++t) {
      for (std::size_t i = 0; i < terms[t].dim(); ++i) {
        blocks.push_back(
            containment_conditions(l, terms[t].basis().row(i), terms[t]));
      }
    }
    terms.push_back(kernel_of_conditions(l, blocks));
  }
  return terms;
}

SubStructure iterated_centralizer(const LieAlgebra& l, const SubStructure& a,
                                  const SubStructure& h, std::size_t n) {
  return classify(l, iterated_centralizer_tower(l, a, h, n).back());
}

SubStructure iterated_centralizer_of_ideal(const LieAlgebra& l,
                                           const SubStructure& i,
                                           std::size_t n) {
  if (!is_ideal_space(l, i.space)) {
    throw NotAnIdealError("kernel-formula centralizer requires an ideal");
  }
  if (n == 0) return SubStructure{&l, l.zero_space(), StructKind::ideal};
  const Field f = l.field();
  const std::size_t d = l.dim();
  std::vector<Matrix> gens;
  gens.reserve(i.space.dim());
  for (std::size_t t = 0; t < i.space.dim(); ++t) {
    gens.push_back(ad_of_vec(l, i.space.basis().row(t)));
  }
  // span of exactly-k-fold products, grown one ad factor per round
  std::vector<Matrix> products = gens;
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Vec> flat(gens.size() * products.size());
    par::for_each_index(flat.size(), [&](std::size_t idx) {
      const Matrix& g = gens[idx / products.size()];
      const Matrix& m = products[idx % products.size()];
      flat[idx] = (g * m).flatten();
    });
    Subspace span =
        Subspace::span_of(Matrix::from_vec_rows(f, d * d, flat));
    products.clear();
    for (std::size_t r = 0; r < span.dim(); ++r) {
      products.push_back(Matrix::unflatten(f, d, d, span.basis().row(r)));
    }
  }
  return classify(l, kernel_of_conditions(l, products));
}

namespace {

Series descending_series(const LieAlgebra& l, SeriesKind kind) {
  Series s{kind, {l.full_space()}, false};
  for (;;) {
    const Subspace& prev = s.terms.back();
    Subspace next = (kind == SeriesKind::lower_central)
                        ? bracket_subspaces(l, l.full_space(), prev)
                        : bracket_subspaces(l, prev, prev);
    if (next == prev) {
      s.stabilized = true;
      break;
    }
    s.terms.push_back(std::move(next));
    if (s.terms.back().is_zero()) {
      s.stabilized = true;
      break;
    }
  }
  return s;
}

}  // namespace

Series lower_central_series(const LieAlgebra& l) {
  return descending_series(l, SeriesKind::lower_central);
}

Series derived_series(const LieAlgebra& l) {
  return descending_series(l, SeriesKind::derived);
}

Series upper_central_series(const LieAlgebra& l) {
  Series s{SeriesKind::upper_central, {l.zero_space()}, false};
  for (;;) {
    const Subspace& prev = s.terms.back();
    Quotient q = quotient(l, SubStructure{&l, prev, StructKind::ideal});
    Subspace next = preimage(q.projection, center(q.algebra));
    if (next == prev) {
      s.stabilized = true;
      break;
    }
    s.terms.push_back(std::move(next));
    if (s.terms.back().is_full()) {
      s.stabilized = true;
      break;
    }
  }
  return s;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
  Series s = lower_central_series(l);
  if (!s.reaches_zero()) return std::nullopt;
  return s.terms.size() - 1;
}

std::optional<std::size_t> solvable_length(const LieAlgebra& l) {
  Series s = derived_series(l);
  if (!s.reaches_zero()) return std::nullopt;
  return s.terms.size() - 1;
}

std::vector<Element> centralizer_finite_witness(const LieAlgebra& l,
                                                const Subspace& s) {
  const Subspace target = centralizer(l, s).space;
  Subspace cur = l.full_space();
  std::vector<Element> witness;
  while (!(cur == target)) {
    std::size_t best = s.dim();
    std::size_t best_dim = cur.dim();
    std::vector<Subspace> shrunk;
    shrunk.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      shrunk.push_back(subspace_intersect(
          cur, kernel(ad_of_vec(l, s.basis().row(i)))));
      if (shrunk[i].dim() < best_dim) {
        best = i;
        best_dim = shrunk[i].dim();
      }
    }
    if (best == s.dim()) {
      throw InternalCheckError("witness search stalled above the target");
    }
    witness.push_back(l.element(s.basis().row(best)));
    cur = shrunk[best];
  }
  return witness;
}

LemmaReport check_lemma_cent_it_1(const LieAlgebra& l, const SubStructure& h,
                                  std::size_t bound) {
  if (!is_subalgebra_space(l, h.space)) {
    throw NotASubalgebraError("lemma check requires a subalgebra");
  }
  SubStructure zero{&l, l.zero_space(), StructKind::ideal};
  std::vector<Subspace> cents = iterated_centralizer_tower(l, h, zero, bound);
  std::vector<Subspace> lower{h.space};
  for (std::size_t i = 1; i < bound; ++i) {
    lower.push_back(bracket_subspaces(l, h.space, lower.back()));
  }
  LemmaReport rep;
  for (std::size_t j = 1; j <= bound; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Subspace lhs = bracket_subspaces(l, lower[i], cents[j]);
      if (!cents[j - i - 1].contains(lhs)) {
        rep.passed = false;
        rep.witnesses.push_back("[H^" + std::to_string(i) + ", C^" +
                                std::to_string(j) + "(H)] exceeds C^" +
                                std::to_string(j - i - 1) + "(H)");
      }
    }
  }
  return rep;
}

LemmaReport check_lemma_cent_it_2(const LieAlgebra& l, const SubStructure& k,
                                  const SubStructure& h, std::size_t j) {
  if (!is_subalgebra_space(l, k.space) || !is_subalgebra_space(l, h.space)) {
    throw NotASubalgebraError("lemma check requires subalgebras");
  }
  LemmaReport rep;
  if (!h.space.contains(k.space)) {
    rep.applicable = false;
    return rep;
  }
  std::vector<Subspace> kp{k.space};
  std::vector<Subspace> hp{h.space};
  for (std::size_t i = 1; i < j; ++i) {
    kp.push_back(bracket_subspaces(l, k.space, kp.back()));
    hp.push_back(bracket_subspaces(l, h.space, hp.back()));
  }
  for (std::size_t i = 0; i < j; ++i) {
    if (!(centralizer(l, kp[i]).space == centralizer(l, hp[i]).space)) {
      rep.applicable = false;
      return rep;
    }
  }
  SubStructure zero{&l, l.zero_space(), StructKind::ideal};
  Subspace ck = iterated_centralizer(l, k, zero, j).space;
  Subspace ch = iterated_centralizer(l, h, zero, j).space;
  if (!(ck == ch)) {
    rep.passed = false;
    rep.witnesses.push_back("C^" + std::to_string(j) + "(K) has dim " +
                            std::to_string(ck.dim()) + " but C^" +
                            std::to_string(j) + "(H) has dim " +
                            std::to_string(ch.dim()));
  }
  return rep;
}

LemmaReport check_three_subgroups(const LieAlgebra& l, const Subspace& x,
                                  const Subspace& y, const Subspace& z,
                                  const Subspace& h) {
  LemmaReport rep;
  bool hyp1 = h.contains(bracket_subspaces(l, bracket_subspaces(l, x, y), z));
  bool hyp2 = h.contains(bracket_subspaces(l, bracket_subspaces(l, y, z), x));
  if (!hyp1 || !hyp2) {
    rep.applicable = false;
    return rep;
  }
  if (!h.contains(bracket_subspaces(l, bracket_subspaces(l, z, x), y))) {
    rep.passed = false;
    rep.witnesses.push_back("[[Z,X],Y] not contained in H");
  }
  return rep;
}

}  // namespace lieforge
