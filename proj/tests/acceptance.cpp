// Acceptance gate: ten end-to-end criteria, one verdict line each. All
// arithmetic is exact (rationals over Q, residues over F_p, integers in the
// finite rings), so every comparison below is an equality with zero
// tolerance; the pinned quantities are the sample counts and iteration
// bounds stated inline. Exits 0 only when every criterion passes.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "lieforge/checks.hpp"
#include "lieforge/constructions.hpp"
#include "lieforge/corpus.hpp"
#include "lieforge/errors.hpp"
#include "lieforge/finring.hpp"
#include "lieforge/parser.hpp"
#include "lieforge/radicals.hpp"
#include "lieforge/sampling.hpp"
#include "lieforge/structure.hpp"

using namespace lieforge;

namespace {

struct Outcome {
  bool pass = true;
  std::uint64_t instances = 0;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

std::vector<LieAlgebra> corpus_algebras(bool rational_only) {
  std::vector<LieAlgebra> out;
  for (const CorpusEntry& e : corpus_entries()) {
    DefinitionFile df = parse_definition(e.definition);
    if (!df.is_algebra()) continue;
    if (rational_only && !df.algebra->field().is_rationals()) continue;
    out.push_back(*df.algebra);
  }
  return out;
}

std::vector<FiniteLieRing> corpus_rings() {
  std::vector<FiniteLieRing> out;
  for (const CorpusEntry& e : corpus_entries()) {
    DefinitionFile df = parse_definition(e.definition);
    if (!df.is_algebra()) out.push_back(*df.ring);
  }
  return out;
}

Subspace coordinate_line(const LieAlgebra& l, std::size_t i) {
  Vec unit = zero_vec(l.field(), l.dim());
  unit[i] = Scalar(l.field(), 1);
  return Subspace::span_of(Matrix::from_vec_rows(l.field(), l.dim(), {unit}));
}

// Ideals worth sweeping: every series term plus the ideal closure of every
// coordinate line.
std::vector<Subspace> computed_ideals(const LieAlgebra& l) {
  std::vector<Subspace> out;
  auto push = [&](const Subspace& s) {
    for (const Subspace& t : out) {
      if (t == s) return;
    }
    out.push_back(s);
  };
  for (const Subspace& s : lower_central_series(l).terms) push(s);
  for (const Subspace& s : derived_series(l).terms) push(s);
  for (const Subspace& s : upper_central_series(l).terms) push(s);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    push(ideal_closure(l, coordinate_line(l, i)).space);
  }
  return out;
}

SubStructure random_subalgebra(Rng& rng, const LieAlgebra& l) {
  return subalgebra_closure(
      l, random_subspace(rng, l.field(), l.dim(), 1 + rng() % l.dim()));
}

// 1. The recursive iterated centralizer and the kernel formula agree on
//    every computed ideal of every bundled algebra, for all n <= dim.
Outcome criterion_centralizer_routes() {
  Outcome o;
  for (const LieAlgebra& l : corpus_algebras(false)) {
    SubStructure zero{&l, l.zero_space(), StructKind::ideal};
    for (const Subspace& ideal : computed_ideals(l)) {
      SubStructure i{&l, ideal, StructKind::ideal};
      for (std::size_t n = 0; n <= l.dim(); ++n) {
        ++o.instances;
        if (!(iterated_centralizer(l, i, zero, n).space ==
              iterated_centralizer_of_ideal(l, i, n).space)) {
          o.fail(l.name() + ": routes disagree at n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail = "all computed ideals, n up to dim, exact equality";
  return o;
}

// 2. [H^i, C^j(H)] <= C^{j-i-1}(H) on 50 sampled subalgebras per bundled
//    algebra, all 0 <= i < j <= 4.
Outcome criterion_shift_containment() {
  Outcome o;
  Rng rng(1002);
  for (const LieAlgebra& l : corpus_algebras(false)) {
    for (int s = 0; s < 50; ++s) {
      SubStructure h = random_subalgebra(rng, l);
      LemmaReport rep = check_lemma_cent_it_1(l, h, 4);
      ++o.instances;
      if (!rep.applicable || !rep.passed) {
        o.fail(l.name() + ": containment fails on sample " +
               std::to_string(s));
      }
    }
  }
  o.detail = "50 subalgebras per algebra, 0 <= i < j <= 4";
  return o;
}

// 3. Whenever K <= H have equal centralizers of their first j-1 powers, the
//    j-th iterated centralizers coincide: 100% of at least 200 sampled
//    premise-satisfying pairs.
Outcome criterion_tower_determined() {
  Outcome o;
  Rng rng(1003);
  std::vector<LieAlgebra> algebras = corpus_algebras(false);
  for (int round = 0; round < 8 && o.instances < 200; ++round) {
    for (const LieAlgebra& l : algebras) {
      Subspace z = center(l);
      for (int s = 0; s < 6; ++s) {
        SubStructure k = random_subalgebra(rng, l);
        Vec extra;
        if (s % 2 == 0 && !z.is_zero()) {
          extra = zero_vec(l.field(), l.dim());
          for (std::size_t i = 0; i < z.dim(); ++i) {
            vec_axpy(extra, random_scalar(rng, l.field()), z.basis().row(i));
          }
        } else {
          extra = random_vec(rng, l.field(), l.dim());
        }
        SubStructure h = subalgebra_closure(
            l, subspace_sum(k.space,
                            Subspace::span_of(Matrix::from_vec_rows(
                                l.field(), l.dim(), {extra}))));
        if (h.space == k.space) continue;
        for (std::size_t j = 1; j <= 3; ++j) {
          LemmaReport rep = check_lemma_cent_it_2(l, k, h, j);
          if (!rep.applicable) continue;
          ++o.instances;
          if (!rep.passed) {
            o.fail(l.name() + ": conclusion fails at j=" + std::to_string(j));
          }
        }
      }
    }
  }
  if (o.instances < 200) o.fail("fewer than 200 premise-satisfying pairs");
  o.detail = "strict pairs only, premise checked before counting";
  return o;
}

// 4. The fitting ideal certificate (ideal, nilpotent, clean quotient)
//    verifies on every rational bundled algebra and on 500 seeded random
//    solvable algebras; on the 5-dim rotation-block algebra the ideal is
//    exactly the span of the last four coordinates.
Outcome criterion_fitting_soundness() {
  Outcome o;
  try {
    for (const LieAlgebra& l : corpus_algebras(true)) {
      FittingCertificate c = fitting_certificate(l);
      ++o.instances;
      if (c.quotient_obstruction_dim != 0) o.fail(l.name() + ": obstruction");
      if (l.name() == "rot5") {
        Subspace expected = Subspace::span_of(Matrix::from_rows(
            l.field(),
            {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0},
             {0, 0, 0, 0, 1}},
            5));
        if (!(c.ideal.space == expected)) {
          o.fail("rot5 fitting ideal is not the expected span");
        }
      }
    }
    Rng rng(1004);
    for (int s = 0; s < 500; ++s) {
      LieAlgebra l =
          random_solvable_algebra(rng, Field::rationals(), 3 + s % 4);
      FittingCertificate c = fitting_certificate(l);
      ++o.instances;
      if (c.quotient_obstruction_dim != 0) {
        o.fail("random algebra " + std::to_string(s) + ": obstruction");
      }
    }
  } catch (const InternalCheckError& e) {
    o.fail(std::string("certificate verification threw: ") + e.what());
  }
  o.detail = "bundled rational algebras plus 500 random solvable";
  return o;
}

// 5. F(L) = L exactly when the lower central series reaches zero, on the
//    rational bundled algebras and 500 random solvable algebras.
Outcome criterion_engel_equivalence() {
  Outcome o;
  std::vector<LieAlgebra> pool = corpus_algebras(true);
  Rng rng(1005);
  for (int s = 0; s < 500; ++s) {
    pool.push_back(random_solvable_algebra(rng, Field::rationals(), 3 + s % 4));
  }
  for (const LieAlgebra& l : pool) {
    bool fitting_full = fitting_ideal(l).space.is_full();
    bool nilpotent = lower_central_series(l).reaches_zero();
    ++o.instances;
    if (fitting_full != nilpotent) {
      o.fail(l.name() + ": fitting-full and nilpotent disagree");
    }
  }
  o.detail = "zero discrepancies required";
  return o;
}

// 6. Baer radical equals the fitting ideal: every basis vector of F
//    generates a subideal, and 50 sampled elements outside F per algebra
//    (when F is proper) do not.
Outcome criterion_baer_agreement() {
  Outcome o;
  Rng rng(1006);
  std::size_t proper = 0;
  for (const LieAlgebra& l : corpus_algebras(true)) {
    Subspace f = fitting_ideal(l).space;
    for (std::size_t i = 0; i < f.dim(); ++i) {
      ++o.instances;
      if (!element_generates_subideal(l, f.basis().row(i))) {
        o.fail(l.name() + ": fitting basis vector fails the subideal test");
      }
    }
    if (f.dim() == l.dim()) continue;
    ++proper;
    int outside = 0;
    while (outside < 50) {
      Vec x = random_vec(rng, l.field(), l.dim());
      if (f.contains_vec(x)) continue;
      ++outside;
      ++o.instances;
      if (element_generates_subideal(l, x)) {
        o.fail(l.name() + ": element outside F generates a subideal");
      }
    }
  }
  o.detail = std::to_string(proper) +
             " algebras with proper F, 50 outside samples each";
  return o;
}

// 7. For commuting nilpotent operators with indices n_i (k <= 3 operators,
//    n_i <= 4), every product of m = 1 + sum(n_i - 1) factors vanishes, on
//    100 seeded constructions.
Outcome criterion_product_bound() {
  Outcome o;
  Rng rng(1007);
  std::uint64_t tight = 0;
  for (int s = 0; s < 100; ++s) {
    std::size_t n = 2 + rng() % 3;
    std::size_t k = 1 + rng() % 3;
    auto ops = random_commuting_nilpotents(rng, Field::rationals(), n, k);
    BoundExperimentResult r = semidirect_bound_experiment(ops);
    ++o.instances;
    if (!r.commuting) o.fail("operators fail to commute");
    if (!r.all_length_m_zero) {
      o.fail("nonzero product of length m on sample " + std::to_string(s));
    }
    for (std::size_t idx : r.indices) {
      if (idx > 4) o.fail("operator index above 4");
    }
    if (r.tight()) ++tight;
  }
  o.detail = std::to_string(tight) + " of 100 met the bound exactly";
  return o;
}

// 8. exp(ad_x) for every ad-nilpotent basis element and basis-pair sum of
//    every rational bundled algebra: bracket-preserving, inverted exactly by
//    exp(-ad_x), stabilizes a subalgebra iff x normalizes it, and the
//    finite-difference reconstruction returns ad_x exactly.
Outcome criterion_exp_machinery() {
  Outcome o;
  Rng rng(1008);
  for (const LieAlgebra& l : corpus_algebras(true)) {
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < l.dim(); ++i) {
      candidates.push_back(l.basis_element(i).coords);
      for (std::size_t j = i + 1; j < l.dim(); ++j) {
        candidates.push_back(vec_add(l.basis_element(i).coords,
                                     l.basis_element(j).coords));
      }
    }
    std::vector<Subspace> probes = computed_ideals(l);
    for (int s = 0; s < 5; ++s) {
      probes.push_back(random_subalgebra(rng, l).space);
    }
    const Matrix id = Matrix::identity(l.field(), l.dim());
    for (const Vec& x : candidates) {
      auto index = ad_nilpotency_index(l, x);
      if (!index.has_value()) continue;
      InnerAutomorphism aut = exp_ad(l, x);
      ++o.instances;
      for (std::size_t i = 0; i < l.dim(); ++i) {
        for (std::size_t j = 0; j < l.dim(); ++j) {
          Vec lhs = image(aut, l.structure(i, j));
          Vec rhs = bracket_vec(l, image(aut, l.basis_element(i).coords),
                                image(aut, l.basis_element(j).coords));
          if (lhs != rhs) o.fail(l.name() + ": bracket not preserved");
        }
      }
      if (!(compose(aut, exp_ad(l, vec_neg(x))).matrix == id)) {
        o.fail(l.name() + ": exp(x)exp(-x) is not the identity");
      }
      for (const Subspace& a : probes) {
        bool normalizes = normalizer(l, a).space.contains_vec(x);
        bool stabilizes = image(aut, a) == a;
        if (normalizes != stabilizes) {
          o.fail(l.name() + ": normalize and exp-stabilize disagree");
        }
      }
      LemmaReport hart =
          check_hartley_identity(l, x, std::max<std::size_t>(*index, 1));
      if (!hart.applicable || !hart.passed) {
        o.fail(l.name() + ": reconstruction identity fails");
      }
    }
  }
  o.detail = "every ad-nilpotent basis element and pair sum, exact over Q";
  return o;
}

// 9. The exhaustive finite-ring suite passes on the three bundled rings and
//    on 100 random rings per bundled shape; every iterated-center witness
//    tuple is within the composition-length bound, and within the rank when
//    all factors are one prime.
Outcome criterion_finring_suite() {
  Outcome o;
  auto assess = [&](const FiniteLieRing& r) {
    FinringSuiteReport rep = finring_suite(r);
    ++o.instances;
    if (!rep.passed()) o.fail(r.name() + ": suite failed");
    if (rep.max_witnesses > composition_length(r)) {
      o.fail(r.name() + ": witness tuple longer than the composition length");
    }
    bool homogeneous_prime = true;
    for (std::uint32_t m : r.factors()) {
      if (m != r.factors()[0]) homogeneous_prime = false;
    }
    if (homogeneous_prime && r.factors()[0] <= 3 &&
        rep.max_witnesses > r.factors().size()) {
      o.fail(r.name() + ": witness tuple longer than the rank");
    }
  };
  for (const FiniteLieRing& r : corpus_rings()) assess(r);
  Rng rng(1009);
  for (const std::vector<std::uint32_t>& shape :
       {std::vector<std::uint32_t>{2, 2, 2}, std::vector<std::uint32_t>{4, 2},
        std::vector<std::uint32_t>{3, 3, 3}}) {
    for (int s = 0; s < 100; ++s) assess(random_ring(rng, shape));
  }
  o.detail = "3 bundled rings plus 100 random rings per shape";
  return o;
}

// 10. On bundled definitions that live on both sides of the ring/algebra
//     bridge, series and centralizers agree elementwise.
Outcome criterion_oracle_agreement() {
  Outcome o;
  auto compare = [&](const FiniteLieRing& r, const LieAlgebra& a) {
    auto expect = [&](const Subspace& s, const std::vector<std::uint32_t>& pts,
                      const std::string& what) {
      ++o.instances;
      if (subspace_points(r, s) != pts) {
        o.fail(a.name() + ": " + what + " disagrees across the bridge");
      }
    };
    expect(center(a), ring_center(r).elems, "center");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      expect(centralizer(a, coordinate_line(a, i)).space,
             centralizer_exhaustive(r, {r.generator(i)}).elems,
             "generator centralizer");
    }
    Series up = upper_central_series(a);
    RingSeries rup = ring_upper_central_series(r);
    Series low = lower_central_series(a);
    RingSeries rlow = ring_lower_central_series(r);
    ++o.instances;
    if (up.terms.size() != rup.terms.size() ||
        low.terms.size() != rlow.terms.size()) {
      o.fail(a.name() + ": series lengths disagree across the bridge");
      return;
    }
    for (std::size_t k = 0; k < up.terms.size(); ++k) {
      expect(up.terms[k], rup.terms[k].elems, "upper central term");
    }
    for (std::size_t k = 0; k < low.terms.size(); ++k) {
      expect(low.terms[k], rlow.terms[k].elems, "lower central term");
    }
  };

  for (const CorpusEntry& e : corpus_entries()) {
    DefinitionFile df = parse_definition(e.definition);
    if (df.is_algebra() && !df.algebra->field().is_rationals()) {
      compare(algebra_to_ring(*df.algebra), *df.algebra);
    } else if (!df.is_algebra()) {
      const FiniteLieRing& r = *df.ring;
      bool homogeneous = true;
      for (std::uint32_t m : r.factors()) {
        if (m != r.factors()[0]) homogeneous = false;
      }
      if (homogeneous) compare(r, ring_to_algebra(r));
    }
  }
  o.detail = "both bridge directions, elementwise";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"iterated centralizer routes agree", criterion_centralizer_routes},
      {"centralizer shift containment", criterion_shift_containment},
      {"equal premises force equal towers", criterion_tower_determined},
      {"fitting certificate soundness", criterion_fitting_soundness},
      {"engel equivalence", criterion_engel_equivalence},
      {"baer radical equals fitting ideal", criterion_baer_agreement},
      {"commuting nilpotent product bound", criterion_product_bound},
      {"exp(ad) machinery exact over Q", criterion_exp_machinery},
      {"finite ring exhaustive suite", criterion_finring_suite},
      {"ring and algebra oracles agree", criterion_oracle_agreement},
  };

  std::cout << "acceptance gate: 10 criteria, exact arithmetic, zero numeric "
               "tolerance\n";
  int failures = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    Outcome o;
    std::string detail;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "[" << (number < 10 ? " " : "") << number << "/10] "
              << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ("
              << o.instances << " instances) " << o.detail << "\n";
  }
  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
