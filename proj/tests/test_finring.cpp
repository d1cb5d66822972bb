#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "lieforge/finring.hpp"
#include "lieforge/structure.hpp"

using namespace lieforge;
using namespace fixtures;

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

Table zero_table(std::size_t r) {
  return Table(r, std::vector<std::uint32_t>(r, 0));
}

// Heisenberg ring on (Z/2)^3: [g1,g2] = g3.
FiniteLieRing heis8() {
  Table t = zero_table(3);
  t[0][1] = 4;
  t[1][0] = 4;
  return FiniteLieRing::validated("heis8", {2, 2, 2}, t);
}

// Z/4 + Z/2 with [g1,g2] = 2*g1.
FiniteLieRing z4z2() {
  Table t = zero_table(2);
  t[0][1] = 2;
  t[1][0] = 2;
  return FiniteLieRing::validated("z4z2", {4, 2}, t);
}

// Non-nilpotent rank 2 ring over Z/2: [g1,g2] = g2.
FiniteLieRing raff2() {
  Table t = zero_table(2);
  t[0][1] = 2;
  t[1][0] = 2;
  return FiniteLieRing::validated("raff2", {2, 2}, t);
}

// Heisenberg ring on (Z/3)^3.
FiniteLieRing z3cubed() {
  Table t = zero_table(3);
  t[0][1] = 9;
  t[1][0] = 18;
  return FiniteLieRing::validated("z3cubed", {3, 3, 3}, t);
}

std::vector<std::uint32_t> elems_of(const Subgroup& s) { return s.elems; }

}  // namespace

// ============================================================
// arithmetic and validation
// ============================================================

TEST_CASE("mixed-radix codes round-trip and generators sit at strides") {
  FiniteLieRing r = z4z2();
  CHECK(r.order() == 8);
  CHECK(r.rank() == 2);
  CHECK(r.generator(0) == 1);
  CHECK(r.generator(1) == 4);
  for (std::uint32_t e = 0; e < r.order(); ++e) {
    CHECK(r.encode(r.decode(e)) == e);
  }
  CHECK(r.decode(6) == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("ring arithmetic matches componentwise modular arithmetic") {
  FiniteLieRing r = z4z2();
  CHECK(r.add(3, 1) == 0);      // (3,0)+(1,0) = (0,0)
  CHECK(r.add(6, 7) == 1);      // (2,1)+(3,1) = (1,0)
  CHECK(r.neg(1) == 3);
  CHECK(r.neg(4) == 4);
  CHECK(r.sub(1, 6) == r.add(1, r.neg(6)));
  CHECK(r.scale(3, 5) == r.add(5, r.add(5, 5)));
  CHECK(r.element_order(0) == 1);
  CHECK(r.element_order(1) == 4);
  CHECK(r.element_order(2) == 2);
  CHECK(r.element_order(5) == 4);  // lcm(4, 2)
  CHECK(r.element_str(6) == "(2,1)");
}

TEST_CASE("bracket extends the generator table bilinearly") {
  FiniteLieRing r = z4z2();
  const std::uint32_t g1 = r.generator(0), g2 = r.generator(1);
  CHECK(r.bracket(g1, g2) == 2);
  CHECK(r.bracket(g2, g1) == 2);  // -2*g1 = 2*g1 mod 4
  CHECK(r.bracket(r.scale(3, g1), g2) == r.scale(3, 2));
  for (std::uint32_t a = 0; a < r.order(); ++a) {
    CHECK(r.bracket(a, a) == 0);
    for (std::uint32_t b = 0; b < r.order(); ++b) {
      CHECK(r.bracket(a, b) == r.neg(r.bracket(b, a)));
      for (std::uint32_t c = 0; c < r.order(); ++c) {
        CHECK(r.bracket(r.add(a, b), c) ==
              r.add(r.bracket(a, c), r.bracket(b, c)));
        std::uint32_t jac = r.add(
            r.bracket(r.bracket(a, b), c),
            r.add(r.bracket(r.bracket(b, c), a),
                  r.bracket(r.bracket(c, a), b)));
        CHECK(jac == 0);
      }
    }
  }
}

TEST_CASE("validation rejects bad tables with the right kind") {
  Table alt = zero_table(2);
  alt[0][0] = 1;
  CHECK_THROWS_AS(FiniteLieRing::validated("bad", {2, 2}, alt),
                  ValidationError);

  Table asym = zero_table(2);
  asym[0][1] = 2;  // transpose entry left at 0
  try {
    FiniteLieRing::validated("bad", {2, 2}, asym);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::not_antisymmetric);
  }

  // [g1,g2] = g1 has order 4, but gcd(m1, m2) = 2
  Table tor = zero_table(2);
  tor[0][1] = 1;
  tor[1][0] = 3;
  try {
    FiniteLieRing::validated("bad", {4, 2}, tor);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::bad_torsion);
    CHECK(e.i == 0);
    CHECK(e.j == 1);
  }

  // [g1,g2] = g3, [g2,g3] = g2 breaks Jacobi on (g1,g2,g3)
  Table jac = zero_table(3);
  jac[0][1] = 4;
  jac[1][0] = 4;
  jac[1][2] = 2;
  jac[2][1] = 2;
  try {
    FiniteLieRing::validated("bad", {2, 2, 2}, jac);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.kind == ValidationError::Kind::jacobi_fails);
  }
}

TEST_CASE("order cap rejects oversized rings") {
  std::vector<std::uint32_t> factors(13, 2);  // order 8192 > 4096
  CHECK_THROWS_AS(FiniteLieRing::validated("big", factors, zero_table(13)),
                  CapExceededError);
}

// ============================================================
// subgroups
// ============================================================

TEST_CASE("subgroup generation, extension and intersection") {
  FiniteLieRing r = z4z2();
  Subgroup whole = ring_full(r);
  CHECK(whole.size() == 8);

  Subgroup c1 = subgroup_generated(r, {r.generator(0)});
  CHECK(elems_of(c1) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(c1.gens == std::vector<std::uint32_t>{1});

  Subgroup mixed = subgroup_generated(r, {5});
  CHECK(elems_of(mixed) == std::vector<std::uint32_t>{0, 2, 5, 7});

  Subgroup meet = subgroup_intersect(c1, mixed);
  CHECK(elems_of(meet) == std::vector<std::uint32_t>{0, 2});

  Subgroup ext = subgroup_extend(r, c1, r.generator(1));
  CHECK(ext == whole);
  CHECK(ext.contains_all(c1));
  CHECK(!c1.contains_all(ext));
}

TEST_CASE("all_subgroups counts match hand enumeration") {
  CHECK(all_subgroups(heis8()).size() == 16);  // (Z/2)^3 has 16 subgroups
  CHECK(all_subgroups(z4z2()).size() == 8);
  CHECK(all_subgroups(raff2()).size() == 5);
}

TEST_CASE("subring and ideal predicates") {
  FiniteLieRing r = raff2();
  Subgroup line_g1 = subgroup_generated(r, {r.generator(0)});
  Subgroup line_g2 = subgroup_generated(r, {r.generator(1)});
  CHECK(is_subring(r, line_g1));
  CHECK(!is_ring_ideal(r, line_g1));  // [g2,g1] = g2 escapes
  CHECK(is_subring(r, line_g2));
  CHECK(is_ring_ideal(r, line_g2));

  FiniteLieRing h = heis8();
  Subgroup diag = subgroup_generated(h, {3});  // g1+g2
  CHECK(is_subring(h, diag));
  CHECK(!is_ring_ideal(h, diag));
}

TEST_CASE("bracket_subgroup gives the derived subgroup") {
  FiniteLieRing h = heis8();
  Subgroup whole = ring_full(h);
  Subgroup derived = bracket_subgroup(h, whole, whole);
  CHECK(elems_of(derived) == std::vector<std::uint32_t>{0, 4});

  FiniteLieRing r = z4z2();
  Subgroup d2 = bracket_subgroup(r, ring_full(r), ring_full(r));
  CHECK(elems_of(d2) == std::vector<std::uint32_t>{0, 2});
}

// ============================================================
// centralizers
// ============================================================

TEST_CASE("exhaustive centralizers on heis8") {
  FiniteLieRing h = heis8();
  Subgroup c1 = centralizer_exhaustive(h, {h.generator(0)});
  CHECK(elems_of(c1) == std::vector<std::uint32_t>{0, 1, 4, 5});
  Subgroup c2 = centralizer_exhaustive(h, {h.generator(1)});
  CHECK(elems_of(c2) == std::vector<std::uint32_t>{0, 2, 4, 6});
  Subgroup z = ring_center(h);
  CHECK(elems_of(z) == std::vector<std::uint32_t>{0, 4});
  CHECK(subgroup_intersect(c1, c2) == z);
  CHECK(centralizer_exhaustive(h, {3}).elems ==
        std::vector<std::uint32_t>{0, 3, 4, 7});
}

TEST_CASE("parallel and serial centralizers agree everywhere") {
  for (const FiniteLieRing& r : {heis8(), z4z2(), raff2(), z3cubed()}) {
    for (std::uint32_t x = 0; x < r.order(); ++x) {
      CHECK(centralizer_exhaustive(r, {x}) ==
            centralizer_exhaustive_ref(r, {x}));
    }
    std::vector<std::uint32_t> all;
    for (std::size_t i = 0; i < r.rank(); ++i) all.push_back(r.generator(i));
    CHECK(centralizer_exhaustive(r, all) ==
          centralizer_exhaustive_ref(r, all));
  }
}

TEST_CASE("centralizer lattice of heis8: five nodes, chain of three") {
  CentralizerLattice lat = centralizer_lattice(heis8());
  CHECK(lat.nodes.size() == 5);
  CHECK(lat.max_chain == 3);
  CHECK(lat.hasse.size() == 6);  // center under each C(g), each C(g) under R
  std::size_t full = 0, middle = 0, bottom = 0;
  for (const Subgroup& n : lat.nodes) {
    if (n.size() == 8) ++full;
    if (n.size() == 4) ++middle;
    if (n.size() == 2) ++bottom;
  }
  CHECK(full == 1);
  CHECK(middle == 3);
  CHECK(bottom == 1);
}

TEST_CASE("centralizer lattice of an abelian ring is a single node") {
  FiniteLieRing r =
      FiniteLieRing::validated("ab", {2, 3}, zero_table(2));
  CentralizerLattice lat = centralizer_lattice(r);
  CHECK(lat.nodes.size() == 1);
  CHECK(lat.max_chain == 1);
  CHECK(lat.hasse.empty());
}

// ============================================================
// series, class, witnesses
// ============================================================

TEST_CASE("lower and upper central series of heis8") {
  FiniteLieRing h = heis8();
  RingSeries low = ring_lower_central_series(h);
  REQUIRE(low.terms.size() == 3);
  CHECK(low.terms[0].size() == 8);
  CHECK(elems_of(low.terms[1]) == std::vector<std::uint32_t>{0, 4});
  CHECK(low.terms[2].size() == 1);
  CHECK(low.stabilized);

  RingSeries up = ring_upper_central_series(h);
  REQUIRE(up.terms.size() == 3);
  CHECK(up.terms[0].size() == 1);
  CHECK(elems_of(up.terms[1]) == std::vector<std::uint32_t>{0, 4});
  CHECK(up.terms[2].size() == 8);

  CHECK(ring_nilpotency_class(h) == 2);
}

TEST_CASE("z4z2 is nilpotent of class 2 despite mixed torsion") {
  FiniteLieRing r = z4z2();
  CHECK(ring_nilpotency_class(r) == 2);
  RingSeries low = ring_lower_central_series(r);
  CHECK(elems_of(low.terms[1]) == std::vector<std::uint32_t>{0, 2});
  CHECK(elems_of(ring_center(r)) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("raff2 is not nilpotent: both series detect it") {
  FiniteLieRing r = raff2();
  CHECK(!ring_nilpotency_class(r).has_value());
  RingSeries low = ring_lower_central_series(r);
  CHECK(low.stabilized);
  CHECK(elems_of(low.terms.back()) == std::vector<std::uint32_t>{0, 2});
  RingSeries up = ring_upper_central_series(r);
  CHECK(up.terms.size() == 1);  // center is trivial, series never moves
  CHECK(up.terms[0].size() == 1);
}

TEST_CASE("nilpotency class within a subgroup") {
  FiniteLieRing r = raff2();
  Subgroup line_g2 = subgroup_generated(r, {r.generator(1)});
  CHECK(ring_nilpotency_class_within(r, line_g2) == 1);
  CHECK(!ring_nilpotency_class_within(r, ring_full(r)).has_value());
  CHECK(ring_nilpotency_class_within(r, subgroup_generated(r, {})) == 0);
}

TEST_CASE("upper series witnesses reproduce each step without quotients") {
  FiniteLieRing h = heis8();
  RingCentralWitnesses w = ring_upper_series_with_witnesses(h);
  REQUIRE(w.witnesses.size() == 2);
  CHECK(w.witnesses[0] == std::vector<std::uint32_t>{1, 2});
  CHECK(w.witnesses[1].empty());  // every element lands in the hypercenter

  for (std::size_t step = 0; step + 1 < w.series.terms.size(); ++step) {
    std::vector<std::uint32_t> got;
    for (std::uint32_t y = 0; y < h.order(); ++y) {
      bool in = true;
      for (std::uint32_t wit : w.witnesses[step]) {
        if (!w.series.terms[step].contains(h.bracket(y, wit))) in = false;
      }
      if (in) got.push_back(y);
    }
    CHECK(got == w.series.terms[step + 1].elems);
  }
}

// ============================================================
// fitting and composition length
// ============================================================

TEST_CASE("ring fitting radical by brute force") {
  CHECK(ring_fitting_bruteforce(heis8()).size() == 8);
  CHECK(ring_fitting_bruteforce(z4z2()).size() == 8);
  Subgroup f = ring_fitting_bruteforce(raff2());
  CHECK(elems_of(f) == std::vector<std::uint32_t>{0, 2});
  CHECK(is_ring_ideal(raff2(), f));
}

TEST_CASE("composition length counts prime factors with multiplicity") {
  CHECK(composition_length(heis8()) == 3);
  CHECK(composition_length(z4z2()) == 3);  // 4 = 2*2 plus one more 2
  CHECK(composition_length(z3cubed()) == 3);
  FiniteLieRing r =
      FiniteLieRing::validated("ab", {12, 5}, zero_table(2));
  CHECK(composition_length(r) == 4);  // 12*5 = 2*2*3*5
}

TEST_CASE("nilpotency class never exceeds the composition length") {
  for (const FiniteLieRing& r : {heis8(), z4z2(), z3cubed()}) {
    auto c = ring_nilpotency_class(r);
    REQUIRE(c.has_value());
    CHECK(*c <= composition_length(r));
  }
}

// ============================================================
// bridge to F_p algebras
// ============================================================

TEST_CASE("heis8 converts to the Heisenberg algebra over F_2") {
  FiniteLieRing h = heis8();
  LieAlgebra a = ring_to_algebra(h);
  CHECK(a.field() == Field::gf(2));
  CHECK(a.dim() == 3);
  CHECK(a.same_as(h3(Field::gf(2))));
  CHECK_THROWS_AS(ring_to_algebra(z4z2()), WrongCharacteristicError);
}

TEST_CASE("subspace_points maps algebra subspaces onto ring subgroups") {
  FiniteLieRing h = heis8();
  LieAlgebra a = ring_to_algebra(h);

  CHECK(subspace_points(h, center(a)) == ring_center(h).elems);
  Subspace e1 = span_rows(a, {{1, 0, 0}});
  CHECK(subspace_points(h, centralizer(a, e1).space) ==
        centralizer_exhaustive(h, {h.generator(0)}).elems);
  CHECK(subspace_points(h, a.full_space()) == ring_full(h).elems);

  Series up = upper_central_series(a);
  RingSeries rup = ring_upper_central_series(h);
  REQUIRE(up.terms.size() == rup.terms.size());
  for (std::size_t i = 0; i < up.terms.size(); ++i) {
    CHECK(subspace_points(h, up.terms[i]) == rup.terms[i].elems);
  }
}

TEST_CASE("z3cubed agrees with the F_3 Heisenberg algebra") {
  FiniteLieRing r = z3cubed();
  LieAlgebra a = ring_to_algebra(r);
  CHECK(a.same_as(h3(Field::gf(3))));
  CHECK(ring_nilpotency_class(r) == nilpotency_class(a));
  CHECK(subspace_points(r, center(a)) == ring_center(r).elems);
  CHECK(centralizer_exhaustive(r, {r.generator(0)}).size() == 9);
}

// ============================================================
// suite report
// ============================================================

TEST_CASE("finring suite on the bundled rings") {
  FinringSuiteReport h = finring_suite(heis8());
  CHECK(h.order == 8);
  CHECK(h.comp_length == 3);
  CHECK(h.nilpotency_class == 2);
  CHECK(h.max_witnesses == 2);
  CHECK(h.lattice_nodes == 5);
  CHECK(h.lattice_max_chain == 3);
  CHECK(h.fitting_size == 8);
  CHECK(h.passed());

  FinringSuiteReport r = finring_suite(raff2());
  CHECK(!r.nilpotency_class.has_value());
  CHECK(r.fitting_size == 2);
  CHECK(r.passed());

  FinringSuiteReport z = finring_suite(z3cubed(), true, false);
  CHECK(z.nilpotency_class == 2);
  CHECK(z.class_within_comp_length);
  CHECK(z.passed());
}

TEST_CASE("algebra_to_ring inverts ring_to_algebra") {
  for (const FiniteLieRing& r : {heis8(), z3cubed()}) {
    FiniteLieRing back = algebra_to_ring(ring_to_algebra(r));
    CHECK(back.order() == r.order());
    for (std::size_t i = 0; i < r.rank(); ++i) {
      for (std::size_t j = 0; j < r.rank(); ++j) {
        CHECK(back.bracket(back.generator(i), back.generator(j)) ==
              r.bracket(r.generator(i), r.generator(j)));
      }
    }
  }
  LieAlgebra a = h3(Field::gf(2));
  CHECK(ring_to_algebra(algebra_to_ring(a)).same_as(a));
  CHECK_THROWS_AS(algebra_to_ring(h3()), WrongCharacteristicError);
}
