#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

enum class SeriesKind { lower_central, derived, upper_central };

// Terms are strictly monotone; the repeated fixed point is not stored.
// Indexing follows L^0 = L, L^{k+1} = [L, L^k] (so "class c" means the c-th
// term vanishes), and Z_0 = 0 for the ascending series.
struct Series {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;

  const Subspace& last() const { return terms.back(); }
  bool reaches_zero() const { return terms.back().is_zero(); }
  bool reaches_full() const { return terms.back().is_full(); }
};

SubStructure centralizer(const LieAlgebra& l, const std::vector<Element>& xs);
SubStructure centralizer(const LieAlgebra& l, const Subspace& s);
Subspace center(const LieAlgebra& l);

// N_L(a) = {x : [x,a] <= a}
SubStructure normalizer(const LieAlgebra& l, const Subspace& a);

// Literal recursion: C^0 = h, and C^{k+1} is the set of x that normalize all
// previous terms C^1..C^k and satisfy [x,a] <= C^k. Requires h <= a with h an
// ideal of a. Returns terms C^0..C^n.
std::vector<Subspace> iterated_centralizer_tower(const LieAlgebra& l,
                                                 const SubStructure& a,
                                                 const SubStructure& h,
                                                 std::size_t n);
SubStructure iterated_centralizer(const LieAlgebra& l, const SubStructure& a,
                                  const SubStructure& h, std::size_t n);

// Kernel-formula route for ideals: {x : every n-fold ad product from i kills
// x}, computed through the span of exactly-n-fold products of basis ad maps.
// Never consults the recursive definition; the corpus-wide equality of the
// two routes is asserted in the check suites.
SubStructure iterated_centralizer_of_ideal(const LieAlgebra& l,
                                           const SubStructure& i,
                                           std::size_t n);

Series lower_central_series(const LieAlgebra& l);
Series derived_series(const LieAlgebra& l);
Series upper_central_series(const LieAlgebra& l);

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);
std::optional<std::size_t> solvable_length(const LieAlgebra& l);

// Greedy finite witness x_1..x_k with C_L(witness) = C_L(s): each step adds
// the basis element of s with the largest dimension drop, lowest index first.
std::vector<Element> centralizer_finite_witness(const LieAlgebra& l,
                                                const Subspace& s);

struct LemmaReport {
  bool applicable = true;
  bool passed = true;
  std::vector<std::string> witnesses;
};

// [H^i, C_L^j(H)] <= C_L^{j-i-1}(H) for all 0 <= i < j <= bound.
LemmaReport check_lemma_cent_it_1(const LieAlgebra& l, const SubStructure& h,
                                  std::size_t bound);

// [[X,Y],Z] <= H and [[Y,Z],X] <= H imply [[Z,X],Y] <= H.
LemmaReport check_three_subgroups(const LieAlgebra& l, const Subspace& x,
                                  const Subspace& y, const Subspace& z,
                                  const Subspace& h);

// Premise: K <= H (both subalgebras) and C_L(K^i) = C_L(H^i) for every
// i < j, powers taken inside each subalgebra. Conclusion: C^j_L(K) =
// C^j_L(H). Reports not applicable when the premise fails.
LemmaReport check_lemma_cent_it_2(const LieAlgebra& l, const SubStructure& k,
                                  const SubStructure& h, std::size_t j);

}  // namespace lieforge
