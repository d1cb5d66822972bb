#pragma once

#include <optional>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

// Associative span closure of {ad_{e_i}} inside End(L), stored as a subspace
// of flattened n*n matrices. The identity is not adjoined.
Subspace envelope(const LieAlgebra& l);
// Serial twin of envelope(); must return the identical subspace.
Subspace envelope_ref(const LieAlgebra& l);

// Smallest k with ad_x^k = 0, or nullopt when ad_x is not nilpotent.
std::optional<std::size_t> ad_nilpotency_index(const LieAlgebra& l,
                                               const Vec& x);

// Smallest c with [S,[S,...[S,S]]] (c brackets) = 0 where the series is
// T_0 = S, T_{m+1} = [S, T_m]; nullopt when the series stabilizes above zero.
// Requires S to be a subalgebra.
std::optional<std::size_t> nilpotency_class_within(const LieAlgebra& l,
                                                   const Subspace& s);

// {x : tr(ad_x) = 0 and tr(ad_x u) = 0 for every u in the envelope}.
// Raw kernel with no post-verification. Characteristic zero only.
Subspace fitting_trace_kernel(const LieAlgebra& l);

struct FittingCertificate {
  SubStructure ideal;
  // F = S_0 > [F,S_0] > ... > 0, evidence that F is nilpotent
  std::vector<Subspace> central_series;
  // dim of trace_kernel(L/F) meet [L/F, L/F], must be 0: when F is the
  // largest nilpotent ideal the quotient splits as semisimple plus central,
  // so its trace kernel is central and misses the derived algebra
  std::size_t quotient_obstruction_dim = 0;
};

// Largest nilpotent ideal. Post-verifies that the result is an ideal and
// nilpotent, that the quotient trace kernel is central and meets the derived
// algebra trivially, and that no coordinate direction extends F to a larger
// nilpotent ideal; throws InternalCheckError when any check fails.
// Characteristic zero only.
FittingCertificate fitting_certificate(const LieAlgebra& l);
SubStructure fitting_ideal(const LieAlgebra& l);

struct EngelReport {
  bool ad_nilpotent = false;
  bool closure_nilpotent = false;
  bool in_fitting = false;
  // the membership criterion: x in F(L) iff the ideal closure of x is nilpotent
  bool consistent() const { return closure_nilpotent == in_fitting; }
};

EngelReport engel_check(const LieAlgebra& l, const Vec& x,
                        const Subspace& fitting);

struct SubidealChain {
  bool is_subideal = false;
  // L = K_0 >= K_1 >= ... where K_{i+1} is the ideal closure of H in K_i;
  // stops at the first repeat. H is a subideal iff the chain ends at H.
  std::vector<Subspace> chain;
  std::size_t defect() const { return chain.size() - 1; }
};

SubidealChain subideal_chain(const LieAlgebra& l, const Subspace& h);
bool is_subideal(const LieAlgebra& l, const Subspace& h);
bool element_generates_subideal(const LieAlgebra& l, const Vec& x);

}  // namespace lieforge
