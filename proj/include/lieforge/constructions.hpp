#pragma once

#include <string>
#include <vector>

#include "lieforge/lie_algebra.hpp"
#include "lieforge/structure.hpp"

namespace lieforge {

// Linear action of an algebra on a module, one matrix per basis vector.
struct Representation {
  std::string name;
  Field field;
  std::size_t algebra_dim;
  std::size_t module_dim;
  std::vector<Matrix> phi;

  // Checks phi([e_i,e_j]) = phi_i phi_j - phi_j phi_i on basis pairs, which
  // suffices by bilinearity. Throws InvalidRepresentationError.
  static Representation validated(const std::string& name, const LieAlgebra& g,
                                  std::vector<Matrix> phi);

  Matrix of_vec(const Vec& x) const;
};

Representation adjoint_representation(const LieAlgebra& l);

// g acting on an abelian module: [(g,v),(g',v')] = ([g,g'], phi(g)v' - phi(g')v)
LieAlgebra semidirect_product(const LieAlgebra& g, const Representation& rep);

struct InnerAutomorphism {
  Matrix matrix;
  // generators in application order: matrix = exp(ad word.back()) ... exp(ad word.front())
  std::vector<Vec> word;
};

// exp(ad_x) for ad-nilpotent x. Throws NotAdNilpotentError otherwise, and
// WrongCharacteristicError over F_p when a required factorial vanishes or the
// result fails to be an automorphism (legitimate in small characteristic).
// Over Q a failed automorphism check is a bug and raises InternalCheckError.
InnerAutomorphism exp_ad(const LieAlgebra& l, const Vec& x);

InnerAutomorphism compose(const InnerAutomorphism& after,
                          const InnerAutomorphism& before);
Vec image(const InnerAutomorphism& aut, const Vec& v);
Subspace image(const InnerAutomorphism& aut, const Subspace& s);

// Inner automorphisms exp(ad_x), x ranging over the ad-nilpotent basis
// vectors of a, fix a setwise and therefore fix every iterated centralizer
// C^n(a) setwise. Not applicable when a has no ad-nilpotent basis vector.
LemmaReport check_normalization_lemma(const LieAlgebra& l,
                                      const SubStructure& a, std::size_t bound);

struct BoundExperimentResult {
  std::vector<std::size_t> indices;  // nilpotency index per operator
  std::size_t m = 0;                 // 1 + sum(indices - 1)
  bool commuting = false;
  bool all_length_m_zero = false;
  std::size_t longest_nonzero = 0;  // longest word with nonzero product
  std::vector<std::size_t> longest_word;
  bool tight() const { return longest_nonzero + 1 == m; }
};

// Pigeonhole bound for commuting nilpotent operators: every product of
// m = 1 + sum(n_i - 1) factors drawn from {ops} vanishes. Explores all words
// of length <= m depth first, pruning once a prefix product is zero.
BoundExperimentResult semidirect_bound_experiment(const std::vector<Matrix>& ops);
BoundExperimentResult semidirect_bound_experiment(const Representation& rep,
                                                  const std::vector<Vec>& xs);

// Coefficients a_1..a_k with sum_j a_j j^i = [i == 1] for 0 <= i < k, so that
// sum_j a_j exp(j D) = D exactly whenever D^k = 0.
Vec hartley_coefficients(Field f, std::size_t k);
LemmaReport check_hartley_identity(const LieAlgebra& l, const Vec& x,
                                   std::size_t k);

}  // namespace lieforge
