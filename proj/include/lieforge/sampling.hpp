#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lieforge/finring.hpp"
#include "lieforge/lie_algebra.hpp"

namespace lieforge {

// All sampling is driven by a caller-owned mt19937_64 so every run is
// reproducible from a single seed.
using Rng = std::mt19937_64;

// Uniform integer scalar: in [lo, hi] over Q, a uniform residue over F_p.
Scalar random_scalar(Rng& rng, Field f, long lo = -3, long hi = 3);
Vec random_vec(Rng& rng, Field f, std::size_t n);

// Span of up to max_dim random vectors; the result may have smaller
// dimension when they collide.
Subspace random_subspace(Rng& rng, Field f, std::size_t ambient,
                         std::size_t max_dim);

// Random nonzero element, as coordinates.
Vec random_nonzero_vec(Rng& rng, Field f, std::size_t n);

// Strictly upper triangular, hence nilpotent.
Matrix random_strictly_upper(Rng& rng, Field f, std::size_t n);

// k pairwise commuting nilpotent operators: zero-constant polynomials in one
// random strictly upper triangular matrix. Each is guaranteed nonzero when
// the base matrix is (dimension permitting).
std::vector<Matrix> random_commuting_nilpotents(Rng& rng, Field f,
                                                std::size_t n, std::size_t k);

// Solvable algebra of dimension >= target_dim, grown by iterated semidirect
// products. An abelian stage acts through commuting matrices (polynomials in
// a single random matrix); later stages act through the adjoint
// representation. Solvability is invariant under both steps.
LieAlgebra random_solvable_algebra(Rng& rng, Field f, std::size_t target_dim);

// Random finite Lie ring on the given factors. Tries torsion-respecting
// random tables first (symmetrized, Jacobi checked by validation); if none
// passes it falls back to a bracket-into-the-last-generator pattern that is
// valid by construction.
FiniteLieRing random_ring(Rng& rng, std::vector<std::uint32_t> factors);

}  // namespace lieforge
