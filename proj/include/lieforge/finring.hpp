#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/lie_algebra.hpp"

namespace lieforge {

// Finite Lie ring on Z/m_1 + ... + Z/m_r. Elements are mixed-radix codes in
// [0, order); generator g_i is the unit tuple in slot i. Exhaustive routines
// keep everything exact, so the order is capped (default 4096, override with
// the LIEFORGE_CAP environment variable).
class FiniteLieRing {
 public:
  static FiniteLieRing validated(std::string name,
                                 std::vector<std::uint32_t> factors,
                                 std::vector<std::vector<std::uint32_t>> table);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return factors_.size(); }
  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::uint64_t order() const { return order_; }

  std::uint32_t encode(const std::vector<std::uint32_t>& tuple) const;
  std::vector<std::uint32_t> decode(std::uint32_t e) const;
  std::uint32_t generator(std::size_t i) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t scale(std::uint64_t k, std::uint32_t a) const;
  std::uint32_t bracket(std::uint32_t a, std::uint32_t b) const;
  std::uint64_t element_order(std::uint32_t a) const;

  std::string element_str(std::uint32_t a) const;

 private:
  FiniteLieRing(std::string name, std::vector<std::uint32_t> factors,
                std::vector<std::vector<std::uint32_t>> table);

  std::string name_;
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
  std::vector<std::vector<std::uint32_t>> table_;
};

// Additive subgroup as a sorted element list plus a small generating set.
struct Subgroup {
  std::vector<std::uint32_t> elems;  // sorted, contains 0
  std::vector<std::uint32_t> gens;

  std::size_t size() const { return elems.size(); }
  bool contains(std::uint32_t e) const;
  bool contains_all(const Subgroup& o) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup subgroup_generated(const FiniteLieRing& r,
                            std::vector<std::uint32_t> gens);
Subgroup subgroup_extend(const FiniteLieRing& r, const Subgroup& s,
                         std::uint32_t x);
Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b);

// Every additive subgroup; count capped (default 65536, LIEFORGE_CAP scales
// it by the same factor).
std::vector<Subgroup> all_subgroups(const FiniteLieRing& r);

bool is_subring(const FiniteLieRing& r, const Subgroup& s);
bool is_ring_ideal(const FiniteLieRing& r, const Subgroup& s);

// Subgroup generated by {[a, b] : a in s, b in t}; generator brackets
// suffice by bilinearity.
Subgroup bracket_subgroup(const FiniteLieRing& r, const Subgroup& s,
                          const Subgroup& t);

// {x : [x, c] = 0 for every c in cs}, by scanning the whole ring.
Subgroup centralizer_exhaustive(const FiniteLieRing& r,
                                const std::vector<std::uint32_t>& cs);
// Serial twin; must return the identical subgroup.
Subgroup centralizer_exhaustive_ref(const FiniteLieRing& r,
                                    const std::vector<std::uint32_t>& cs);

struct CentralizerLattice {
  std::vector<Subgroup> nodes;  // element centralizers closed under meets
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (sub, super)
  std::size_t max_chain = 0;    // node count of the longest chain
};

CentralizerLattice centralizer_lattice(const FiniteLieRing& r);

struct RingSeries {
  std::vector<Subgroup> terms;
  bool stabilized = false;
};

Subgroup ring_full(const FiniteLieRing& r);
Subgroup ring_center(const FiniteLieRing& r);
RingSeries ring_lower_central_series(const FiniteLieRing& r);
RingSeries ring_upper_central_series(const FiniteLieRing& r);
std::optional<std::size_t> ring_nilpotency_class(const FiniteLieRing& r);

// Lower central series of s inside r; nullopt when it stabilizes above 0.
std::optional<std::size_t> ring_nilpotency_class_within(const FiniteLieRing& r,
                                                        const Subgroup& s);

struct RingCentralWitnesses {
  RingSeries series;
  // witnesses[i]: elements x_s with {y : [y,x_s] in Z_i} = Z_{i+1};
  // no quotient ring is ever formed
  std::vector<std::vector<std::uint32_t>> witnesses;
};

RingCentralWitnesses ring_upper_series_with_witnesses(const FiniteLieRing& r);

// Largest nilpotent ideal as the join of all nilpotent ideals, enumerated
// from the full subgroup lattice. Post-verifies the join is itself a
// nilpotent ideal (Fitting's theorem) and throws InternalCheckError if not.
Subgroup ring_fitting_bruteforce(const FiniteLieRing& r);

// Number of prime factors of the order, counted with multiplicity. Bounds
// the length of every strictly increasing subgroup chain.
std::size_t composition_length(const FiniteLieRing& r);

// Bridge to the F_p side: a ring whose factors all equal one prime p is a
// Lie algebra over F_p with the same structure constants.
LieAlgebra ring_to_algebra(const FiniteLieRing& r);
// Inverse direction; requires an algebra over F_p and p^dim within the cap.
FiniteLieRing algebra_to_ring(const LieAlgebra& l);
// All points of a subspace over F_p, encoded as ring elements, sorted.
std::vector<std::uint32_t> subspace_points(const FiniteLieRing& r,
                                           const Subspace& s);

struct FinringSuiteReport {
  std::uint64_t order = 0;
  std::size_t comp_length = 0;
  std::optional<std::size_t> nilpotency_class;
  bool upper_lower_agree = true;   // nilpotent: both series have the class length
  bool witnesses_ok = true;        // recorded witnesses reproduce each step
  std::size_t max_witnesses = 0;   // largest witness set over the steps
  bool class_within_comp_length = true;
  std::size_t lattice_nodes = 0;
  std::size_t lattice_max_chain = 0;
  bool fitting_ok = true;          // join of nilpotent ideals verified
  std::size_t fitting_size = 0;
  bool passed() const {
    return upper_lower_agree && witnesses_ok && class_within_comp_length &&
           fitting_ok;
  }
};

FinringSuiteReport finring_suite(const FiniteLieRing& r,
                                 bool with_lattice = true,
                                 bool with_fitting = true);

}  // namespace lieforge
