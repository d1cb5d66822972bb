#include "lieforge/finring.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lieforge/errors.hpp"
#include "lieforge/parallel.hpp"

namespace lieforge {

namespace {

std::uint64_t env_cap(std::uint64_t fallback) {
  if (const char* s = std::getenv("LIEFORGE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

constexpr std::uint64_t kDefaultOrderCap = 4096;
constexpr std::uint64_t kSubgroupCap = 65536;

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

FiniteLieRing::FiniteLieRing(std::string name,
                             std::vector<std::uint32_t> factors,
                             std::vector<std::vector<std::uint32_t>> table)
    : name_(std::move(name)),
      factors_(std::move(factors)),
      table_(std::move(table)) {
  strides_.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    strides_[i] = order_;
    order_ *= factors_[i];
  }
}

FiniteLieRing FiniteLieRing::validated(
    std::string name, std::vector<std::uint32_t> factors,
    std::vector<std::vector<std::uint32_t>> table) {
  for (std::uint32_t m : factors) {
    if (m < 2) throw Error("ring factors must be at least 2");
  }
  std::uint64_t order = 1;
  const std::uint64_t cap = env_cap(kDefaultOrderCap);
  for (std::uint32_t m : factors) {
    order *= m;
    if (order > cap) {
      throw CapExceededError("ring order exceeds the cap of " +
                             std::to_string(cap));
    }
  }
  const std::size_t r = factors.size();
  if (table.size() != r) throw DimensionMismatchError("bracket table shape");
  for (const auto& row : table) {
    if (row.size() != r) throw DimensionMismatchError("bracket table shape");
    for (std::uint32_t e : row) {
      if (e >= order) throw Error("bracket table entry out of range");
    }
  }

  FiniteLieRing ring(std::move(name), std::move(factors), std::move(table));
  for (std::size_t i = 0; i < r; ++i) {
    if (ring.table_[i][i] != 0) {
      throw ValidationError(ValidationError::Kind::not_alternating, i, i, 0,
                            "[g" + std::to_string(i + 1) + ",g" +
                                std::to_string(i + 1) + "] is nonzero");
    }
    for (std::size_t j = i + 1; j < r; ++j) {
      if (ring.table_[j][i] != ring.neg(ring.table_[i][j])) {
        throw ValidationError(ValidationError::Kind::not_antisymmetric, i, j,
                              0,
                              "[g" + std::to_string(j + 1) + ",g" +
                                  std::to_string(i + 1) +
                                  "] is not the negative of the transpose");
      }
      std::uint64_t g = gcd64(ring.factors_[i], ring.factors_[j]);
      if (g % ring.element_order(ring.table_[i][j]) != 0) {
        throw ValidationError(
            ValidationError::Kind::bad_torsion, i, j, 0,
            "order of [g" + std::to_string(i + 1) + ",g" +
                std::to_string(j + 1) + "] does not divide gcd(m" +
                std::to_string(i + 1) + ",m" + std::to_string(j + 1) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        std::uint32_t s = ring.add(
            ring.bracket(ring.table_[i][j], ring.generator(k)),
            ring.add(ring.bracket(ring.table_[j][k], ring.generator(i)),
                     ring.bracket(ring.table_[k][i], ring.generator(j))));
        if (s != 0) {
          throw ValidationError(ValidationError::Kind::jacobi_fails, i, j, k,
                                "Jacobi fails on (g" + std::to_string(i + 1) +
                                    ",g" + std::to_string(j + 1) + ",g" +
                                    std::to_string(k + 1) + ")");
        }
      }
    }
  }
  return ring;
}

std::uint32_t FiniteLieRing::encode(
    const std::vector<std::uint32_t>& tuple) const {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    e += (tuple[i] % factors_[i]) * strides_[i];
  }
  return static_cast<std::uint32_t>(e);
}

std::vector<std::uint32_t> FiniteLieRing::decode(std::uint32_t e) const {
  std::vector<std::uint32_t> t(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    t[i] = static_cast<std::uint32_t>((e / strides_[i]) % factors_[i]);
  }
  return t;
}

std::uint32_t FiniteLieRing::generator(std::size_t i) const {
  return static_cast<std::uint32_t>(strides_[i]);
}

std::uint32_t FiniteLieRing::add(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t ai = (a / strides_[i]) % factors_[i];
    std::uint64_t bi = (b / strides_[i]) % factors_[i];
    e += ((ai + bi) % factors_[i]) * strides_[i];
  }
  return static_cast<std::uint32_t>(e);
}

std::uint32_t FiniteLieRing::neg(std::uint32_t a) const {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t ai = (a / strides_[i]) % factors_[i];
    e += ((factors_[i] - ai) % factors_[i]) * strides_[i];
  }
  return static_cast<std::uint32_t>(e);
}

std::uint32_t FiniteLieRing::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FiniteLieRing::scale(std::uint64_t k, std::uint32_t a) const {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t ai = (a / strides_[i]) % factors_[i];
    e += ((ai * (k % factors_[i])) % factors_[i]) * strides_[i];
  }
  return static_cast<std::uint32_t>(e);
}

std::uint32_t FiniteLieRing::bracket(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t ai = (a / strides_[i]) % factors_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      std::uint64_t bj = (b / strides_[j]) % factors_[j];
      if (bj == 0 || table_[i][j] == 0) continue;
      acc = add(acc, scale(ai * bj, table_[i][j]));
    }
  }
  return acc;
}

std::uint64_t FiniteLieRing::element_order(std::uint32_t a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::uint64_t ai = (a / strides_[i]) % factors_[i];
    std::uint64_t oi = factors_[i] / gcd64(factors_[i], ai);
    ord = ord / gcd64(ord, oi) * oi;
  }
  return ord;
}

std::string FiniteLieRing::element_str(std::uint32_t a) const {
  std::string s = "(";
  auto t = decode(a);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

bool Subgroup::contains(std::uint32_t e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

bool Subgroup::contains_all(const Subgroup& o) const {
  return std::includes(elems.begin(), elems.end(), o.elems.begin(),
                       o.elems.end());
}

namespace {

std::vector<std::uint32_t> close_under_addition(
    const FiniteLieRing& r, const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(r.order(), 0);
  seen[0] = 1;
  std::vector<std::uint32_t> frontier{0};
  std::vector<std::uint32_t> elems{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t e : frontier) {
      for (std::uint32_t g : gens) {
        std::uint32_t s = r.add(e, g);
        if (!seen[s]) {
          seen[s] = 1;
          next.push_back(s);
          elems.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_unique(std::move(elems));
}

// Greedy generating set: keep an element only if it is not already generated.
std::vector<std::uint32_t> reduce_generators(
    const FiniteLieRing& r, const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> have{0};
  for (std::uint32_t e : elems) {
    if (std::binary_search(have.begin(), have.end(), e)) continue;
    gens.push_back(e);
    have = close_under_addition(r, gens);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup subgroup_generated(const FiniteLieRing& r,
                            std::vector<std::uint32_t> gens) {
  Subgroup sg{close_under_addition(r, gens), {}};
  sg.gens = reduce_generators(r, sg.elems);
  return sg;
}

Subgroup subgroup_extend(const FiniteLieRing& r, const Subgroup& s,
                         std::uint32_t x) {
  std::vector<std::uint32_t> gens = s.gens;
  gens.push_back(x);
  return subgroup_generated(r, std::move(gens));
}

Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r{{}, {}};
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(r.elems));
  r.gens = r.elems;  // callers that care reduce this themselves
  return r;
}

std::vector<Subgroup> all_subgroups(const FiniteLieRing& r) {
  const std::uint64_t cap =
      kSubgroupCap / kDefaultOrderCap * env_cap(kDefaultOrderCap);
  std::vector<Subgroup> found{subgroup_generated(r, {})};
  for (std::size_t at = 0; at < found.size(); ++at) {
    Subgroup cur = found[at];  // copy: found may reallocate
    for (std::uint32_t x = 1; x < r.order(); ++x) {
      if (cur.contains(x)) continue;
      Subgroup bigger = subgroup_extend(r, cur, x);
      if (std::find(found.begin(), found.end(), bigger) == found.end()) {
        found.push_back(std::move(bigger));
        if (found.size() > cap) {
          throw CapExceededError("subgroup lattice exceeds the cap of " +
                                 std::to_string(cap));
        }
      }
    }
  }
  return found;
}

bool is_subring(const FiniteLieRing& r, const Subgroup& s) {
  for (std::uint32_t a : s.gens) {
    for (std::uint32_t b : s.gens) {
      if (!s.contains(r.bracket(a, b))) return false;
    }
  }
  return true;
}

bool is_ring_ideal(const FiniteLieRing& r, const Subgroup& s) {
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::uint32_t b : s.gens) {
      if (!s.contains(r.bracket(r.generator(i), b))) return false;
    }
  }
  return true;
}

Subgroup bracket_subgroup(const FiniteLieRing& r, const Subgroup& s,
                          const Subgroup& t) {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a : s.gens) {
    for (std::uint32_t b : t.gens) {
      std::uint32_t c = r.bracket(a, b);
      if (c != 0) gens.push_back(c);
    }
  }
  return subgroup_generated(r, std::move(gens));
}

namespace {

Subgroup centralizer_scan(const FiniteLieRing& r,
                          const std::vector<std::uint32_t>& cs,
                          bool parallel) {
  std::vector<char> keep(r.order(), 0);
  auto work = [&](std::size_t x) {
    for (std::uint32_t c : cs) {
      if (r.bracket(static_cast<std::uint32_t>(x), c) != 0) return;
    }
    keep[x] = 1;
  };
  if (parallel) {
    par::for_each_index(r.order(), work);
  } else {
    for (std::size_t x = 0; x < r.order(); ++x) work(x);
  }
  Subgroup sg{{}, {}};
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    if (keep[x]) sg.elems.push_back(x);
  }
  sg.gens = reduce_generators(r, sg.elems);
  return sg;
}

}  // namespace

Subgroup centralizer_exhaustive(const FiniteLieRing& r,
                                const std::vector<std::uint32_t>& cs) {
  return centralizer_scan(r, cs, true);
}

Subgroup centralizer_exhaustive_ref(const FiniteLieRing& r,
                                    const std::vector<std::uint32_t>& cs) {
  return centralizer_scan(r, cs, false);
}

CentralizerLattice centralizer_lattice(const FiniteLieRing& r) {
  CentralizerLattice lat;
  for (std::uint32_t x = 0; x < r.order(); ++x) {
    Subgroup c = centralizer_exhaustive(r, {x});
    if (std::find(lat.nodes.begin(), lat.nodes.end(), c) == lat.nodes.end()) {
      lat.nodes.push_back(std::move(c));
    }
  }
  for (std::size_t a = 0; a < lat.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.nodes.size(); ++b) {
      Subgroup meet = subgroup_intersect(lat.nodes[a], lat.nodes[b]);
      if (std::find(lat.nodes.begin(), lat.nodes.end(), meet) ==
          lat.nodes.end()) {
        meet.gens = reduce_generators(r, meet.elems);
        lat.nodes.push_back(std::move(meet));
      }
    }
  }

  const std::size_t n = lat.nodes.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      below[a][b] = a != b && lat.nodes[b].contains_all(lat.nodes[a]) &&
                    lat.nodes[a].size() < lat.nodes[b].size();
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!below[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (below[a][c] && below[c][b]) cover = false;
      }
      if (cover) lat.hasse.emplace_back(a, b);
    }
  }

  // longest chain by size-ordered DP over strict containment
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lat.nodes[a].size() < lat.nodes[b].size();
  });
  std::vector<std::size_t> chain(n, 1);
  for (std::size_t ii = 0; ii < n; ++ii) {
    for (std::size_t jj = 0; jj < ii; ++jj) {
      std::size_t a = idx[jj], b = idx[ii];
      if (below[a][b]) chain[b] = std::max(chain[b], chain[a] + 1);
    }
    lat.max_chain = std::max(lat.max_chain, chain[idx[ii]]);
  }
  return lat;
}

Subgroup ring_full(const FiniteLieRing& r) {
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.generator(i));
  return subgroup_generated(r, std::move(gens));
}

Subgroup ring_center(const FiniteLieRing& r) {
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.generator(i));
  return centralizer_exhaustive(r, gens);
}

RingSeries ring_lower_central_series(const FiniteLieRing& r) {
  RingSeries s;
  s.terms.push_back(ring_full(r));
  while (true) {
    Subgroup next = bracket_subgroup(r, s.terms.front(), s.terms.back());
    if (next == s.terms.back()) {
      s.stabilized = true;
      return s;
    }
    s.terms.push_back(std::move(next));
    if (s.terms.back().size() == 1) {
      s.stabilized = true;
      return s;
    }
  }
}

RingSeries ring_upper_central_series(const FiniteLieRing& r) {
  RingSeries s;
  s.terms.push_back(subgroup_generated(r, {}));
  while (true) {
    const Subgroup& z = s.terms.back();
    Subgroup next{{}, {}};
    for (std::uint32_t x = 0; x < r.order(); ++x) {
      bool in = true;
      for (std::size_t i = 0; i < r.rank() && in; ++i) {
        in = z.contains(r.bracket(x, r.generator(i)));
      }
      if (in) next.elems.push_back(x);
    }
    next.gens = reduce_generators(r, next.elems);
    if (next == s.terms.back()) {
      s.stabilized = true;
      return s;
    }
    s.terms.push_back(std::move(next));
    if (s.terms.back().size() == r.order()) {
      s.stabilized = true;
      return s;
    }
  }
}

std::optional<std::size_t> ring_nilpotency_class(const FiniteLieRing& r) {
  RingSeries s = ring_lower_central_series(r);
  if (s.terms.back().size() != 1) return std::nullopt;
  return s.terms.size() - 1;
}

std::optional<std::size_t> ring_nilpotency_class_within(const FiniteLieRing& r,
                                                        const Subgroup& s) {
  Subgroup cur = s;
  std::size_t c = 0;
  while (cur.size() > 1) {
    Subgroup next = bracket_subgroup(r, s, cur);
    if (next == cur) return std::nullopt;
    cur = std::move(next);
    ++c;
  }
  return c;
}

RingCentralWitnesses ring_upper_series_with_witnesses(const FiniteLieRing& r) {
  RingCentralWitnesses w;
  w.series = ring_upper_central_series(r);
  for (std::size_t step = 0; step + 1 < w.series.terms.size(); ++step) {
    const Subgroup& z = w.series.terms[step];
    const Subgroup& target = w.series.terms[step + 1];

    auto cond = [&](const std::vector<std::uint32_t>& ws) {
      Subgroup out{{}, {}};
      for (std::uint32_t y = 0; y < r.order(); ++y) {
        bool in = true;
        for (std::uint32_t wit : ws) {
          if (!z.contains(r.bracket(y, wit))) {
            in = false;
            break;
          }
        }
        if (in) out.elems.push_back(y);
      }
      return out;
    };

    std::vector<std::uint32_t> chosen;
    Subgroup cur = cond(chosen);
    while (!(cur == target)) {
      std::uint32_t best = 0;
      std::size_t best_size = cur.size();
      for (std::uint32_t cand = 1; cand < r.order(); ++cand) {
        std::vector<std::uint32_t> trial = chosen;
        trial.push_back(cand);
        std::size_t sz = cond(trial).size();
        if (sz < best_size) {
          best_size = sz;
          best = cand;
        }
      }
      if (best == 0) {
        throw InternalCheckError("upper central witness search stalled");
      }
      chosen.push_back(best);
      cur = cond(chosen);
    }
    w.witnesses.push_back(std::move(chosen));
  }
  return w;
}

Subgroup ring_fitting_bruteforce(const FiniteLieRing& r) {
  std::vector<Subgroup> subs = all_subgroups(r);
  std::vector<std::uint32_t> gens;
  for (const Subgroup& s : subs) {
    if (!is_ring_ideal(r, s)) continue;
    if (!ring_nilpotency_class_within(r, s).has_value()) continue;
    gens.insert(gens.end(), s.gens.begin(), s.gens.end());
  }
  Subgroup fit = subgroup_generated(r, std::move(gens));
  if (!is_ring_ideal(r, fit) ||
      !ring_nilpotency_class_within(r, fit).has_value()) {
    throw InternalCheckError(
        "join of nilpotent ideals is not a nilpotent ideal");
  }
  return fit;
}

std::size_t composition_length(const FiniteLieRing& r) {
  std::size_t len = 0;
  for (std::uint32_t m : r.factors()) {
    std::uint64_t v = m;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
      while (v % p == 0) {
        v /= p;
        ++len;
      }
    }
    if (v > 1) ++len;
  }
  return len;
}

LieAlgebra ring_to_algebra(const FiniteLieRing& r) {
  const std::uint32_t p = r.factors().empty() ? 2 : r.factors()[0];
  for (std::uint32_t m : r.factors()) {
    if (m != p) {
      throw WrongCharacteristicError(
          "ring_to_algebra needs all factors equal to one prime");
    }
  }
  Field f = Field::gf(p);
  const std::size_t n = r.rank();
  std::vector<Vec> c(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto t = r.decode(r.bracket(r.generator(i), r.generator(j)));
      Vec v = zero_vec(f, n);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = Scalar(f, static_cast<long>(t[k]));
      }
      c[i * n + j] = v;
    }
  }
  return LieAlgebra::validated(r.name(), f, n, std::move(c));
}

FiniteLieRing algebra_to_ring(const LieAlgebra& l) {
  if (l.field().is_rationals()) {
    throw WrongCharacteristicError("algebra_to_ring needs a prime field");
  }
  const std::uint32_t p = static_cast<std::uint32_t>(l.field().characteristic());
  const std::size_t n = l.dim();
  std::vector<std::uint32_t> factors(n, p);

  std::vector<std::uint64_t> strides(n);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    strides[i] = order;
    order *= p;
  }
  std::vector<std::vector<std::uint32_t>> table(
      n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = l.structure(i, j);
      std::uint64_t code = 0;
      for (std::size_t k = 0; k < n; ++k) {
        code += v[k].value().get_num().get_ui() * strides[k];
      }
      table[i][j] = static_cast<std::uint32_t>(code);
    }
  }
  return FiniteLieRing::validated(l.name(), std::move(factors),
                                  std::move(table));
}

std::vector<std::uint32_t> subspace_points(const FiniteLieRing& r,
                                           const Subspace& s) {
  const std::uint32_t p = r.factors().empty() ? 2 : r.factors()[0];
  for (std::uint32_t m : r.factors()) {
    if (m != p) {
      throw WrongCharacteristicError(
          "subspace_points needs all factors equal to one prime");
    }
  }
  if (s.ambient() != r.rank()) {
    throw DimensionMismatchError("subspace does not match the ring rank");
  }
  const Field f = Field::gf(p);
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> coef(s.dim(), 0);
  while (true) {
    Vec v = zero_vec(f, s.ambient());
    for (std::size_t i = 0; i < s.dim(); ++i) {
      vec_axpy(v, Scalar(f, static_cast<long>(coef[i])), s.basis().row(i));
    }
    std::vector<std::uint32_t> tuple(s.ambient());
    for (std::size_t k = 0; k < s.ambient(); ++k) {
      tuple[k] = static_cast<std::uint32_t>(v[k].value().get_num().get_ui());
    }
    points.push_back(r.encode(tuple));

    std::size_t at = 0;
    while (at < coef.size()) {
      if (++coef[at] < p) break;
      coef[at] = 0;
      ++at;
    }
    if (at == coef.size()) break;
  }
  return sorted_unique(std::move(points));
}

FinringSuiteReport finring_suite(const FiniteLieRing& r, bool with_lattice,
                                 bool with_fitting) {
  FinringSuiteReport rep;
  rep.order = r.order();
  rep.comp_length = composition_length(r);

  RingCentralWitnesses w = ring_upper_series_with_witnesses(r);
  rep.nilpotency_class = ring_nilpotency_class(r);
  if (rep.nilpotency_class) {
    rep.upper_lower_agree =
        w.series.terms.size() == *rep.nilpotency_class + 1 &&
        w.series.terms.back().size() == r.order();
    rep.class_within_comp_length = *rep.nilpotency_class <= rep.comp_length;
  } else {
    rep.upper_lower_agree = w.series.terms.back().size() != r.order();
  }

  for (std::size_t step = 0; step + 1 < w.series.terms.size(); ++step) {
    rep.max_witnesses = std::max(rep.max_witnesses, w.witnesses[step].size());
    const Subgroup& z = w.series.terms[step];
    Subgroup check{{}, {}};
    for (std::uint32_t y = 0; y < r.order(); ++y) {
      bool in = true;
      for (std::uint32_t wit : w.witnesses[step]) {
        if (!z.contains(r.bracket(y, wit))) {
          in = false;
          break;
        }
      }
      if (in) check.elems.push_back(y);
    }
    if (!(check.elems == w.series.terms[step + 1].elems)) {
      rep.witnesses_ok = false;
    }
  }

  if (with_lattice) {
    CentralizerLattice lat = centralizer_lattice(r);
    rep.lattice_nodes = lat.nodes.size();
    rep.lattice_max_chain = lat.max_chain;
  }
  if (with_fitting) {
    try {
      Subgroup fit = ring_fitting_bruteforce(r);
      rep.fitting_size = fit.size();
      if (rep.nilpotency_class && fit.size() != r.order()) {
        rep.fitting_ok = false;  // nilpotent ring must be its own radical
      }
    } catch (const CapExceededError&) {
      rep.fitting_size = 0;  // lattice too big; skip without failing
    }
  }
  return rep;
}

}  // namespace lieforge
