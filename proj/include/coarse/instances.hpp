#pragma once

// Named example objects (symmetric groups, Cayley graphs, the Petersen graph) and
// seeded random instances for the property suites.

#include "coarse/amalgam.hpp"
#include "coarse/birkhoff.hpp"
#include "coarse/graph_action.hpp"
#include "coarse/group.hpp"
#include "coarse/metric.hpp"
#include "coarse/permgroup.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace coarse {

using Rng = std::mt19937_64;

/// Permutation of degree n given by disjoint cycles.
Perm perm_from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

/// S_n generated by (0 1) and (0 1 … n−1).
PermGroup symmetric_group(std::size_t degree);

/// Z_n acting on itself by rotation.
PermGroup cyclic_perm_group(std::size_t n);

/// Cayley graph of `group` for the symmetric closure of `generators`, edges {g, gs},
/// with the group acting by left translation. Vertex i is element i of enumerate(group).
GroupAction cayley_action(const PermGroup& group, const std::vector<Perm>& generators,
                          std::size_t cap = kDefaultEnumerationCap);

/// Petersen graph on the 2-subsets of {0,…,4} (disjoint subsets adjacent) with S_5
/// acting through its action on subsets.
GroupAction petersen_action();

// Random instances. Every function draws only from the supplied engine.

/// A cyclic, dihedral or direct-product group of order at most max_order.
FiniteGroup random_small_group(Rng& rng, std::size_t max_order);

/// A valid chain: V_{n_min} random symmetric, V_{n+1} = V_n³ plus random symmetric
/// extras, ending at the whole group.
NeighborhoodChain random_chain(const FiniteGroup& group, Rng& rng);

/// Shortest-path closure of random rational edge weights on `size` points.
RatMetricSpace random_rational_space(Rng& rng, std::size_t size);

PointMap random_point_map(Rng& rng, std::size_t domain_size, std::size_t codomain_size);

/// Adds one point with a uniformly drawn admissible distance to each existing point
/// (values in [1, max_dist]); retries when the cap leaves no room.
void extend_randomly(NatMetricSpace& space, Rng& rng, std::int64_t max_dist, const std::string& id);

NatMetricSpace random_nat_space(Rng& rng, std::size_t size, std::int64_t max_dist);

struct AmalgamInstance {
  NatMetricSpace a, b1, b2;
  Embedding eta1, eta2;
};

/// B_i extends a copy of A (placed at shuffled positions) by extra points.
AmalgamInstance random_amalgam_instance(Rng& rng, std::size_t max_base, std::size_t max_side,
                                        std::int64_t max_dist);

struct FunctorialityInstance {
  AmalgamInstance base;
  NatMetricSpace b1p;
  Embedding eta1p, iota;
};

/// B₁′ extends B₁ so that |C′| = |B₁′| + |B₂| − |A| ≤ max_c; ι is the inclusion.
FunctorialityInstance random_functoriality_instance(Rng& rng, std::size_t max_c, std::int64_t max_dist);

/// Random 2-generator subgroup of S_n (n in [min_degree, max_degree]) of order ≤ max_order.
PermGroup random_perm_group(Rng& rng, std::size_t min_degree, std::size_t max_degree, std::size_t max_order);

}  // namespace coarse
