#pragma once

// Randomised property suites over the whole library. Each takes an explicit seed and
// returns an Outcome whose checks are the asserted properties.

#include "coarse/scenario.hpp"

#include <cstdint>

namespace coarse {

/// ½L ≤ ℓ ≤ L and the pseudolength axioms on random chains.
Outcome birkhoff_bound_suite(std::uint64_t seed, std::size_t instances = 100, std::size_t max_order = 2000);

/// k_lip ≤ max(k_short, k_large(1 + 1/δ)) on random maps, and k_short ≥ √n for the
/// square-root metric on {i/n² : i ≤ n}, n ≤ sqrt_max_n.
Outcome lipschitz_splitting_suite(std::uint64_t seed, std::size_t instances = 100, std::size_t sqrt_max_n = 12);

/// Word metrics of Z_m and box-truncated Z² against closed forms, and K = 1 geodesy.
Outcome word_metric_oracle_suite(std::uint64_t seed, std::size_t max_m = 40, int max_radius = 5,
                                 std::size_t random_groups = 30);

/// Amalgam validity and functoriality on random instances.
Outcome amalgamation_suite(std::uint64_t seed, std::size_t instances = 200, std::size_t functoriality_instances = 200);

/// Universality for small types and the path-metric property of build_approx.
Outcome urysohn_suite(std::size_t s = 2, std::int64_t r = 4, std::size_t rounds = 2, std::size_t hard_cap = 5000);

/// Milnor–Schwarz containments for the Cayley graph of S₄ and the Petersen graph.
Outcome milnor_schwarz_suite();

/// The three double-coset conditions agree on random instances.
Outcome double_coset_suite(std::uint64_t seed, std::size_t instances = 50, std::size_t max_order = 5000);

/// Independence axioms and the boundedness containment on a truncated tree.
Outcome independence_suite(std::uint64_t seed, std::size_t valence = 3, std::size_t depth = 2,
                           std::size_t samples = 200);

}  // namespace coarse
