#pragma once

// Finite approximations of the integral Urysohn space by repeated one-point
// Katětov extensions, and probes of its universality and path-metric properties.

#include "coarse/amalgam.hpp"
#include "coarse/graph.hpp"
#include "coarse/metric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace coarse {

/// Distance profile of a prospective new point over `subset`:
/// |f(x) − f(y)| ≤ d(x,y) ≤ f(x) + f(y) and f ≥ 1.
struct KatetovFunction {
  std::vector<std::size_t> subset;
  std::vector<std::int64_t> values;  // values[i] = f(subset[i])
};

bool is_katetov(const NatMetricSpace& x, const KatetovFunction& f);

/// All Katětov functions on `subset` with values in [1, r], in lexicographic order.
std::vector<KatetovFunction> katetov_extensions(const NatMetricSpace& x, const std::vector<std::size_t>& subset,
                                                std::int64_t r);

struct UrysohnParams {
  std::size_t subset_size = 2;   // s
  std::int64_t value_cap = 4;    // r
  std::size_t rounds = 2;
  std::size_t hard_cap = 5000;   // maximum number of points
};

struct BuildStep {
  KatetovFunction function;
  std::size_t point;  // index of the adjoined point
  std::size_t round;
};

struct UrysohnApprox {
  NatMetricSpace space;
  std::vector<BuildStep> log;
  UrysohnParams params;
  bool partial = false;  // the hard cap stopped the build
};

/// Each round ranges over subsets (size ≤ s) of the points present when the round
/// starts and every Katětov function with values ≤ r on them; a function not already
/// realised exactly by some point gets a new point at distance
/// min_{z ∈ subset} f(z) + d(z, x) from every existing x.
UrysohnApprox build_approx(const NatMetricSpace& seed, const UrysohnParams& params);

/// The graph on the same points with an edge wherever d = 1.
Graph distance_one_graph(const NatMetricSpace& x);

struct PathMetricFailure {
  std::size_t x, y;
  std::int64_t distance;
  std::optional<std::size_t> path_length;  // nullopt: disconnected
};

struct PathMetricReport {
  bool connected = false;
  std::size_t pairs_checked = 0;
  std::size_t pairs_equal = 0;
  std::vector<PathMetricFailure> failures;

  bool holds() const { return pairs_checked == pairs_equal; }
};

/// Compares the distance-one graph's path metric ρ with d on all pairs with d ≤ max_distance
/// (all pairs when max_distance is nullopt).
PathMetricReport verify_path_metric(const NatMetricSpace& x, std::optional<std::int64_t> max_distance = std::nullopt);

/// Lexicographically least embedding target → x.
std::optional<Embedding> embed_space(const NatMetricSpace& x, const NatMetricSpace& target);

/// Partial isometry as (domain point, image point) pairs.
using PartialIsometry = std::vector<std::pair<std::size_t, std::size_t>>;

/// One back-and-forth step: the least y with d(y, p(x)) = d(new_point, x) for every x in
/// the domain of p.
std::optional<std::size_t> extend_partial_isometry(const NatMetricSpace& x, const PartialIsometry& partial,
                                                   std::size_t new_point);

}  // namespace coarse
