#pragma once

// Finite metric and pseudometric spaces with exact distances, metric quotients,
// and optimal Lipschitz / quasi-isometry constants between finite spaces.

#include "coarse/common.hpp"
#include "coarse/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

/// A finite space with a distance matrix over `Scalar` (std::int64_t, Rational or Surd).
///
/// The constructor only checks shape; the metric axioms are checked by
/// `validate_metric`, so that invalid inputs can still be reported on.
template <class Scalar>
class MetricSpace {
 public:
  using scalar_type = Scalar;

  MetricSpace() = default;
  MetricSpace(std::vector<std::string> points, std::vector<std::vector<Scalar>> dist,
              bool pseudometric = false)
      : points_(std::move(points)), rows_(std::move(dist)), pseudometric_(pseudometric) {
    if (rows_.size() != points_.size()) {
      throw InputError("distance matrix has " + std::to_string(rows_.size()) + " rows for " +
                       std::to_string(points_.size()) + " points");
    }
    for (const auto& row : rows_) {
      if (row.size() != points_.size()) throw InputError("distance matrix is not square");
    }
  }

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::string& point(std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }
  const Scalar& dist(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<Scalar>& row(std::size_t i) const { return rows_[i]; }
  bool pseudometric() const { return pseudometric_; }
  void set_pseudometric(bool on) { pseudometric_ = on; }

  std::optional<std::size_t> index_of(const std::string& id) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == id) return i;
    }
    return std::nullopt;
  }

  /// Appends a point; `distances[i]` is its distance to existing point i.
  std::size_t add_point(std::string id, const std::vector<Scalar>& distances) {
    if (distances.size() != points_.size()) throw InputError("add_point: wrong row length");
    for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].push_back(distances[i]);
    std::vector<Scalar> row = distances;
    row.push_back(Scalar(0));
    rows_.push_back(std::move(row));
    points_.push_back(std::move(id));
    return points_.size() - 1;
  }

  /// The subspace on the given point indices, in the given order.
  MetricSpace subspace(const std::vector<std::size_t>& indices) const {
    std::vector<std::string> pts;
    std::vector<std::vector<Scalar>> d(indices.size(), std::vector<Scalar>(indices.size()));
    for (std::size_t a = 0; a < indices.size(); ++a) {
      pts.push_back(points_[indices[a]]);
      for (std::size_t b = 0; b < indices.size(); ++b) d[a][b] = rows_[indices[a]][indices[b]];
    }
    return MetricSpace(std::move(pts), std::move(d), pseudometric_);
  }

  Scalar diameter() const {
    Scalar best(0);
    for (const auto& row : rows_) {
      for (const auto& v : row) {
        if (best < v) best = v;
      }
    }
    return best;
  }

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<Scalar>> rows_;
  bool pseudometric_ = false;
};

using NatMetricSpace = MetricSpace<std::int64_t>;
using RatMetricSpace = MetricSpace<Rational>;
using RootMetricSpace = MetricSpace<Surd>;

RatMetricSpace to_rational_space(const NatMetricSpace& space);

/// Total assignment of domain points to codomain points, by index.
struct PointMap {
  std::vector<std::size_t> images;
  std::size_t codomain_size = 0;

  std::size_t operator()(std::size_t x) const { return images[x]; }
  static PointMap identity(std::size_t n);
};

/// Throws InputError unless `map` is a total map from a `domain_size`-point space
/// into a `codomain_size`-point space.
void check_point_map(const PointMap& map, std::size_t domain_size, std::size_t codomain_size);

/// Axioms checked: "nonneg", "diagonal", "symmetry", "positivity" (metric mode only)
/// and "triangle" with witness (x, y, z) meaning d(x,z) > d(x,y) + d(y,z).
template <class Scalar>
ValidationReport validate_metric(const MetricSpace<Scalar>& space);

struct QuotientResult {
  RatMetricSpace space;
  PointMap projection;
};

/// Identifies points at distance 0; each class is represented by its least id.
QuotientResult metric_quotient(const RatMetricSpace& space);
/// Integer flavour used by amalgamation.
std::pair<NatMetricSpace, PointMap> metric_quotient(const NatMetricSpace& space);

using PointPair = std::pair<std::size_t, std::size_t>;

template <class Scalar>
struct LipschitzReport {
  std::optional<Scalar> k_lip;  // absent when some pair has d = 0 but a positive image distance
  Scalar k_large{0};
  Scalar k_short{0};
  Rational delta;
  std::optional<PointPair> lip_witness;
  std::optional<PointPair> large_witness;
  std::optional<PointPair> short_witness;
  /// max(k_short, k_large * (1 + 1/delta)): the splitting bound on k_lip.
  Scalar splitting_bound{0};
};

/// Minimal constants of the three Lipschitz conditions for `map : X -> Y`.
template <class Scalar>
LipschitzReport<Scalar> fit_constants(const PointMap& map, const RatMetricSpace& x,
                                      const MetricSpace<Scalar>& y, const Rational& delta);

/// max over x of d_Y(phi x, psi x).
template <class Scalar>
Scalar closeness(const PointMap& phi, const PointMap& psi, const MetricSpace<Scalar>& y);

struct QIReport {
  Rational forward_k_large;
  Rational backward_k_large;
  Rational closeness_on_x;  // psi o phi versus id_X
  Rational closeness_on_y;  // phi o psi versus id_Y
  /// Single constant K >= 1 bounding all four quantities above.
  Rational k;
  bool quasi_isometry = true;
};

QIReport qi_constants(const RatMetricSpace& x, const RatMetricSpace& y, const PointMap& forward,
                      const PointMap& backward);

}  // namespace coarse
