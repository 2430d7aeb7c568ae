#include "coarse/metric.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coarse {

RatMetricSpace to_rational_space(const NatMetricSpace& space) {
  std::vector<std::vector<Rational>> d(space.size(), std::vector<Rational>(space.size()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) d[i][j] = Rational(space.dist(i, j));
  }
  return RatMetricSpace(space.points(), std::move(d), space.pseudometric());
}

PointMap PointMap::identity(std::size_t n) {
  PointMap m;
  m.images.resize(n);
  std::iota(m.images.begin(), m.images.end(), std::size_t{0});
  m.codomain_size = n;
  return m;
}

void check_point_map(const PointMap& map, std::size_t domain_size, std::size_t codomain_size) {
  if (map.images.size() != domain_size) {
    throw InputError("map assigns " + std::to_string(map.images.size()) + " images for a " +
                     std::to_string(domain_size) + "-point domain");
  }
  if (map.codomain_size != codomain_size) throw InputError("map codomain does not match target space");
  for (std::size_t x : map.images) {
    if (x >= codomain_size) throw InputError("map image out of range");
  }
}

template <class Scalar>
ValidationReport validate_metric(const MetricSpace<Scalar>& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  const Scalar zero(0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!(space.dist(x, x) == zero)) report.violations.push_back({"diagonal", {x}});
    for (std::size_t y = 0; y < n; ++y) {
      if (space.dist(x, y) < zero) report.violations.push_back({"nonneg", {x, y}});
      if (x < y) {
        if (!(space.dist(x, y) == space.dist(y, x))) report.violations.push_back({"symmetry", {x, y}});
        if (!space.pseudometric() && space.dist(x, y) == zero) {
          report.violations.push_back({"positivity", {x, y}});
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (!sum_at_least(space.dist(x, y), space.dist(y, z), space.dist(x, z))) {
          report.violations.push_back({"triangle", {x, y, z}});
        }
      }
    }
  }
  return report;
}

template ValidationReport validate_metric(const NatMetricSpace&);
template ValidationReport validate_metric(const RatMetricSpace&);
template ValidationReport validate_metric(const RootMetricSpace&);

namespace {

// Class representative (least id) for every point under d = 0.
template <class Scalar>
std::vector<std::size_t> zero_classes(const MetricSpace<Scalar>& space) {
  if (!validate_metric(space).ok()) {
    // Re-check in pseudometric mode: only the pseudometric axioms are required.
    MetricSpace<Scalar> relaxed = space;
    relaxed.set_pseudometric(true);
    if (!validate_metric(relaxed).ok()) throw InputError("metric_quotient: input is not a pseudometric");
  }
  const std::size_t n = space.size();
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < n; ++y) {
      if (space.dist(x, y) == Scalar(0) && space.point(y) < space.point(rep[x])) rep[x] = y;
    }
  }
  return rep;
}

template <class Scalar>
std::pair<MetricSpace<Scalar>, PointMap> quotient_impl(const MetricSpace<Scalar>& space) {
  std::vector<std::size_t> rep = zero_classes(space);
  std::vector<std::size_t> kept;
  std::map<std::size_t, std::size_t> position;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!position.contains(rep[x])) {
      position[rep[x]] = kept.size();
      kept.push_back(rep[x]);
    }
  }
  MetricSpace<Scalar> out = space.subspace(kept);
  out.set_pseudometric(false);
  PointMap projection;
  projection.codomain_size = kept.size();
  for (std::size_t x = 0; x < space.size(); ++x) projection.images.push_back(position[rep[x]]);
  return {std::move(out), std::move(projection)};
}

}  // namespace

QuotientResult metric_quotient(const RatMetricSpace& space) {
  auto [out, projection] = quotient_impl(space);
  return {std::move(out), std::move(projection)};
}

std::pair<NatMetricSpace, PointMap> metric_quotient(const NatMetricSpace& space) {
  return quotient_impl(space);
}

template <class Scalar>
LipschitzReport<Scalar> fit_constants(const PointMap& map, const RatMetricSpace& x,
                                      const MetricSpace<Scalar>& y, const Rational& delta) {
  if (x.empty() || y.empty()) throw InputError("fit_constants: empty space");
  if (delta <= 0) throw InputError("fit_constants: delta must be positive");
  check_point_map(map, x.size(), y.size());

  LipschitzReport<Scalar> report;
  report.delta = delta;
  report.k_lip = Scalar(0);
  const Scalar zero(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Rational& d = x.dist(i, j);
      const Scalar& image = y.dist(map(i), map(j));
      const PointPair pair{i, j};

      Scalar large = image / Rational(d + 1);
      if (!report.large_witness || report.k_large < large) {
        report.k_large = large;
        report.large_witness = pair;
      }
      if (d == 0) {
        if (zero < image) report.k_lip.reset();
        continue;
      }
      Scalar ratio = image / d;
      if (report.k_lip && (!report.lip_witness || *report.k_lip < ratio)) {
        report.k_lip = ratio;
        report.lip_witness = pair;
      }
      if (d <= delta && (!report.short_witness || report.k_short < ratio)) {
        report.k_short = ratio;
        report.short_witness = pair;
      }
    }
  }
  if (!report.k_lip) report.lip_witness.reset();
  Scalar spread = report.k_large * Rational(1 + 1 / delta);
  report.splitting_bound = std::max(report.k_short, spread);
  return report;
}

template LipschitzReport<Rational> fit_constants(const PointMap&, const RatMetricSpace&,
                                                 const RatMetricSpace&, const Rational&);
template LipschitzReport<Surd> fit_constants(const PointMap&, const RatMetricSpace&,
                                             const RootMetricSpace&, const Rational&);

template <class Scalar>
Scalar closeness(const PointMap& phi, const PointMap& psi, const MetricSpace<Scalar>& y) {
  if (phi.images.size() != psi.images.size()) throw InputError("closeness: domain mismatch");
  check_point_map(phi, phi.images.size(), y.size());
  check_point_map(psi, psi.images.size(), y.size());
  Scalar best(0);
  for (std::size_t x = 0; x < phi.images.size(); ++x) {
    const Scalar& d = y.dist(phi(x), psi(x));
    if (best < d) best = d;
  }
  return best;
}

template Rational closeness(const PointMap&, const PointMap&, const RatMetricSpace&);
template Surd closeness(const PointMap&, const PointMap&, const RootMetricSpace&);
template std::int64_t closeness(const PointMap&, const PointMap&, const NatMetricSpace&);

namespace {

PointMap compose(const PointMap& outer, const PointMap& inner) {
  PointMap out;
  out.codomain_size = outer.codomain_size;
  for (std::size_t v : inner.images) out.images.push_back(outer(v));
  return out;
}

}  // namespace

QIReport qi_constants(const RatMetricSpace& x, const RatMetricSpace& y, const PointMap& forward,
                      const PointMap& backward) {
  if (x.empty() || y.empty()) throw InputError("qi_constants: empty space");
  check_point_map(forward, x.size(), y.size());
  check_point_map(backward, y.size(), x.size());

  QIReport report;
  report.forward_k_large = fit_constants(forward, x, y, Rational(1)).k_large;
  report.backward_k_large = fit_constants(backward, y, x, Rational(1)).k_large;
  report.closeness_on_x = closeness(compose(backward, forward), PointMap::identity(x.size()), x);
  report.closeness_on_y = closeness(compose(forward, backward), PointMap::identity(y.size()), y);
  report.k = std::max({Rational(1), report.forward_k_large, report.backward_k_large,
                       report.closeness_on_x, report.closeness_on_y});
  // Finite spaces are bounded, so the pair is always a quasi-isometry with constant k.
  report.quasi_isometry = true;
  return report;
}

}  // namespace coarse
