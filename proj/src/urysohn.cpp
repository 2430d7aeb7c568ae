#include "coarse/urysohn.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace coarse {

bool is_katetov(const NatMetricSpace& x, const KatetovFunction& f) {
  if (f.subset.size() != f.values.size()) return false;
  for (std::size_t i = 0; i < f.subset.size(); ++i) {
    if (f.values[i] < 1) return false;
    for (std::size_t j = i + 1; j < f.subset.size(); ++j) {
      const std::int64_t d = x.dist(f.subset[i], f.subset[j]);
      if (std::llabs(f.values[i] - f.values[j]) > d || d > f.values[i] + f.values[j]) return false;
    }
  }
  return true;
}

std::vector<KatetovFunction> katetov_extensions(const NatMetricSpace& x, const std::vector<std::size_t>& subset,
                                                std::int64_t r) {
  if (subset.empty()) throw InputError("katetov_extensions: empty subset");
  if (r < 1) throw InputError("katetov_extensions: value cap must be at least 1");
  for (std::size_t p : subset) {
    if (p >= x.size()) throw InputError("katetov_extensions: subset point out of range");
  }
  std::vector<KatetovFunction> out;
  KatetovFunction f{subset, std::vector<std::int64_t>(subset.size(), 1)};
  while (true) {
    if (is_katetov(x, f)) out.push_back(f);
    // Odometer with the first coordinate most significant.
    std::size_t k = subset.size();
    while (k > 0 && f.values[k - 1] == r) f.values[--k] = 1;
    if (k == 0) break;
    ++f.values[k - 1];
  }
  return out;
}

namespace {

bool realised(const NatMetricSpace& x, const KatetovFunction& f) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool all = true;
    for (std::size_t i = 0; i < f.subset.size() && all; ++i) all = x.dist(p, f.subset[i]) == f.values[i];
    if (all) return true;
  }
  return false;
}

// Combinations of {0..n-1} of size k in lexicographic order.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

UrysohnApprox build_approx(const NatMetricSpace& seed, const UrysohnParams& params) {
  if (seed.empty() || !validate_metric(seed).ok()) throw InputError("build_approx: seed is not a metric space");
  if (params.subset_size < 1 || params.value_cap < 1) throw InputError("build_approx: s and r must be >= 1");

  UrysohnApprox approx{seed, {}, params, false};
  NatMetricSpace& space = approx.space;
  for (std::size_t round = 0; round < params.rounds && !approx.partial; ++round) {
    const std::size_t existing = space.size();
    for (std::size_t k = 1; k <= params.subset_size && !approx.partial; ++k) {
      for_each_combination(existing, k, [&](const std::vector<std::size_t>& subset) {
        for (auto& f : katetov_extensions(space, subset, params.value_cap)) {
          if (realised(space, f)) continue;
          if (space.size() >= params.hard_cap) {
            approx.partial = true;
            return false;
          }
          std::vector<std::int64_t> row(space.size());
          for (std::size_t x = 0; x < space.size(); ++x) {
            std::int64_t best = -1;
            for (std::size_t i = 0; i < subset.size(); ++i) {
              std::int64_t via = f.values[i] + space.dist(subset[i], x);
              if (best < 0 || via < best) best = via;
            }
            row[x] = best;
          }
          std::size_t point = space.add_point("u" + std::to_string(space.size()), row);
          approx.log.push_back({std::move(f), point, round});
        }
        return true;
      });
    }
  }
  return approx;
}

Graph distance_one_graph(const NatMetricSpace& x) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x.dist(i, j) == 1) edges.emplace_back(i, j);
    }
  }
  return Graph(x.size(), edges);
}

PathMetricReport verify_path_metric(const NatMetricSpace& x, std::optional<std::int64_t> max_distance) {
  Graph graph = distance_one_graph(x);
  PathMetricReport report;
  report.connected = graph.connected();
  for (std::size_t a = 0; a < x.size(); ++a) {
    auto rho = graph.distances_from(a);
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      const std::int64_t d = x.dist(a, b);
      if (max_distance && d > *max_distance) continue;
      ++report.pairs_checked;
      if (rho[b] && static_cast<std::int64_t>(*rho[b]) == d) {
        ++report.pairs_equal;
      } else {
        report.failures.push_back({a, b, d, rho[b]});
      }
    }
  }
  return report;
}

std::optional<Embedding> embed_space(const NatMetricSpace& x, const NatMetricSpace& target) {
  return find_embedding(target, x);
}

std::optional<std::size_t> extend_partial_isometry(const NatMetricSpace& x, const PartialIsometry& partial,
                                                   std::size_t new_point) {
  if (new_point >= x.size()) throw InputError("extend_partial_isometry: new point out of range");
  std::set<std::size_t> domain, image;
  for (auto [from, to] : partial) {
    if (from >= x.size() || to >= x.size()) throw InputError("extend_partial_isometry: point out of range");
    if (!domain.insert(from).second || !image.insert(to).second) {
      throw InputError("extend_partial_isometry: partial map is not injective");
    }
  }
  for (auto [a, pa] : partial) {
    for (auto [b, pb] : partial) {
      if (x.dist(a, b) != x.dist(pa, pb)) throw InputError("extend_partial_isometry: partial map is not isometric");
    }
  }
  if (domain.contains(new_point)) throw InputError("extend_partial_isometry: new point already in the domain");

  for (std::size_t y = 0; y < x.size(); ++y) {
    bool ok = true;
    for (auto [from, to] : partial) {
      if (x.dist(y, to) != x.dist(new_point, from)) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
  }
  return std::nullopt;
}

}  // namespace coarse
