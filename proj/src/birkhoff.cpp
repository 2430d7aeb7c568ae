#include "coarse/birkhoff.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>

namespace coarse {

NeighborhoodChain::NeighborhoodChain(const FiniteGroup& group, int n_min,
                                     std::vector<std::vector<Element>> levels)
    : group_(&group), n_min_(n_min) {
  if (levels.empty()) throw InputError("chain needs at least one level");
  for (const auto& members : levels) {
    std::vector<char> bits(group.order(), 0);
    for (Element g : members) {
      if (g >= group.order()) throw InputError("chain level references an unknown element");
      bits[g] = 1;
    }
    levels_.push_back(std::move(bits));
  }
}

bool NeighborhoodChain::contains(int n, Element g) const {
  if (n < n_min_) return g == group_->identity();
  if (n > n_max()) return true;
  return levels_[static_cast<std::size_t>(n - n_min_)][g] != 0;
}

std::vector<Element> NeighborhoodChain::level(int n) const {
  std::vector<Element> out;
  for (Element g = 0; g < group_->order(); ++g) {
    if (contains(n, g)) out.push_back(g);
  }
  return out;
}

std::optional<int> NeighborhoodChain::first_level(Element g) const {
  for (int n = n_min_; n <= n_max(); ++n) {
    if (contains(n, g)) return n;
  }
  return std::nullopt;
}

NeighborhoodChain NeighborhoodChain::with_bottom_level(std::vector<Element> members) const {
  std::vector<std::vector<Element>> levels{std::move(members)};
  for (int n = n_min_; n <= n_max(); ++n) levels.push_back(level(n));
  return NeighborhoodChain(*group_, n_min_ - 1, std::move(levels));
}

NeighborhoodChain NeighborhoodChain::with_level_enlarged(int n, const std::vector<Element>& members) const {
  std::vector<std::vector<Element>> levels;
  for (int m = n_min_; m <= n_max(); ++m) {
    auto current = level(m);
    if (m == n) current.insert(current.end(), members.begin(), members.end());
    levels.push_back(std::move(current));
  }
  return NeighborhoodChain(*group_, n_min_, std::move(levels));
}

ValidationReport validate_chain(const NeighborhoodChain& chain) {
  ValidationReport report;
  const FiniteGroup& g = chain.group();
  const std::size_t order = g.order();
  auto idx = [&](int n) { return static_cast<std::size_t>(n - chain.n_min()); };

  for (int n = chain.n_min(); n <= chain.n_max(); ++n) {
    if (!chain.contains(n, g.identity())) report.violations.push_back({"identity", {idx(n)}});
    for (Element x = 0; x < order; ++x) {
      if (chain.contains(n, x) && !chain.contains(n, g.inv(x))) {
        report.violations.push_back({"symmetry", {idx(n), x}});
      }
      if (n < chain.n_max() && chain.contains(n, x) && !chain.contains(n + 1, x)) {
        report.violations.push_back({"monotone", {idx(n), x}});
      }
    }
  }
  for (Element x = 0; x < order; ++x) {
    if (!chain.contains(chain.n_max(), x)) report.violations.push_back({"exhaustion", {x}});
  }

  for (int n = chain.n_min(); n < chain.n_max(); ++n) {
    const std::vector<Element> members = chain.level(n);
    // square[p] = (a, b) with a·b = p, a, b ∈ V_n.
    std::vector<std::optional<std::pair<Element, Element>>> square(order);
    for (Element a : members) {
      for (Element b : members) {
        Element p = g.mul(a, b);
        if (!square[p]) square[p] = std::pair{a, b};
      }
    }
    std::vector<char> reported(order, 0);
    for (Element p = 0; p < order; ++p) {
      if (!square[p]) continue;
      for (Element c : members) {
        Element q = g.mul(p, c);
        if (!chain.contains(n + 1, q) && !reported[q]) {
          reported[q] = 1;
          report.violations.push_back({"cube", {idx(n), square[p]->first, square[p]->second, c}});
        }
      }
    }
  }
  return report;
}

Rational capital_L(const NeighborhoodChain& chain, Element g) {
  if (g >= chain.group().order()) throw InputError("element not in group");
  if (g == chain.group().identity()) return Rational(0);
  auto n = chain.first_level(g);
  if (!n) throw InputError("element lies in no level of the chain");
  return pow2(*n);
}

LengthFunction birkhoff_length(const NeighborhoodChain& chain) {
  const FiniteGroup& g = chain.group();
  const std::size_t order = g.order();
  if (order > kBirkhoffOrderCap) throw CapExceeded("birkhoff_length: group order", order);
  if (!validate_chain(chain).ok()) throw InputError("birkhoff_length: invalid chain");
  if (chain.n_max() - chain.n_min() > 60) throw InputError("birkhoff_length: chain spans too many levels");

  // Weights scaled by 2^{-n_min} are integers.
  std::vector<std::uint64_t> weight(order, 0);
  for (Element h = 0; h < order; ++h) {
    if (h == g.identity()) continue;
    weight[h] = std::uint64_t{1} << (*chain.first_level(h) - chain.n_min());
  }

  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(order, kInf);
  std::vector<char> done(order, 0);
  dist[g.identity()] = 0;
  // Dense Dijkstra: the edge family g -> gh is complete.
  for (std::size_t step = 0; step < order; ++step) {
    Element u = 0;
    std::uint64_t best = kInf;
    for (Element x = 0; x < order; ++x) {
      if (!done[x] && dist[x] < best) {
        best = dist[x];
        u = x;
      }
    }
    if (best == kInf) break;
    done[u] = 1;
    for (Element h = 0; h < order; ++h) {
      if (weight[h] == 0) continue;
      Element v = g.mul(u, h);
      if (!done[v] && best + weight[h] < dist[v]) dist[v] = best + weight[h];
    }
  }

  LengthFunction length;
  const Rational scale = pow2(chain.n_min());
  length.separates_points = true;
  for (Element x = 0; x < order; ++x) {
    length.values.push_back(Rational(dist[x]) * scale);
    if (x != g.identity() && dist[x] == 0) length.separates_points = false;
  }
  return length;
}

namespace {

// Values times the lcm of their denominators, when every product fits comfortably in int64.
std::optional<std::vector<std::int64_t>> common_denominator_form(const std::vector<Rational>& values) {
  BigInt lcm_den = 1;
  for (const auto& v : values) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(v)));
  const BigInt limit = BigInt(1) << 61;
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    BigInt n = numerator(v) * (lcm_den / denominator(v));
    if (abs(n) >= limit) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(n));
  }
  return out;
}

}  // namespace

ValidationReport validate_length(const FiniteGroup& group, const LengthFunction& length) {
  ValidationReport report;
  if (length.values.size() != group.order()) throw InputError("length function does not match group");
  if (length(group.identity()) != 0) report.violations.push_back({"zero", {group.identity()}});
  for (Element x = 0; x < group.order(); ++x) {
    if (length(x) < 0) report.violations.push_back({"nonneg", {x}});
    if (length(x) != length(group.inv(x))) report.violations.push_back({"symmetry", {x}});
  }
  auto scaled = common_denominator_form(length.values);
  for (Element x = 0; x < group.order(); ++x) {
    for (Element y = 0; y < group.order(); ++y) {
      const Element xy = group.mul(x, y);
      const bool over = scaled ? (*scaled)[xy] > (*scaled)[x] + (*scaled)[y]
                               : length(xy) > length(x) + length(y);
      if (over) report.violations.push_back({"subadditivity", {x, y}});
    }
  }
  return report;
}

LengthFunction word_length_function(const FiniteGroup& group, const std::vector<Element>& generators) {
  const auto gens = symmetric_closure(group, generators);
  std::vector<int> dist(group.order(), -1);
  std::queue<Element> queue;
  dist[group.identity()] = 0;
  queue.push(group.identity());
  while (!queue.empty()) {
    Element u = queue.front();
    queue.pop();
    for (Element s : gens) {
      Element v = group.mul(u, s);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  LengthFunction length;
  length.separates_points = true;
  for (int d : dist) {
    if (d < 0) throw InputError("word_length_function: generators do not generate the group");
    length.values.emplace_back(d);
  }
  return length;
}

MinimalityReport check_minimality(const FiniteGroup& group, const LengthFunction& length,
                                  const std::vector<Element>& u, const Rational& eps) {
  if (eps <= 0) throw InputError("check_minimality: eps must be positive");
  std::vector<char> in_u(group.order(), 0);
  for (Element x : u) {
    if (x >= group.order()) throw InputError("check_minimality: U references an unknown element");
    in_u[x] = 1;
  }
  if (!in_u[group.identity()]) throw InputError("check_minimality: U must contain the identity");

  MinimalityReport report;
  for (Element g = 0; g < group.order(); ++g) {
    const std::size_t order = group.element_order(g);
    Element power = group.identity();
    for (std::size_t n = 1; n <= order; ++n) {
      power = group.mul(power, g);
      if (!in_u[power]) break;
      ++report.pairs_scanned;
      const Rational scaled = Rational(static_cast<long long>(n)) * length(g);
      const Rational ratio = length(g) > 0 ? Rational(length(power) / scaled) : Rational(0);
      if (length(power) > scaled) {
        report.upper_holds = false;
        report.upper_violations.push_back({g, n, ratio});
      }
      if (length(g) > 0) {
        if (!report.max_eps || ratio < *report.max_eps) report.max_eps = ratio;
        if (eps * scaled > length(power)) {
          report.lower_holds = false;
          report.lower_violations.push_back({g, n, ratio});
        }
      }
    }
  }
  report.holds = report.upper_holds && report.lower_holds;
  return report;
}

GeodesicReport check_large_scale_geodesic(const RatMetricSpace& space, const Rational& k) {
  if (k <= 0) throw InputError("check_large_scale_geodesic: K must be positive");
  const std::size_t n = space.size();
  GeodesicReport report;
  using Item = std::pair<Rational, std::size_t>;
  for (std::size_t source = 0; source < n; ++source) {
    std::vector<std::optional<Rational>> dist(n);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = Rational(0);
    heap.emplace(Rational(0), source);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d > *dist[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& w = space.dist(x, y);
        if (y == x || w > k) continue;
        Rational nd = d + w;
        if (!dist[y] || nd < *dist[y]) {
          dist[y] = nd;
          heap.emplace(nd, y);
        }
      }
    }
    for (std::size_t target = source + 1; target < n; ++target) {
      if (!dist[target] || *dist[target] > k * space.dist(source, target)) {
        report.holds = false;
        report.failures.push_back({source, target, dist[target]});
      }
    }
  }
  return report;
}

GeodesicReport check_large_scale_geodesic(const NatMetricSpace& space, const Rational& k) {
  return check_large_scale_geodesic(to_rational_space(space), k);
}

}  // namespace coarse
