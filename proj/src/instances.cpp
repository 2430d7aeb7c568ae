#include "coarse/instances.hpp"

#include <algorithm>
#include <numeric>

namespace coarse {

Perm perm_from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw InputError("cycle point outside degree");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

PermGroup symmetric_group(std::size_t degree) {
  if (degree < 2) return PermGroup(degree, {});
  std::vector<Point> all(degree);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(degree, {perm_from_cycles(degree, {{0, 1}}), perm_from_cycles(degree, {all})});
}

PermGroup cyclic_perm_group(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(n, {perm_from_cycles(n, {all})});
}

GroupAction cayley_action(const PermGroup& group, const std::vector<Perm>& generators, std::size_t cap) {
  const GroupElements elements = enumerate(group, cap);
  const std::size_t n = elements.order();
  std::vector<Perm> alphabet;
  for (const auto& s : generators) {
    alphabet.push_back(s);
    alphabet.push_back(s.inverse());
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& s : alphabet) {
      std::size_t j = elements.at(elements[i] * s);
      if (i < j) edges.emplace_back(i, j);
    }
  }
  std::vector<Perm> translations;
  for (const auto& t : group.generators) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(elements.at(t * elements[i]));
    translations.emplace_back(std::move(images));
  }
  return GroupAction{Graph(n, edges), PermGroup(n, std::move(translations))};
}

GroupAction petersen_action() {
  std::vector<std::pair<Point, Point>> subsets;
  for (Point a = 0; a < 5; ++a) {
    for (Point b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  auto index = [&](Point a, Point b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(std::find(subsets.begin(), subsets.end(), std::make_pair(a, b)) - subsets.begin());
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  std::vector<Perm> gens;
  for (const auto& s : symmetric_group(5).generators) {
    std::vector<Point> images;
    for (auto [a, b] : subsets) images.push_back(index(s(a), s(b)));
    gens.emplace_back(std::move(images));
  }
  return GroupAction{Graph(subsets.size(), edges), PermGroup(subsets.size(), std::move(gens))};
}

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<char> product(const FiniteGroup& g, const std::vector<char>& x, const std::vector<char>& y) {
  std::vector<char> out(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a) {
    if (!x[a]) continue;
    for (Element b = 0; b < g.order(); ++b) {
      if (y[b]) out[g.mul(a, b)] = 1;
    }
  }
  return out;
}

void add_symmetric(const FiniteGroup& g, std::vector<char>& set, Element e) {
  set[e] = 1;
  set[g.inv(e)] = 1;
}

std::vector<Element> members(const std::vector<char>& set) {
  std::vector<Element> out;
  for (Element e = 0; e < set.size(); ++e) {
    if (set[e]) out.push_back(e);
  }
  return out;
}

}  // namespace

FiniteGroup random_small_group(Rng& rng, std::size_t max_order) {
  if (max_order < 4) throw InputError("random_small_group: max_order must be at least 4");
  switch (uniform(rng, 0, 2)) {
    case 0:
      return FiniteGroup::cyclic(uniform(rng, 2, max_order));
    case 1:
      return FiniteGroup::dihedral(uniform(rng, 2, max_order / 2));
    default: {
      const std::size_t a = uniform(rng, 2, std::max<std::size_t>(2, max_order / 4));
      const std::size_t rest = max_order / a;
      if (rest >= 4 && uniform(rng, 0, 1) == 1) {
        return FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::dihedral(uniform(rng, 2, rest / 2)));
      }
      return FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(uniform(rng, 2, std::max<std::size_t>(2, rest))));
    }
  }
}

NeighborhoodChain random_chain(const FiniteGroup& group, Rng& rng) {
  const std::size_t n = group.order();
  auto random_element = [&] { return static_cast<Element>(uniform(rng, 0, n - 1)); };
  std::vector<char> v(n, 0);
  v[group.identity()] = 1;
  for (std::size_t i = uniform(rng, 0, 3); i > 0; --i) add_symmetric(group, v, random_element());
  std::vector<std::vector<Element>> levels{members(v)};
  while (levels.back().size() < n) {
    std::vector<char> next = product(group, product(group, v, v), v);
    for (std::size_t i = uniform(rng, 0, 2); i > 0; --i) add_symmetric(group, next, random_element());
    if (next == v) {
      Element e = random_element();
      while (next[e]) e = random_element();
      add_symmetric(group, next, e);
    }
    v = std::move(next);
    levels.push_back(members(v));
  }
  const int n_min = static_cast<int>(uniform(rng, 0, 4)) - 2;
  return NeighborhoodChain(group, n_min, std::move(levels));
}

RatMetricSpace random_rational_space(Rng& rng, std::size_t size) {
  std::vector<std::vector<Rational>> d(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      Rational w(static_cast<long long>(uniform(rng, 1, 20)), static_cast<long long>(uniform(rng, 1, 4)));
      d[i][j] = d[j][i] = w;
    }
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < size; ++i) ids.push_back("x" + std::to_string(i));
  return RatMetricSpace(std::move(ids), std::move(d));
}

PointMap random_point_map(Rng& rng, std::size_t domain_size, std::size_t codomain_size) {
  PointMap map{{}, codomain_size};
  for (std::size_t i = 0; i < domain_size; ++i) map.images.push_back(uniform(rng, 0, codomain_size - 1));
  return map;
}

void extend_randomly(NatMetricSpace& space, Rng& rng, std::int64_t max_dist, const std::string& id) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::int64_t> row;
    bool ok = true;
    for (std::size_t x = 0; x < space.size() && ok; ++x) {
      std::int64_t lo = 1, hi = max_dist;
      for (std::size_t y = 0; y < x; ++y) {
        lo = std::max(lo, std::abs(row[y] - space.dist(x, y)));
        hi = std::min(hi, row[y] + space.dist(x, y));
      }
      if (lo > hi) {
        ok = false;
      } else {
        row.push_back(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
      }
    }
    if (ok) {
      space.add_point(id, row);
      return;
    }
  }
  throw std::logic_error("extend_randomly: no admissible distances under the cap");
}

NatMetricSpace random_nat_space(Rng& rng, std::size_t size, std::int64_t max_dist) {
  NatMetricSpace space;
  for (std::size_t i = 0; i < size; ++i) extend_randomly(space, rng, max_dist, "p" + std::to_string(i));
  return space;
}

namespace {

// B ⊇ A with extra points, rows shuffled; returns B and the induced embedding A → B.
std::pair<NatMetricSpace, Embedding> random_extension(Rng& rng, const NatMetricSpace& a, std::size_t extra,
                                                      std::int64_t max_dist, const std::string& prefix) {
  NatMetricSpace b = a;
  for (std::size_t i = 0; i < extra; ++i) extend_randomly(b, rng, max_dist, prefix + std::to_string(i));
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  Embedding eta{std::vector<std::size_t>(a.size())};
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (order[pos] < a.size()) eta.images[order[pos]] = pos;
  }
  return {b.subspace(order), eta};
}

}  // namespace

AmalgamInstance random_amalgam_instance(Rng& rng, std::size_t max_base, std::size_t max_side, std::int64_t max_dist) {
  AmalgamInstance inst;
  const std::size_t base = uniform(rng, 1, max_base);
  inst.a = NatMetricSpace();
  for (std::size_t i = 0; i < base; ++i) extend_randomly(inst.a, rng, max_dist, "a" + std::to_string(i));
  const std::size_t room = max_side > base ? max_side - base : 0;
  std::tie(inst.b1, inst.eta1) = random_extension(rng, inst.a, uniform(rng, 0, room), max_dist, "b");
  std::tie(inst.b2, inst.eta2) = random_extension(rng, inst.a, uniform(rng, 0, room), max_dist, "c");
  return inst;
}

FunctorialityInstance random_functoriality_instance(Rng& rng, std::size_t max_c, std::int64_t max_dist) {
  while (true) {
    FunctorialityInstance inst;
    inst.base = random_amalgam_instance(rng, 3, 6, max_dist);
    const std::size_t c = inst.base.b1.size() + inst.base.b2.size() - inst.base.a.size();
    if (c >= max_c) continue;
    inst.b1p = inst.base.b1;
    for (std::size_t i = uniform(rng, 1, max_c - c); i > 0; --i) {
      extend_randomly(inst.b1p, rng, max_dist, "d" + std::to_string(inst.b1p.size()));
    }
    inst.iota.images.resize(inst.base.b1.size());
    std::iota(inst.iota.images.begin(), inst.iota.images.end(), std::size_t{0});
    inst.eta1p = inst.base.eta1;
    return inst;
  }
}

PermGroup random_perm_group(Rng& rng, std::size_t min_degree, std::size_t max_degree, std::size_t max_order) {
  while (true) {
    const std::size_t n = uniform(rng, min_degree, max_degree);
    std::vector<Perm> gens;
    for (int i = 0; i < 2; ++i) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      std::shuffle(images.begin(), images.end(), rng);
      gens.emplace_back(std::move(images));
    }
    PermGroup group(n, std::move(gens));
    try {
      enumerate(group, max_order);
      return group;
    } catch (const CapExceeded&) {
    }
  }
}

}  // namespace coarse
