#include "coarse/graph_action.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace coarse {

ValidationReport validate_action(const GroupAction& action) {
  if (action.group.degree != action.graph.vertex_count()) {
    throw InputError("action degree " + std::to_string(action.group.degree) + " does not match " +
                     std::to_string(action.graph.vertex_count()) + " vertices");
  }
  ValidationReport report;
  for (std::size_t i = 0; i < action.group.generators.size(); ++i) {
    const Perm& g = action.group.generators[i];
    for (auto [u, v] : action.graph.arcs()) {
      if (u < v && !action.graph.adjacent(g(static_cast<Point>(u)), g(static_cast<Point>(v)))) {
        report.violations.push_back({"edge", {i, u, v}});
      }
    }
  }
  return report;
}

namespace {

void require_valid_action(const GroupAction& action) {
  if (!validate_action(action).ok()) throw InputError("group does not act by graph automorphisms");
}

Tuple arc_tuple(const Arc& e) { return {static_cast<Point>(e.first), static_cast<Point>(e.second)}; }

// Orbit id of every vertex, numbered by least member.
std::vector<std::size_t> vertex_orbit_ids(const GroupAction& action, std::size_t& count) {
  const std::size_t n = action.graph.vertex_count();
  std::vector<std::size_t> id(n, n);
  count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (id[v] != n) continue;
    for (const auto& t : tuple_orbit(action.group, {static_cast<Point>(v)})) id[t[0]] = count;
    ++count;
  }
  return id;
}

}  // namespace

QuotientCounts quotient_counts(const GroupAction& action) {
  require_valid_action(action);
  QuotientCounts counts;
  vertex_orbit_ids(action, counts.vertex_orbits);
  std::set<Arc> seen;
  for (const auto& e : action.graph.arcs()) {
    if (e.first > e.second || seen.contains(e)) continue;
    ++counts.edge_orbits;
    for (const auto& t : tuple_orbit(action.group, arc_tuple(e))) {
      seen.emplace(t[0], t[1]);
      seen.emplace(t[1], t[0]);
    }
  }
  return counts;
}

MSReport milnor_schwarz_verify(const GroupAction& action, Vertex v, std::optional<std::size_t> m_max,
                               std::size_t cap) {
  require_valid_action(action);
  const Graph& graph = action.graph;
  if (v >= graph.vertex_count()) throw InputError("base vertex out of range");
  if (!graph.connected()) throw InputError("milnor_schwarz_verify: graph is disconnected");
  const GroupElements elements = enumerate(action.group, cap);
  const std::size_t order = elements.order();

  MSReport report;
  report.base = v;
  report.group_order = order;

  // T: v represents its own orbit, other orbits by their least vertex.
  std::size_t orbit_count = 0;
  const auto orbit_of = vertex_orbit_ids(action, orbit_count);
  std::vector<std::optional<Vertex>> rep(orbit_count);
  rep[orbit_of[v]] = v;
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    if (!rep[orbit_of[u]]) rep[orbit_of[u]] = u;
  }
  std::vector<char> in_t(graph.vertex_count(), 0);
  for (const auto& u : rep) {
    report.vertex_transversal.push_back(*u);
    in_t[*u] = 1;
  }
  std::sort(report.vertex_transversal.begin(), report.vertex_transversal.end());

  // S: least arc with origin in T from every arc orbit.
  std::set<Arc> covered;
  for (const auto& e : graph.arcs()) {
    if (covered.contains(e)) continue;
    std::optional<Arc> chosen;
    for (const auto& t : tuple_orbit(action.group, arc_tuple(e))) {
      Arc a{t[0], t[1]};
      covered.insert(a);
      if (!chosen && in_t[a.first]) chosen = a;
    }
    report.edge_transversal.push_back(*chosen);
  }

  // F: for e, e′ ∈ S with G·t(e) = G·o(e′), the first f with t(e) = f·o(e′).
  const auto& s = report.edge_transversal;
  std::vector<std::size_t> a_set{0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (orbit_of[s[i].second] != orbit_of[s[j].first]) continue;
      for (std::size_t k = 0; k < order; ++k) {
        if (elements[k](static_cast<Point>(s[j].first)) == s[i].second) {
          report.connectors.push_back({i, j, elements[k]});
          a_set.push_back(k);
          a_set.push_back(elements.at(elements[k].inverse()));
          break;
        }
      }
    }
  }
  for (Vertex u : report.vertex_transversal) {
    for (std::size_t k : stabilizer_elements(elements, {static_cast<Point>(u)})) a_set.push_back(k);
  }
  std::sort(a_set.begin(), a_set.end());
  a_set.erase(std::unique(a_set.begin(), a_set.end()), a_set.end());
  for (std::size_t k : a_set) report.generators.push_back(elements[k]);
  std::sort(report.generators.begin(), report.generators.end());

  // Right multiplication by A as index tables.
  std::vector<std::vector<std::size_t>> times(a_set.size(), std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < a_set.size(); ++i) {
    for (std::size_t g = 0; g < order; ++g) times[i][g] = elements.at(elements[g] * elements[a_set[i]]);
  }

  const auto from_v = graph.distances_from(v);
  std::vector<std::size_t> displacement(order);
  for (std::size_t g = 0; g < order; ++g) displacement[g] = *from_v[elements[g](static_cast<Point>(v))];

  const std::size_t top = std::min(m_max.value_or(graph.diameter()), graph.diameter());
  // power[g]: least k ≥ 1 with g ∈ A^k (A contains 1, so powers are nested).
  std::vector<std::size_t> power(order, 0);
  std::vector<std::size_t> frontier;
  for (std::size_t k : a_set) {
    power[k] = 1;
    frontier.push_back(k);
  }
  for (std::size_t k = 2; k <= 2 * top + 1 && !frontier.empty(); ++k) {
    std::vector<std::size_t> next;
    for (std::size_t g : frontier) {
      for (std::size_t i = 0; i < a_set.size(); ++i) {
        std::size_t h = times[i][g];
        if (power[h] == 0) {
          power[h] = k;
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }

  report.containment_holds = true;
  for (std::size_t n = 0; n <= top; ++n) {
    ContainmentLevel level;
    level.n = n;
    level.ball_contained = true;
    for (std::size_t g = 0; g < order; ++g) {
      const bool in_power = power[g] != 0 && power[g] <= 2 * n + 1;
      if (power[g] != 0 && power[g] <= 2 * n + 1) ++level.power_size;
      if (displacement[g] == n) {
        ++level.sphere_size;
        if (!in_power) ++level.missing;
      }
      if (displacement[g] <= n && !in_power) level.ball_contained = false;
    }
    report.containment_holds = report.containment_holds && level.contained() && level.ball_contained;
    report.levels.push_back(level);
  }

  // Word lengths |g|_A by breadth-first search from the identity.
  std::vector<std::optional<std::size_t>> word(order);
  word[0] = 0;
  std::queue<std::size_t> queue;
  queue.push(0);
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop();
    for (std::size_t i = 0; i < a_set.size(); ++i) {
      std::size_t h = times[i][g];
      if (!word[h]) {
        word[h] = *word[g] + 1;
        queue.push(h);
      }
    }
  }
  report.a_generates = std::all_of(word.begin(), word.end(), [](const auto& w) { return w.has_value(); });
  for (std::size_t k : a_set) report.displacement_constant = std::max(report.displacement_constant, displacement[k]);
  report.reverse_bound_holds = report.a_generates;
  report.word_length_excess = std::numeric_limits<std::int64_t>::min();
  for (std::size_t g = 0; g < order; ++g) {
    if (!word[g]) continue;
    if (displacement[g] > report.displacement_constant * *word[g]) report.reverse_bound_holds = false;
    report.word_length_excess =
        std::max(report.word_length_excess, static_cast<std::int64_t>(*word[g]) -
                                                static_cast<std::int64_t>(2 * displacement[g] + 1));
  }
  return report;
}

CosetGraph coset_graph(const PermGroup& group, const std::vector<Perm>& subgroup_generators,
                       const std::vector<Perm>& connectors, std::size_t cap) {
  for (const auto& f : connectors) {
    if (f.degree() != group.degree) throw InputError("coset_graph: connector degree mismatch");
    if (std::find(connectors.begin(), connectors.end(), f.inverse()) == connectors.end()) {
      throw InputError("coset_graph: connector set is not symmetric");
    }
  }
  const GroupElements elements = enumerate(group, cap);
  const auto w = subgroup_elements(elements, subgroup_generators);
  const std::size_t order = elements.order();

  std::vector<std::size_t> coset_of(order, order);
  CosetGraph result;
  std::vector<std::size_t> rep_index;
  for (std::size_t g = 0; g < order; ++g) {
    if (coset_of[g] != order) continue;
    for (std::size_t x : w) coset_of[elements.at(elements[g] * elements[x])] = rep_index.size();
    rep_index.push_back(g);
    result.representatives.push_back(elements[g]);
  }
  const std::size_t cosets = rep_index.size();

  // D = ⋃_f W f W.
  std::vector<char> in_d(order, 0);
  for (const auto& f : connectors) {
    for (std::size_t k : product_set(elements, product_set(elements, w, {elements.at(f)}), w)) in_d[k] = 1;
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < cosets; ++i) {
    const Perm gi = elements[rep_index[i]].inverse();
    for (std::size_t j = i + 1; j < cosets; ++j) {
      if (in_d[elements.at(gi * elements[rep_index[j]])]) edges.emplace_back(i, j);
    }
  }

  std::vector<Perm> translations;
  for (const auto& s : group.generators) {
    std::vector<Point> images(cosets);
    for (std::size_t i = 0; i < cosets; ++i) {
      images[i] = static_cast<Point>(coset_of[elements.at(s * elements[rep_index[i]])]);
    }
    translations.emplace_back(std::move(images));
  }
  result.action = GroupAction{Graph(cosets, edges), PermGroup(cosets, std::move(translations))};
  result.connected = result.action.graph.connected();

  std::vector<Perm> all = subgroup_generators;
  all.insert(all.end(), connectors.begin(), connectors.end());
  result.generates = subgroup_elements(elements, all).size() == order;
  return result;
}

namespace {

void pair_subtrees(const TruncatedTree& tree, Vertex x, Vertex y, std::vector<Point>& images) {
  images[x] = static_cast<Point>(y);
  images[y] = static_cast<Point>(x);
  for (std::size_t i = 0; i < tree.children[x].size(); ++i) {
    pair_subtrees(tree, tree.children[x][i], tree.children[y][i], images);
  }
}

Perm swap_subtrees(const TruncatedTree& tree, Vertex x, Vertex y) {
  std::vector<Point> images = Perm::identity(tree.children.size()).images();
  pair_subtrees(tree, x, y, images);
  return Perm(std::move(images));
}

}  // namespace

TruncatedTree build_truncated_tree(std::size_t valence, std::size_t depth) {
  if (valence < 2 || depth < 1) throw InputError("build_truncated_tree: need valence >= 2 and depth >= 1");
  TruncatedTree tree;
  tree.valence = valence;
  tree.depth = depth;
  tree.parent.push_back(std::nullopt);
  tree.children.emplace_back();
  tree.level.push_back(0);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < tree.parent.size(); ++u) {
    if (tree.level[u] == depth) continue;
    const std::size_t count = u == 0 ? valence : valence - 1;
    for (std::size_t i = 0; i < count; ++i) {
      const Vertex child = tree.parent.size();
      if (child >= kTreeVertexCap) throw CapExceeded("build_truncated_tree", child);
      tree.parent.push_back(u);
      tree.children.emplace_back();
      tree.level.push_back(tree.level[u] + 1);
      tree.children[u].push_back(child);
      edges.emplace_back(u, child);
    }
  }
  tree.graph = Graph(tree.parent.size(), edges);

  std::vector<Perm> gens;
  for (Vertex u = 0; u < tree.parent.size(); ++u) {
    const auto& kids = tree.children[u];
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) gens.push_back(swap_subtrees(tree, kids[i], kids[i + 1]));
  }
  tree.automorphisms = PermGroup(tree.parent.size(), std::move(gens));
  if (!validate_action(GroupAction{tree.graph, tree.automorphisms}).ok()) {
    throw std::logic_error("tree generators do not preserve edges");
  }
  return tree;
}

std::vector<Perm> tree_stabilizer_generators(const TruncatedTree& tree, const Tuple& points) {
  std::vector<char> occupied(tree.children.size(), 0);
  for (Point p : points) {
    if (p >= tree.children.size()) throw InputError("tree_stabilizer_generators: vertex out of range");
    for (std::optional<Vertex> x = p; x; x = tree.parent[*x]) occupied[*x] = 1;
  }
  std::vector<Perm> gens;
  for (Vertex u = 0; u < tree.children.size(); ++u) {
    std::vector<Vertex> free;
    for (Vertex c : tree.children[u]) {
      if (!occupied[c]) free.push_back(c);
    }
    for (std::size_t i = 0; i + 1 < free.size(); ++i) gens.push_back(swap_subtrees(tree, free[i], free[i + 1]));
  }
  return gens;
}

std::vector<Vertex> convex_hull(const Graph& tree, const std::vector<Vertex>& vertices) {
  if (!tree.connected() || tree.edge_count() + 1 != tree.vertex_count()) {
    throw InputError("convex_hull: graph is not a tree");
  }
  if (vertices.empty()) return {};
  for (Vertex v : vertices) {
    if (v >= tree.vertex_count()) throw InputError("convex_hull: vertex out of range");
  }
  // Root at the first vertex; the hull is the union of root-to-vertex paths.
  const Vertex root = vertices.front();
  std::vector<std::optional<Vertex>> parent(tree.vertex_count());
  std::vector<char> seen(tree.vertex_count(), 0);
  std::queue<Vertex> queue;
  queue.push(root);
  seen[root] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : tree.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  std::vector<char> in_hull(tree.vertex_count(), 0);
  for (Vertex v : vertices) {
    for (std::optional<Vertex> x = v; x && !in_hull[*x]; x = parent[*x]) in_hull[*x] = 1;
  }
  std::vector<Vertex> hull;
  for (Vertex x = 0; x < tree.vertex_count(); ++x) {
    if (in_hull[x]) hull.push_back(x);
  }
  return hull;
}

bool tree_independent(const Graph& tree, Vertex a, const Tuple& b, const Tuple& c) {
  std::vector<Vertex> left{a}, right{a};
  left.insert(left.end(), b.begin(), b.end());
  right.insert(right.end(), c.begin(), c.end());
  const auto hb = convex_hull(tree, left);
  const auto hc = convex_hull(tree, right);
  std::vector<Vertex> common;
  std::set_intersection(hb.begin(), hb.end(), hc.begin(), hc.end(), std::back_inserter(common));
  return common == std::vector<Vertex>{a};
}

namespace {

// Branch of x at a: the neighbour of a on the path a → x (none for x = a).
std::optional<Vertex> branch_at(const TruncatedTree& tree, Vertex a, Vertex x) {
  if (x == a) return std::nullopt;
  const auto hull = convex_hull(tree.graph, {a, x});
  for (Vertex n : tree.graph.neighbors(a)) {
    if (std::binary_search(hull.begin(), hull.end(), n)) return n;
  }
  return std::nullopt;
}

std::set<Vertex> branches(const TruncatedTree& tree, Vertex a, const Tuple& t) {
  std::set<Vertex> out;
  for (Point x : t) {
    if (auto b = branch_at(tree, a, x)) out.insert(*b);
  }
  return out;
}

std::string show(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

IndependenceAxiomReport verify_independence_axioms(const TruncatedTree& tree, Vertex a,
                                                   const IndependenceSamplerConfig& config) {
  const std::size_t n = tree.graph.vertex_count();
  if (a >= n) throw InputError("verify_independence_axioms: base vertex out of range");
  if (config.max_tuple_length < 1) throw InputError("verify_independence_axioms: tuple length must be >= 1");

  std::mt19937_64 rng(config.seed);
  auto random_tuple = [&] {
    std::uniform_int_distribution<std::size_t> len(1, config.max_tuple_length);
    std::uniform_int_distribution<Point> vertex(0, static_cast<Point>(n - 1));
    Tuple t(len(rng));
    for (auto& x : t) x = vertex(rng);
    return t;
  };
  auto independent = [&](const Tuple& c, const Tuple& b) { return tree_independent(tree.graph, a, b, c); };

  const std::size_t branch_count = tree.graph.neighbors(a).size();
  const Tuple base{static_cast<Point>(a)};
  const std::vector<Perm> wa = tree_stabilizer_generators(tree, base);
  IndependenceAxiomReport report;

  for (std::size_t i = 0; i < config.samples; ++i) {
    Tuple b = random_tuple(), c = random_tuple(), d = random_tuple();
    Tuple cd = c;
    cd.insert(cd.end(), d.begin(), d.end());
    ++report.monotonicity.checked;
    if (!independent(cd, b)) {
      ++report.monotonicity.passed;
      continue;
    }
    ++report.monotonicity_premises;
    if (independent(c, b) && independent(d, b)) {
      ++report.monotonicity.passed;
    } else {
      ++report.monotonicity.failed;
      report.failures.push_back("monotonicity b=" + show(b) + " c=" + show(c) + " d=" + show(d));
    }
  }

  for (std::size_t i = 0; i < config.samples; ++i) {
    Tuple b = random_tuple(), c = random_tuple();
    ++report.existence.checked;
    bool found = false;
    for (const auto& image : tuple_orbit(wa, c)) {
      if (independent(image, b)) {
        found = true;
        break;
      }
    }
    const bool in_budget = branches(tree, a, b).size() + branches(tree, a, c).size() <= branch_count;
    if (found) {
      ++report.existence.passed;
    } else if (!in_budget) {
      ++report.existence.inconclusive;
    } else {
      ++report.existence.failed;
      report.failures.push_back("existence b=" + show(b) + " c=" + show(c));
    }
  }

  for (std::size_t i = 0; i < config.samples; ++i) {
    Tuple b = random_tuple();
    ++report.stationarity.checked;
    const std::vector<Perm> wb = tree_stabilizer_generators(tree, b);
    std::set<Tuple> types;
    for (const auto& c : tuple_orbit(wa, b)) {
      if (independent(c, b)) types.insert(orbital_type(wb, c).representative);
    }
    const bool in_budget = 2 * branches(tree, a, b).size() <= branch_count;
    if (types.size() == 1) {
      ++report.stationarity.passed;
    } else if (types.empty() && !in_budget) {
      ++report.stationarity.inconclusive;
    } else {
      ++report.stationarity.failed;
      report.failures.push_back("stationarity b=" + show(b) + " types=" + std::to_string(types.size()));
    }
  }
  return report;
}

}  // namespace coarse
