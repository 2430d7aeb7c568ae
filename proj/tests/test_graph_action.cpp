#include "doctest.h"

#include "coarse/graph_action.hpp"
#include "coarse/instances.hpp"

#include <algorithm>
#include <set>

using namespace coarse;

namespace {

std::vector<Vertex> leaves(const TruncatedTree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.graph.vertex_count(); ++v) {
    if (t.children[v].empty()) out.push_back(v);
  }
  return out;
}

// Path vertices between u and w by walking up parent links.
std::set<Vertex> path_oracle(const TruncatedTree& t, Vertex u, Vertex w) {
  std::vector<Vertex> up_u{u}, up_w{w};
  while (t.parent[up_u.back()]) up_u.push_back(*t.parent[up_u.back()]);
  while (t.parent[up_w.back()]) up_w.push_back(*t.parent[up_w.back()]);
  std::set<Vertex> out;
  while (up_u.size() > 1 && up_w.size() > 1 && up_u[up_u.size() - 2] == up_w[up_w.size() - 2]) {
    up_u.pop_back();
    up_w.pop_back();
  }
  out.insert(up_u.begin(), up_u.end());
  out.insert(up_w.begin(), up_w.end());
  return out;
}

}  // namespace

TEST_CASE("validate_action examples") {
  Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(validate_action({cycle, PermGroup(4, {Perm::identity(4)})}).ok());
  CHECK(validate_action(petersen_action()).ok());

  auto bad = validate_action({cycle, PermGroup(4, {Perm({1, 0, 2, 3})})});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations.front().axiom == "edge");
  CHECK(bad.violations.front().witness.size() == 3);
  CHECK_THROWS_AS(validate_action({cycle, PermGroup(3, {})}), InputError);
}

TEST_CASE("quotient_counts examples") {
  Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto trivial = quotient_counts({path, PermGroup(5, {})});
  CHECK(trivial.vertex_orbits == 5);
  CHECK(trivial.edge_orbits == 4);

  auto petersen = quotient_counts(petersen_action());
  CHECK(petersen.vertex_orbits == 1);
  CHECK(petersen.edge_orbits == 1);

  // S₃ with B = {(01), (012)}: two inverse-classes of generators.
  PermGroup s3 = symmetric_group(3);
  auto cayley = quotient_counts(cayley_action(s3, s3.generators));
  CHECK(cayley.vertex_orbits == 1);
  CHECK(cayley.edge_orbits == 2);
}

TEST_CASE("petersen automorphism group has order 120 and diameter 2") {
  auto p = petersen_action();
  CHECK(p.graph.vertex_count() == 10);
  CHECK(p.graph.edge_count() == 15);
  CHECK(p.graph.diameter() == 2);
  CHECK(enumerate(p.group).order() == 120);
}

TEST_CASE("milnor_schwarz_verify examples") {
  auto p = petersen_action();
  auto zero = milnor_schwarz_verify(p, 0, 0);
  REQUIRE(zero.levels.size() == 1);
  CHECK(zero.levels[0].sphere_size == 12);  // |W_v| = 120 / 10
  CHECK(zero.levels[0].contained());

  for (Vertex v = 0; v < 10; ++v) {
    auto r = milnor_schwarz_verify(p, v);
    CHECK(r.ok());
    CHECK(r.group_order == 120);
    CHECK(r.levels.size() == 3);
    CHECK(r.vertex_transversal == std::vector<Vertex>{v});
    CHECK(r.edge_transversal.size() == 1);
    for (const auto& c : r.connectors) {
      CHECK(c.f(static_cast<Point>(r.edge_transversal[c.to_edge].first)) == r.edge_transversal[c.from_edge].second);
    }
  }

  PermGroup s4 = symmetric_group(4);
  auto cayley = cayley_action(s4, s4.generators);
  CHECK(cayley.graph.vertex_count() == 24);
  auto r = milnor_schwarz_verify(cayley, 0);
  CHECK(r.ok());
  CHECK(r.a_generates);
  CHECK(r.levels.size() == cayley.graph.diameter() + 1);
  CHECK(r.word_length_excess <= 0);

  Graph split(2, {});
  CHECK_THROWS_AS(milnor_schwarz_verify({split, PermGroup(2, {})}, 0), InputError);
}

TEST_CASE("milnor_schwarz_verify with several vertex orbits") {
  // Path 0-1-2 with the reflection: orbits {0,2} and {1}.
  Graph path(3, {{0, 1}, {1, 2}});
  auto r = milnor_schwarz_verify({path, PermGroup(3, {Perm({2, 1, 0})})}, 1);
  CHECK(r.vertex_transversal == std::vector<Vertex>{0, 1});
  CHECK(r.ok());
}

TEST_CASE("coset_graph examples") {
  PermGroup z12 = cyclic_perm_group(12);
  const Perm one = z12.generators[0];
  auto power = [&](int k) {
    Perm x = Perm::identity(12);
    for (int i = 0; i < k; ++i) x = x * one;
    return x;
  };

  auto square = coset_graph(z12, {power(4)}, {one, power(11)});
  CHECK(square.action.graph.vertex_count() == 4);
  CHECK(square.action.graph.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(square.action.graph.neighbors(v).size() == 2);
  CHECK(square.connected);
  CHECK(square.generates);
  CHECK(validate_action(square.action).ok());

  auto whole = coset_graph(z12, {one}, {one, power(11)});
  CHECK(whole.action.graph.vertex_count() == 1);
  CHECK(whole.action.graph.edge_count() == 0);

  auto empty = coset_graph(z12, {power(4)}, {});
  CHECK(empty.action.graph.edge_count() == 0);
  CHECK_FALSE(empty.connected);
  CHECK_FALSE(empty.generates);

  CHECK_THROWS_AS(coset_graph(z12, {power(4)}, {one}), InputError);
}

TEST_CASE("coset graphs: connectivity matches generation on random instances") {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    PermGroup g = random_perm_group(rng, 4, 6, 720);
    auto elements = enumerate(g);
    std::vector<Perm> w{elements[rng() % elements.order()]};
    std::vector<Perm> f;
    if (trial % 3) {
      const Perm& x = elements[rng() % elements.order()];
      f = {x, x.inverse()};
    }
    auto c = coset_graph(g, w, f);
    CHECK(c.connected == c.generates);
    CHECK(validate_action(c.action).ok());
  }
}

TEST_CASE("build_truncated_tree examples") {
  auto star = build_truncated_tree(3, 1);
  CHECK(star.graph.vertex_count() == 4);
  CHECK(enumerate(star.automorphisms).order() == 6);

  auto t = build_truncated_tree(3, 2);
  CHECK(t.graph.vertex_count() == 10);
  CHECK(enumerate(t.automorphisms).order() == 48);

  for (std::size_t depth = 1; depth <= 5; ++depth) {
    auto path = build_truncated_tree(2, depth);
    CHECK(path.graph.vertex_count() == 2 * depth + 1);
    CHECK(path.graph.diameter() == 2 * depth);
    CHECK(enumerate(path.automorphisms).order() == 2);
  }
  CHECK(enumerate(build_truncated_tree(4, 2).automorphisms).order() == 24 * 6 * 6 * 6 * 6);
  CHECK_THROWS_AS(build_truncated_tree(1, 2), InputError);
  CHECK_THROWS_AS(build_truncated_tree(3, 0), InputError);
  CHECK_THROWS_AS(build_truncated_tree(3, 20), CapExceeded);
}

TEST_CASE("convex_hull examples and properties") {
  auto t = build_truncated_tree(3, 2);
  CHECK(convex_hull(t.graph, {5}) == std::vector<Vertex>{5});
  CHECK(convex_hull(t.graph, {}).empty());
  const auto ls = leaves(t);
  // Leaves 4 and 6 hang from children 1 and 2 of the root.
  CHECK(convex_hull(t.graph, {ls.front(), ls[2]}) == std::vector<Vertex>{0, 1, 2, ls.front(), ls[2]});
  CHECK(convex_hull(t.graph, ls).size() == 10);
  CHECK_THROWS_AS(convex_hull(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), {0}), InputError);

  Rng rng(59);
  auto big = build_truncated_tree(3, 3);
  const std::size_t n = big.graph.vertex_count();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> a;
    for (std::size_t i = rng() % 4 + 1; i > 0; --i) a.push_back(rng() % n);
    std::vector<Vertex> bigger = a;
    bigger.push_back(rng() % n);
    auto ha = convex_hull(big.graph, a), hb = convex_hull(big.graph, bigger);
    CHECK(std::includes(hb.begin(), hb.end(), ha.begin(), ha.end()));
    CHECK(convex_hull(big.graph, ha) == ha);
    std::set<Vertex> oracle;
    for (Vertex u : a) {
      for (Vertex w : a) {
        auto p = path_oracle(big, u, w);
        oracle.insert(p.begin(), p.end());
      }
    }
    CHECK(std::vector<Vertex>(oracle.begin(), oracle.end()) == ha);
  }
}

TEST_CASE("tree_independent examples and invariance") {
  auto t = build_truncated_tree(3, 2);
  CHECK(tree_independent(t.graph, 0, {0}, {0}));
  CHECK(tree_independent(t.graph, 0, {4}, {6}));   // branches of 1 and 2
  CHECK_FALSE(tree_independent(t.graph, 0, {4}, {5}));  // both through vertex 1
  CHECK_FALSE(tree_independent(t.graph, 0, {1}, {4}));

  Rng rng(61);
  auto elements = enumerate(t.automorphisms);
  for (int trial = 0; trial < 200; ++trial) {
    Tuple b{static_cast<Point>(rng() % 10), static_cast<Point>(rng() % 10)}, c{static_cast<Point>(rng() % 10)};
    const Perm& g = elements[rng() % elements.order()];  // every automorphism fixes the root
    CHECK(tree_independent(t.graph, 0, b, c) == tree_independent(t.graph, 0, g.apply(b), g.apply(c)));
  }
}

TEST_CASE("tree_stabilizer_generators fix the tuple and generate the full stabiliser") {
  auto t = build_truncated_tree(3, 2);
  auto elements = enumerate(t.automorphisms);
  Rng rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    Tuple b{static_cast<Point>(rng() % 10)};
    if (trial % 2) b.push_back(static_cast<Point>(rng() % 10));
    auto gens = tree_stabilizer_generators(t, b);
    for (const auto& g : gens) CHECK(g.apply(b) == b);
    CHECK(subgroup_elements(elements, gens) == stabilizer_elements(elements, b));
  }
}

TEST_CASE("verify_independence_axioms on the truncated tree") {
  auto t = build_truncated_tree(3, 2);
  auto r = verify_independence_axioms(t, 0, {1, 200, 2});
  CHECK(r.ok());
  CHECK(r.monotonicity.checked == 200);
  CHECK(r.monotonicity.failed == 0);
  CHECK(r.existence.passed > 0);
  CHECK(r.stationarity.passed > 0);
  CHECK(r.failures.empty());

  auto again = verify_independence_axioms(t, 0, {1, 200, 2});
  CHECK(again.existence.passed == r.existence.passed);
  CHECK(again.stationarity.inconclusive == r.stationarity.inconclusive);
}
