#include "doctest.h"

#include "coarse/birkhoff.hpp"
#include "coarse/graph.hpp"
#include "coarse/instances.hpp"
#include "coarse/word_metric.hpp"

using namespace coarse;

namespace {

FiniteGroup s3() { return to_finite_group(enumerate(symmetric_group(3))); }

// Cayley graph path metric for the symmetric closure of `gens`.
std::vector<std::vector<std::size_t>> cayley_oracle(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element s : gens) {
      for (Element t : {s, g.inv(s)}) {
        if (g.mul(x, t) != x) edges.emplace_back(x, g.mul(x, t));
      }
    }
  }
  return Graph(g.order(), edges).path_metric();
}

}  // namespace

TEST_CASE("word_metric examples") {
  FiniteGroup z10 = FiniteGroup::cyclic(10);
  WordMetric w(z10, GeneratingSet::make(z10, {1}));
  CHECK(w.distance(3, 3) == 0u);
  CHECK(w.distance(0, 7) == 3u);
  CHECK(w.generates());

  auto box = box_word_metric(2, 6, {{1, 0}, {0, 1}});
  CHECK(box.size() == 169);
  auto origin = box.index_of("(0,0)"), target = box.index_of("(2,3)");
  REQUIRE(origin);
  REQUIRE(target);
  CHECK(box.dist(*origin, *target) == 5);

  CHECK_THROWS_AS(GeneratingSet::make(z10, {}), InputError);
}

TEST_CASE("non-generating sets report infinite distances") {
  FiniteGroup z10 = FiniteGroup::cyclic(10);
  WordMetric w(z10, GeneratingSet::make(z10, {2}));
  CHECK_FALSE(w.generates());
  CHECK(w.members().size() == 5);
  CHECK_FALSE(w.distance(0, 1));
  CHECK(w.distance(1, 3) == 1u);
  CHECK(w.to_space().size() == 5);
}

TEST_CASE("word metrics on Z_m and box Z² equal the closed forms") {
  for (std::size_t m : {1u, 2u, 7u, 12u, 31u}) {
    FiniteGroup z = FiniteGroup::cyclic(m);
    WordMetric w(z, GeneratingSet::make(z, {static_cast<Element>(1 % m)}));
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        const std::size_t diff = (y + m - x) % m;
        CHECK(w.distance(x, y) == std::min(diff, m - diff));
      }
    }
  }
  auto box = box_word_metric(2, 3, {{1, 0}, {0, 1}});
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        for (int d = -3; d <= 3; ++d) {
          auto i = *box.index_of("(" + std::to_string(a) + "," + std::to_string(b) + ")");
          auto j = *box.index_of("(" + std::to_string(c) + "," + std::to_string(d) + ")");
          CHECK(box.dist(i, j) == std::abs(a - c) + std::abs(b - d));
        }
      }
    }
  }
}

TEST_CASE("growth examples") {
  FiniteGroup z10 = FiniteGroup::cyclic(10);
  CHECK(growth(z10, GeneratingSet::make(z10, {1}), 5) == std::vector<std::size_t>{1, 3, 5, 7, 9, 10});
  std::vector<Element> all(10);
  for (Element i = 0; i < 10; ++i) all[i] = i;
  auto whole = growth(z10, GeneratingSet::make(z10, all), 3);
  CHECK(whole[1] == 10);

  FiniteGroup g = s3();
  auto gens = GeneratingSet::make(g, {g.at("[1,0,2]"), g.at("[1,2,0]"), g.at("[2,0,1]")});
  auto s = growth(g, gens, 3);
  CHECK(s[2] == 6);
  CHECK(s.back() == 6);
}

TEST_CASE("word metric properties on random groups") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteGroup g = random_small_group(rng, 150);
    std::vector<Element> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(static_cast<Element>(rng() % g.order()));
    auto set = GeneratingSet::make(g, gens);
    WordMetric w(g, set);
    auto space = w.to_space();
    CHECK(validate_metric(space).ok());
    CHECK(check_large_scale_geodesic(space, Rational(1)).holds);

    const auto& members = w.members();
    bool invariant = true;
    for (Element h : members) {
      for (Element x : members) {
        for (Element y : members) invariant = invariant && w.distance(g.mul(h, x), g.mul(h, y)) == w.distance(x, y);
      }
    }
    CHECK(invariant);
    if (w.generates()) {
      auto oracle = cayley_oracle(g, set.elements);
      bool equal = true;
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) equal = equal && *w.distance(x, y) == oracle[x][y];
      }
      CHECK(equal);
    }
  }
}
