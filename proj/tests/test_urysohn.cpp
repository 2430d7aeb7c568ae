#include "doctest.h"

#include "coarse/urysohn.hpp"

#include <queue>

using namespace coarse;

namespace {

NatMetricSpace point() { return NatMetricSpace({"o"}, {{0}}); }

// Component sizes of the distance-one graph, by a direct scan of the matrix.
std::size_t component_of_first(const NatMetricSpace& x) {
  std::vector<char> seen(x.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 0;
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    ++count;
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (!seen[v] && x.dist(u, v) == 1) {
        seen[v] = 1;
        q.push(v);
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("katetov_extensions examples") {
  CHECK(katetov_extensions(point(), {0}, 3).size() == 3);

  NatMetricSpace two({"a", "b"}, {{0, 2}, {2, 0}});
  auto f = katetov_extensions(two, {0, 1}, 2);
  REQUIRE(f.size() == 4);
  CHECK(f[0].values == std::vector<std::int64_t>{1, 1});
  CHECK(f[1].values == std::vector<std::int64_t>{1, 2});
  CHECK(f[2].values == std::vector<std::int64_t>{2, 1});
  CHECK(f[3].values == std::vector<std::int64_t>{2, 2});

  NatMetricSpace far({"a", "b"}, {{0, 7}, {7, 0}});
  CHECK(katetov_extensions(far, {0, 1}, 3).empty());
  CHECK_THROWS_AS(katetov_extensions(two, {}, 3), InputError);
}

TEST_CASE("build_approx small examples") {
  auto one = build_approx(point(), {1, 1, 1, 5000});
  REQUIRE(one.space.size() == 2);
  CHECK(one.space.dist(0, 1) == 1);
  CHECK(one.log.size() == 1);

  auto none = build_approx(point(), {2, 4, 0, 5000});
  CHECK(none.space.size() == 1);
  CHECK(none.log.empty());

  auto capped = build_approx(point(), {2, 4, 2, 10});
  CHECK(capped.partial);
  CHECK(capped.space.size() == 10);
  CHECK(validate_metric(capped.space).ok());
}

TEST_CASE("build_approx(s=2, r=4, rounds=2) is universal for small spaces") {
  auto approx = build_approx(point(), {2, 4, 2, 5000});
  CHECK_FALSE(approx.partial);
  CHECK(validate_metric(approx.space).ok());

  // Every logged extension is realised exactly by its point.
  bool realised = true;
  for (const auto& step : approx.log) {
    for (std::size_t i = 0; i < step.function.subset.size(); ++i) {
      realised = realised && approx.space.dist(step.point, step.function.subset[i]) == step.function.values[i];
    }
  }
  CHECK(realised);

  for (const auto& type : enumerate_isometry_types(3, 4)) CHECK(embed_space(approx.space, type));

  // Rounds only add points: the one-round build is a prefix.
  auto shorter = build_approx(point(), {2, 4, 1, 5000});
  REQUIRE(shorter.space.size() <= approx.space.size());
  bool prefix = true;
  for (std::size_t i = 0; i < shorter.space.size(); ++i) {
    for (std::size_t j = 0; j < shorter.space.size(); ++j) prefix = prefix && shorter.space.dist(i, j) == approx.space.dist(i, j);
  }
  CHECK(prefix);

  // The distance-one graph agrees with a direct matrix scan.
  Graph g = distance_one_graph(approx.space);
  auto from0 = g.distances_from(0);
  std::size_t reached = 0;
  for (auto& d : from0) reached += d.has_value();
  CHECK(reached == component_of_first(approx.space));
  CHECK(g.connected() == (reached == approx.space.size()));
}

TEST_CASE("distance_one_graph and verify_path_metric examples") {
  NatMetricSpace unit({"a", "b"}, {{0, 1}, {1, 0}});
  CHECK(distance_one_graph(unit).edge_count() == 1);
  auto ok = verify_path_metric(unit);
  CHECK(ok.connected);
  CHECK(ok.holds());

  NatMetricSpace two({"a", "b"}, {{0, 2}, {2, 0}});
  CHECK(distance_one_graph(two).edge_count() == 0);
  CHECK_FALSE(distance_one_graph(two).connected());

  NatMetricSpace three({"a", "b"}, {{0, 3}, {3, 0}});
  auto bad = verify_path_metric(build_approx(three, {2, 4, 0, 5000}).space);
  CHECK_FALSE(bad.connected);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].x == 0);
  CHECK(bad.failures[0].y == 1);
  CHECK(bad.failures[0].distance == 3);
  CHECK_FALSE(bad.failures[0].path_length);

  // Path graph 0-1-2-3 as a metric: ρ = d everywhere.
  NatMetricSpace path({"0", "1", "2", "3"}, {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}});
  CHECK(verify_path_metric(path).holds());
  CHECK(verify_path_metric(path, 2).pairs_checked == 5);
}

TEST_CASE("embed_space examples") {
  auto approx = build_approx(point(), {2, 4, 2, 5000});
  auto first = embed_space(approx.space, point());
  REQUIRE(first);
  CHECK(first->images == std::vector<std::size_t>{0});

  NatMetricSpace triangle({"x", "y", "z"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(embed_space(approx.space, triangle));

  const std::int64_t beyond = approx.space.diameter() + 1;
  NatMetricSpace far({"x", "y"}, {{0, beyond}, {beyond, 0}});
  CHECK_FALSE(embed_space(approx.space, far));
}

TEST_CASE("extend_partial_isometry examples") {
  NatMetricSpace path({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(extend_partial_isometry(path, {}, 2) == 0u);

  // a ↦ c, extend b: b itself is at distance 1 from c.
  CHECK(extend_partial_isometry(path, {{0, 2}}, 1) == 1u);

  // d(a,b) = 1, d(b,c) = 2, d(a,c) = 2: no point lies at distance 1 from c.
  NatMetricSpace skew({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
  CHECK_FALSE(extend_partial_isometry(skew, {{0, 2}}, 1));

  CHECK_THROWS_AS(extend_partial_isometry(path, {{0, 1}, {2, 1}}, 1), InputError);
  CHECK_THROWS_AS(extend_partial_isometry(path, {{0, 1}, {2, 0}}, 1), InputError);
  CHECK_THROWS_AS(extend_partial_isometry(path, {{0, 2}}, 0), InputError);

  // Images among the points present before the final round extend whenever the
  // required distances are at most r and the domain has at most s points.
  auto approx = build_approx(point(), {2, 4, 2, 5000});
  std::vector<std::size_t> inner{0};
  for (const auto& step : approx.log) {
    if (step.round == 0) inner.push_back(step.point);
  }
  const auto& d = approx.space;
  bool all = true;
  std::size_t probes = 0;
  for (std::size_t p1 : inner) {
    for (std::size_t p2 : inner) {
      for (std::size_t q1 : inner) {
        for (std::size_t q2 : inner) {
          if (p1 == p2 || q1 == q2 || d.dist(p1, p2) != d.dist(q1, q2)) continue;
          for (std::size_t n : inner) {
            if (n == p1 || n == p2 || d.dist(n, p1) > 4 || d.dist(n, p2) > 4) continue;
            ++probes;
            all = all && extend_partial_isometry(d, {{p1, q1}, {p2, q2}}, n).has_value();
          }
        }
      }
    }
  }
  CHECK(probes > 0);
  CHECK(all);
}
