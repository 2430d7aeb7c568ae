#include "doctest.h"

#include "coarse/amalgam.hpp"
#include "coarse/instances.hpp"
#include "coarse/metric.hpp"

using namespace coarse;

namespace {

RatMetricSpace line(const std::vector<Rational>& xs) {
  std::vector<std::string> ids;
  std::vector<std::vector<Rational>> d(xs.size(), std::vector<Rational>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ids.push_back(format_rational(xs[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) d[i][j] = abs(xs[i] - xs[j]);
  }
  return RatMetricSpace(ids, d);
}

RootMetricSpace root_line(const std::vector<Rational>& xs) {
  std::vector<std::string> ids;
  std::vector<std::vector<Surd>> d(xs.size(), std::vector<Surd>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ids.push_back(format_rational(xs[i]));
    for (std::size_t j = 0; j < xs.size(); ++j) d[i][j] = Surd::root(abs(xs[i] - xs[j]));
  }
  return RootMetricSpace(ids, d);
}

RatMetricSpace rat(std::vector<std::string> ids, std::vector<std::vector<int>> d, bool pseudo = false) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : d) r.emplace_back(row.begin(), row.end());
  return RatMetricSpace(std::move(ids), std::move(r), pseudo);
}

}  // namespace

TEST_CASE("validate_metric examples") {
  CHECK(validate_metric(rat({"a"}, {{0}})).ok());

  auto bad = validate_metric(rat({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
  REQUIRE_FALSE(bad.ok());
  bool found = false;
  for (const auto& v : bad.violations) {
    if (v.axiom == "triangle" && v.witness == std::vector<std::size_t>{0, 1, 2}) found = true;
  }
  CHECK(found);

  CHECK_FALSE(validate_metric(rat({"a", "b"}, {{0, 1}, {2, 0}})).ok());
  CHECK_FALSE(validate_metric(rat({"a", "b"}, {{0, 0}, {0, 0}})).ok());
  CHECK(validate_metric(rat({"a", "b"}, {{0, 0}, {0, 0}}, true)).ok());
  CHECK_THROWS_AS(RatMetricSpace({"a", "b"}, {{Rational(0)}}), InputError);
}

TEST_CASE("validate_metric passes on random amalgams (exhaustive triple oracle)") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    auto inst = random_amalgam_instance(rng, 3, 6, 8);
    auto c = amalgamate(inst.a, inst.b1, inst.b2, inst.eta1, inst.eta2).c;
    bool oracle = true;
    for (std::size_t x = 0; x < c.size(); ++x) {
      for (std::size_t y = 0; y < c.size(); ++y) {
        if ((x == y) != (c.dist(x, y) == 0) || c.dist(x, y) != c.dist(y, x)) oracle = false;
        for (std::size_t z = 0; z < c.size(); ++z) {
          if (c.dist(x, z) > c.dist(x, y) + c.dist(y, z)) oracle = false;
        }
      }
    }
    CHECK(oracle);
    CHECK(validate_metric(c).ok());
  }
}

TEST_CASE("metric_quotient examples") {
  auto q1 = metric_quotient(rat({"a", "b"}, {{0, 0}, {0, 0}}, true));
  CHECK(q1.space.size() == 1);
  CHECK(q1.space.point(0) == "a");
  CHECK(q1.projection.images == std::vector<std::size_t>{0, 0});

  auto metric = rat({"a", "b", "c"}, {{0, 2, 3}, {2, 0, 1}, {3, 1, 0}});
  auto q2 = metric_quotient(metric);
  CHECK(q2.space.points() == metric.points());
  CHECK(q2.projection.images == std::vector<std::size_t>{0, 1, 2});

  auto q3 = metric_quotient(rat({"a", "b", "c"}, {{0, 0, 2}, {0, 0, 2}, {2, 2, 0}}, true));
  REQUIRE(q3.space.size() == 2);
  CHECK(q3.space.points() == std::vector<std::string>{"a", "c"});
  CHECK(q3.space.dist(0, 1) == 2);
  CHECK(validate_metric(q3.space).ok());

  // Least id represents its class regardless of position.
  auto q4 = metric_quotient(rat({"z", "b"}, {{0, 0}, {0, 0}}, true));
  CHECK(q4.space.point(0) == "b");

  CHECK_THROWS_AS(metric_quotient(rat({"a", "b", "c"}, {{0, 0, 1}, {0, 0, 3}, {1, 3, 0}}, true)), InputError);
}

TEST_CASE("fit_constants examples") {
  auto x = line({Rational(0), Rational(1, 4), Rational(1), Rational(3)});
  auto id = fit_constants(PointMap::identity(x.size()), x, x, Rational(1));
  REQUIRE(id.k_lip);
  CHECK(*id.k_lip == 1);

  PointMap constant{{2, 2, 2, 2}, 4};
  auto c = fit_constants(constant, x, x, Rational(1));
  REQUIRE(c.k_lip);
  CHECK(*c.k_lip == 0);
  CHECK(c.k_large == 0);

  // d₁ versus d₄ = sqrt|x − y| on {0, 1/4, 1}.
  std::vector<Rational> pts{Rational(0), Rational(1, 4), Rational(1)};
  auto r = fit_constants(PointMap::identity(3), line(pts), root_line(pts), Rational(1, 4));
  CHECK(r.k_short == Surd(Rational(2)));
  REQUIRE(r.k_lip);
  CHECK(*r.k_lip == Surd(Rational(2)));

  CHECK_THROWS_AS(fit_constants(PointMap::identity(1), x, x, Rational(0)), InputError);
  CHECK_THROWS_AS(fit_constants(PointMap{{5}, 4}, x.subspace({0}), x, Rational(1)), InputError);
}

TEST_CASE("fit_constants are minimal and valid (exhaustive pair oracle)") {
  Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    auto x = random_rational_space(rng, 2 + trial % 6);
    auto y = random_rational_space(rng, 1 + trial % 5);
    auto map = random_point_map(rng, x.size(), y.size());
    Rational delta(static_cast<long long>(1 + trial % 7), 2);
    auto r = fit_constants(map, x, y, delta);

    Rational lip = 0, large = 0, shortc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (i == j) continue;
        Rational d = x.dist(i, j), e = y.dist(map(i), map(j));
        lip = std::max(lip, Rational(e / d));
        large = std::max(large, Rational(e / (d + 1)));
        if (d <= delta) shortc = std::max(shortc, Rational(e / d));
      }
    }
    REQUIRE(r.k_lip);
    CHECK(*r.k_lip == lip);
    CHECK(r.k_large == large);
    CHECK(r.k_short == shortc);
    CHECK(*r.k_lip <= r.splitting_bound);
    const Rational k = std::max(r.k_large, r.k_short);
    CHECK(*r.k_lip <= k + k / delta);
  }
}

TEST_CASE("k_lip is absent when a zero distance maps to a positive one") {
  auto x = rat({"a", "b", "c"}, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, true);
  auto y = rat({"p", "q"}, {{0, 1}, {1, 0}});
  auto r = fit_constants(PointMap{{0, 1, 1}, 2}, x, y, Rational(1));
  CHECK_FALSE(r.k_lip);
  CHECK(r.k_large == 1);
}

TEST_CASE("closeness examples") {
  auto x = line({Rational(0), Rational(1), Rational(2)});
  CHECK(closeness(PointMap::identity(3), PointMap::identity(3), x) == 0);
  CHECK(closeness(PointMap{{0, 0, 0}, 3}, PointMap{{2, 2, 2}, 3}, x) == 2);

  // floor versus identity on the sample {0.3, 1.7}, inside the line {0.3, 1.7, 0, 1}.
  auto y = line({parse_rational("0.3"), parse_rational("1.7"), Rational(0), Rational(1)});
  CHECK(closeness(PointMap{{2, 3}, 4}, PointMap{{0, 1}, 4}, y) == parse_rational("0.7"));

  CHECK_THROWS_AS(closeness(PointMap{{0}, 3}, PointMap{{0, 1}, 3}, x), InputError);
}

TEST_CASE("qi_constants examples") {
  std::vector<Rational> ints;
  for (int i = 0; i <= 10; ++i) ints.emplace_back(i);
  auto x = line(ints);
  auto same = qi_constants(x, x, PointMap::identity(11), PointMap::identity(11));
  CHECK(same.k == 1);
  CHECK(same.closeness_on_x == 0);
  CHECK(same.quasi_isometry);

  // Half-integer sample of [0, 10] against the integers: floor and inclusion.
  std::vector<Rational> halves;
  for (int i = 0; i <= 20; ++i) halves.emplace_back(i, 2);
  auto xs = line(halves);
  PointMap floor_map{{}, 11}, inclusion{{}, 21};
  for (int i = 0; i <= 20; ++i) floor_map.images.push_back(static_cast<std::size_t>(i / 2));
  for (int i = 0; i <= 10; ++i) inclusion.images.push_back(static_cast<std::size_t>(2 * i));
  auto fl = qi_constants(xs, x, floor_map, inclusion);
  CHECK(fl.closeness_on_x <= 1);
  CHECK(fl.closeness_on_y == 0);
  CHECK(fl.k == 1);

  auto point = line({Rational(0)});
  auto bounded = qi_constants(x, point, PointMap{std::vector<std::size_t>(11, 0), 1}, PointMap{{0}, 11});
  CHECK(bounded.quasi_isometry);
  CHECK(bounded.closeness_on_x == 10);
  CHECK(bounded.k == 10);
}
