#include "doctest.h"

#include "coarse/amalgam.hpp"
#include "coarse/instances.hpp"

#include <algorithm>

using namespace coarse;

namespace {

std::size_t at(const NatMetricSpace& s, const std::string& id) {
  auto i = s.index_of(id);
  REQUIRE(i);
  return *i;
}

// Direct evaluation of the three-case formula on B₁ ⊔ B₂.
std::int64_t formula(const AmalgamInstance& in, std::size_t x1, std::size_t y2) {
  std::int64_t best = -1;
  for (std::size_t z = 0; z < in.a.size(); ++z) {
    std::int64_t v = in.b1.dist(x1, in.eta1(z)) + in.b2.dist(in.eta2(z), y2);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

}  // namespace

TEST_CASE("amalgamate examples") {
  NatMetricSpace a({"a"}, {{0}});
  NatMetricSpace b1({"a", "b"}, {{0, 2}, {2, 0}});
  NatMetricSpace b2({"a", "c"}, {{0, 3}, {3, 0}});
  auto r = amalgamate(a, b1, b2, Embedding{{0}}, Embedding{{0}});
  CHECK(r.c.size() == 3);
  CHECK(r.c.dist(r.zeta1(1), r.zeta2(1)) == 5);
  CHECK(r.zeta1(0) == r.zeta2(0));

  NatMetricSpace a2({"a1", "a2"}, {{0, 3}, {3, 0}});
  NatMetricSpace c1({"a1", "a2", "b"}, {{0, 3, 1}, {3, 0, 2}, {1, 2, 0}});
  NatMetricSpace c2({"a1", "a2", "c"}, {{0, 3, 2}, {3, 0, 1}, {2, 1, 0}});
  auto r2 = amalgamate(a2, c1, c2, Embedding{{0, 1}}, Embedding{{0, 1}});
  CHECK(r2.c.dist(r2.zeta1(2), r2.zeta2(2)) == 3);
  CHECK(validate_metric(r2.c).ok());

  auto absorbing = amalgamate(a2, c1, a2, Embedding{{0, 1}}, Embedding{{0, 1}});
  CHECK(isometric(absorbing.c, c1));

  CHECK_THROWS_AS(amalgamate(a2, c1, c2, Embedding{{0, 2}}, Embedding{{0, 1}}), InputError);
  CHECK_THROWS_AS(amalgamate(NatMetricSpace(), c1, c2, Embedding{}, Embedding{}), InputError);
}

TEST_CASE("random amalgams: metric, isometric legs, commuting square, formula, symmetry") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto in = random_amalgam_instance(rng, 3, 6, 8);
    auto r = amalgamate(in.a, in.b1, in.b2, in.eta1, in.eta2);
    CHECK(validate_metric(r.c).ok());
    CHECK(is_embedding(r.zeta1, in.b1, r.c));
    CHECK(is_embedding(r.zeta2, in.b2, r.c));
    CHECK(compose(r.zeta1, in.eta1) == compose(r.zeta2, in.eta2));
    CHECK(r.c.size() == in.b1.size() + in.b2.size() - in.a.size());
    bool matches = true;
    for (std::size_t x = 0; x < in.b1.size(); ++x) {
      for (std::size_t y = 0; y < in.b2.size(); ++y) {
        if (r.zeta1(x) != r.zeta2(y)) matches = matches && r.c.dist(r.zeta1(x), r.zeta2(y)) == formula(in, x, y);
      }
    }
    CHECK(matches);
    auto swapped = amalgamate(in.a, in.b2, in.b1, in.eta2, in.eta1);
    CHECK(isometric(r.c, swapped.c));
  }
}

TEST_CASE("functoriality_witness examples") {
  NatMetricSpace a({"a"}, {{0}});
  NatMetricSpace b1({"a", "b"}, {{0, 2}, {2, 0}});
  NatMetricSpace b2({"a", "c"}, {{0, 3}, {3, 0}});
  auto same = functoriality_witness(a, b1, b1, b2, Embedding{{0}}, Embedding{{0}}, Embedding{{0}}, Embedding{{0, 1}});
  REQUIRE(same.sigma);
  CHECK(same.sigma->images == std::vector<std::size_t>{0, 1, 2});

  NatMetricSpace b1p({"a", "b", "e"}, {{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
  auto grown = functoriality_witness(a, b1, b1p, b2, Embedding{{0}}, Embedding{{0}}, Embedding{{0}}, Embedding{{0, 1}});
  REQUIRE(grown.sigma);
  const Embedding iota{{0, 1}};
  CHECK(compose(*grown.sigma, grown.first.zeta1) == compose(grown.second.zeta1, iota));
  CHECK(compose(*grown.sigma, grown.first.zeta2) == grown.second.zeta2);

  // ι∘η₁ ≠ η₁′.
  NatMetricSpace b1q({"a", "b"}, {{0, 2}, {2, 0}});
  CHECK_THROWS_AS(functoriality_witness(a, b1, b1q, b2, Embedding{{0}}, Embedding{{1}}, Embedding{{0}}, Embedding{{0, 1}}),
                  InputError);
}

TEST_CASE("functoriality_witness succeeds on random instances with |C'| <= 8") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto in = random_functoriality_instance(rng, 8, 8);
    auto r = functoriality_witness(in.base.a, in.base.b1, in.b1p, in.base.b2, in.base.eta1, in.eta1p, in.base.eta2,
                                   in.iota);
    CHECK(r.second.c.size() <= 8);
    REQUIRE(r.sigma);
    CHECK(is_embedding(*r.sigma, r.first.c, r.second.c));
    CHECK(compose(*r.sigma, r.first.zeta1) == compose(r.second.zeta1, in.iota));
    CHECK(compose(*r.sigma, r.first.zeta2) == r.second.zeta2);
  }
}

TEST_CASE("embedding search is lexicographic and exhaustive") {
  NatMetricSpace edge({"x", "y"}, {{0, 1}, {1, 0}});
  NatMetricSpace tri({"p", "q", "r"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto first = find_embedding(edge, tri);
  REQUIRE(first);
  CHECK(first->images == std::vector<std::size_t>{0, 1});
  CHECK(all_embeddings(edge, tri).size() == 6);
  CHECK(all_embeddings(tri, edge).empty());
  auto forced = find_embedding(edge, tri, {std::nullopt, 0});
  REQUIRE(forced);
  CHECK(forced->images == std::vector<std::size_t>{1, 0});
}

TEST_CASE("independence_check examples") {
  NatMetricSpace d({"a", "b1", "b2"}, {{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  CHECK(independence_check(d, {0}, {0}, {2}));
  CHECK(independence_check(d, {0}, {1}, {2}));
  NatMetricSpace e({"a", "b1", "b2"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(independence_check(e, {0}, {1}, {2}));
  CHECK_THROWS_AS(independence_check(e, {}, {1}, {2}), InputError);
  CHECK_THROWS_AS(independence_check(e, {0}, {5}, {2}), InputError);

  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_nat_space(rng, 6, 4);
    std::vector<std::size_t> abar{rng() % 6}, b1{rng() % 6, rng() % 6}, b2{rng() % 6};
    CHECK(independence_check(s, abar, b1, b2) == independence_check(s, abar, b2, b1));
  }

  // Amalgam legs are independent over the base.
  for (int trial = 0; trial < 30; ++trial) {
    auto in = random_amalgam_instance(rng, 3, 5, 6);
    auto r = amalgamate(in.a, in.b1, in.b2, in.eta1, in.eta2);
    std::vector<std::size_t> abar, b1, b2;
    for (std::size_t z = 0; z < in.a.size(); ++z) abar.push_back(r.zeta1(in.eta1(z)));
    for (std::size_t x = 0; x < in.b1.size(); ++x) b1.push_back(r.zeta1(x));
    for (std::size_t y = 0; y < in.b2.size(); ++y) b2.push_back(r.zeta2(y));
    CHECK(independence_check(r.c, abar, b1, b2));
  }
}

TEST_CASE("isometry types and canonical forms") {
  CHECK(enumerate_isometry_types(1, 5).size() == 1);
  CHECK(enumerate_isometry_types(2, 3).size() == 4);  // one point, three two-point spaces
  // Triangles with sides in [1,3] up to isometry: multisets {a ≤ b ≤ c} with c ≤ a + b.
  std::size_t triangles = 0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      for (int c = b; c <= 3; ++c) triangles += c <= a + b;
    }
  }
  CHECK(enumerate_isometry_types(3, 3).size() == 4 + triangles);

  NatMetricSpace x({"p", "q", "r"}, {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  NatMetricSpace y({"u", "v", "w"}, {{0, 3, 1}, {3, 0, 2}, {1, 2, 0}});
  CHECK(isometric(x, y));
  CHECK(canonical_form(x) == canonical_form(y));
}

TEST_CASE("check_fraisse_axioms examples") {
  auto catalog = enumerate_isometry_types(3, 3);
  auto full = check_fraisse_axioms(catalog, 3, 3);
  CHECK(full.ok());
  CHECK(full.amalgamations_checked > 0);

  auto missing = catalog;
  missing.erase(std::find_if(missing.begin(), missing.end(),
                             [](const NatMetricSpace& s) { return s.size() == 2 && s.dist(0, 1) == 2; }));
  auto broken = check_fraisse_axioms(missing, 3, 3);
  CHECK_FALSE(broken.hereditary);
  bool witnessed = false;
  for (const auto& c : broken.counterexamples) witnessed = witnessed || c.axiom == "hereditary";
  CHECK(witnessed);

  auto single = check_fraisse_axioms({NatMetricSpace({"p0"}, {{0}})});
  CHECK(single.ok());
}
