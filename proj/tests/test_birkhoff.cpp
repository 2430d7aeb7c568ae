#include "doctest.h"

#include "coarse/birkhoff.hpp"
#include "coarse/instances.hpp"
#include "coarse/word_metric.hpp"

using namespace coarse;

namespace {

std::vector<Element> interval(const FiniteGroup& z, int radius) {
  std::vector<Element> out;
  const int n = static_cast<int>(z.order());
  for (int i = -radius; i <= radius; ++i) out.push_back(static_cast<Element>(((i % n) + n) % n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NeighborhoodChain z100_chain(const FiniteGroup& z, int third = 13) {
  std::vector<Element> all(z.order());
  for (Element i = 0; i < z.order(); ++i) all[i] = i;
  return NeighborhoodChain(z, 0, {interval(z, 1), interval(z, 4), interval(z, third), all});
}

// Fixed-point iteration ℓ(g) = min(ℓ(g), ℓ(gh⁻¹) + L(h)) from ℓ(1) = 0, independent of
// the shortest-path routine.
std::vector<Rational> factorisation_oracle(const NeighborhoodChain& chain) {
  const FiniteGroup& g = chain.group();
  std::vector<std::optional<Rational>> best(g.order());
  best[g.identity()] = Rational(0);
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < g.order(); ++x) {
      for (Element h = 0; h < g.order(); ++h) {
        const Element prefix = g.mul(x, g.inv(h));
        if (!best[prefix]) continue;
        Rational via = *best[prefix] + capital_L(chain, h);
        if (!best[x] || via < *best[x]) {
          best[x] = via;
          changed = true;
        }
      }
    }
  }
  std::vector<Rational> out;
  for (auto& v : best) out.push_back(*v);
  return out;
}

}  // namespace

TEST_CASE("validate_chain examples") {
  FiniteGroup z = FiniteGroup::cyclic(100);
  std::vector<Element> all(100);
  for (Element i = 0; i < 100; ++i) all[i] = i;
  CHECK(validate_chain(NeighborhoodChain(z, 0, {all})).ok());
  CHECK(validate_chain(z100_chain(z)).ok());

  auto bad = validate_chain(z100_chain(z, 11));
  REQUIRE_FALSE(bad.ok());
  bool twelve = false;
  for (const auto& v : bad.violations) {
    CHECK(v.axiom == "cube");
    const Element product = z.mul(z.mul(static_cast<Element>(v.witness[1]), static_cast<Element>(v.witness[2])),
                                  static_cast<Element>(v.witness[3]));
    if (v.witness[0] == 1 && product == 12) twelve = true;
  }
  CHECK(twelve);

  CHECK_FALSE(validate_chain(NeighborhoodChain(z, 0, {{0, 1}, all})).ok());  // not symmetric
  CHECK_FALSE(validate_chain(NeighborhoodChain(z, 0, {{1, 99}, all})).ok());  // no identity
  CHECK_FALSE(validate_chain(NeighborhoodChain(z, 0, {interval(z, 1)})).ok());  // not exhaustive
}

TEST_CASE("capital_L and birkhoff_length on the Z_100 chain") {
  FiniteGroup z = FiniteGroup::cyclic(100);
  auto chain = z100_chain(z);
  CHECK(capital_L(chain, 0) == 0);
  CHECK(capital_L(chain, 5) == 4);
  CHECK(capital_L(chain, 1) == 1);
  CHECK(capital_L(chain, 99) == 1);
  CHECK(capital_L(chain, 50) == 8);
  CHECK_THROWS_AS(capital_L(chain, 100), InputError);

  auto ell = birkhoff_length(chain);
  CHECK(ell(0) == 0);
  CHECK(ell(5) == 3);
  CHECK(ell.separates_points);
  auto oracle = factorisation_oracle(chain);
  for (Element g = 0; g < 100; ++g) {
    CHECK(ell(g) == oracle[g]);
    CHECK(capital_L(chain, g) / 2 <= ell(g));
    CHECK(ell(g) <= capital_L(chain, g));
  }
  CHECK(validate_length(z, ell).ok());
  CHECK_THROWS_AS(birkhoff_length(z100_chain(z, 11)), InputError);
}

TEST_CASE("birkhoff_length matches the factorisation oracle on random chains") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteGroup g = random_small_group(rng, 60);
    auto chain = random_chain(g, rng);
    REQUIRE(validate_chain(chain).ok());
    auto ell = birkhoff_length(chain);
    auto oracle = factorisation_oracle(chain);
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(ell(x) == oracle[x]);
      CHECK(capital_L(chain, x) <= 2 * ell(x));
      CHECK(ell(x) <= capital_L(chain, x));
    }
    CHECK(validate_length(g, ell).ok());
  }
}

TEST_CASE("refining a chain never increases the length") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteGroup g = random_small_group(rng, 80);
    auto chain = random_chain(g, rng);
    auto ell = birkhoff_length(chain);

    auto bottom = chain.with_bottom_level({g.identity()});
    REQUIRE(validate_chain(bottom).ok());
    auto ell_bottom = birkhoff_length(bottom);

    // Enlarge the top proper level by its own inverse-closed extension inside the next level.
    const int n = chain.n_max() - 1;
    std::vector<Element> extra;
    if (n >= chain.n_min()) {
      for (Element x = 0; x < g.order(); ++x) {
        if (chain.contains(n + 1, x) && !chain.contains(n, x)) {
          extra.push_back(x);
          extra.push_back(g.inv(x));
          break;
        }
      }
    }
    auto enlarged = n >= chain.n_min() ? chain.with_level_enlarged(n, extra) : chain;
    const bool valid = validate_chain(enlarged).ok();
    for (Element x = 0; x < g.order(); ++x) CHECK(ell_bottom(x) <= ell(x));
    if (valid) {
      auto ell_enlarged = birkhoff_length(enlarged);
      for (Element x = 0; x < g.order(); ++x) CHECK(ell_enlarged(x) <= ell(x));
    }
  }
}

TEST_CASE("check_minimality examples") {
  FiniteGroup z20 = FiniteGroup::cyclic(20);
  auto word = word_length_function(z20, {1, 19});
  auto r = check_minimality(z20, word, interval(z20, 5), Rational(1, 2));
  CHECK(r.upper_holds);
  CHECK(r.pairs_scanned > 0);

  auto vacuous = check_minimality(z20, word, {0}, Rational(1));
  CHECK(vacuous.holds);
  CHECK_FALSE(vacuous.max_eps);

  LengthFunction zero{std::vector<Rational>(20, Rational(0)), false};
  auto z = check_minimality(z20, zero, interval(z20, 5), Rational(1));
  CHECK(z.upper_holds);
  CHECK(z.lower_holds);
  CHECK_FALSE(z.max_eps);

  FiniteGroup z100 = FiniteGroup::cyclic(100);
  auto w100 = word_length_function(z100, {1, 99});
  for (int radius : {3, 10, 24}) {
    auto m = check_minimality(z100, w100, interval(z100, radius), Rational(1));
    CHECK(m.holds);
    REQUIRE(m.max_eps);
    CHECK(*m.max_eps == 1);
  }

  // Wrap-around in Z_10 with U everything: 6·1 = 6 has length 4 < 6.
  FiniteGroup z10 = FiniteGroup::cyclic(10);
  auto w10 = word_length_function(z10, {1, 9});
  auto wrap = check_minimality(z10, w10, interval(z10, 5), Rational(1));
  CHECK_FALSE(wrap.lower_holds);
  REQUIRE(wrap.max_eps);
  CHECK(*wrap.max_eps < 1);
}

TEST_CASE("check_large_scale_geodesic examples") {
  // Path metric of a 5-cycle.
  std::vector<std::vector<std::int64_t>> cyc(5, std::vector<std::int64_t>(5));
  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) {
    ids.push_back("v" + std::to_string(i));
    for (int j = 0; j < 5; ++j) cyc[i][j] = std::min((i - j + 5) % 5, (j - i + 5) % 5);
  }
  CHECK(check_large_scale_geodesic(NatMetricSpace(ids, cyc), Rational(1)).holds);

  NatMetricSpace two({"a", "b"}, {{0, 5}, {5, 0}});
  auto r = check_large_scale_geodesic(two, Rational(1));
  CHECK_FALSE(r.holds);
  REQUIRE_FALSE(r.failures.empty());
  CHECK_FALSE(r.failures.front().chain_length);

  auto grid = box_word_metric(2, 4, {{1, 0}, {0, 1}});
  CHECK(grid.size() == 81);
  CHECK(check_large_scale_geodesic(grid, Rational(1)).holds);

  CHECK_THROWS_AS(check_large_scale_geodesic(two, Rational(0)), InputError);
}
