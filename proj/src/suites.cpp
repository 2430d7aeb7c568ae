#include "coarse/suites.hpp"

#include "coarse/instances.hpp"
#include "coarse/word_metric.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace coarse {

Outcome birkhoff_bound_suite(std::uint64_t seed, std::size_t instances, std::size_t max_order) {
  Outcome out;
  Rng rng(seed);
  std::size_t invalid = 0, bound_failures = 0, axiom_failures = 0, elements = 0, largest = 0, separating = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    FiniteGroup g = random_small_group(rng, max_order);
    NeighborhoodChain chain = random_chain(g, rng);
    largest = std::max(largest, g.order());
    if (!validate_chain(chain).ok()) {
      ++invalid;
      continue;
    }
    LengthFunction ell = birkhoff_length(chain);
    separating += ell.separates_points;
    for (Element x = 0; x < g.order(); ++x) {
      const Rational big_l = capital_L(chain, x);
      if (2 * ell(x) < big_l || ell(x) > big_l) ++bound_failures;
    }
    elements += g.order();
    if (!validate_length(g, ell).ok()) ++axiom_failures;
  }
  out.data = {{"instances", instances},
              {"max_order", max_order},
              {"largest_group", largest},
              {"elements_checked", elements},
              {"length_functions", separating},
              {"invalid_chains", invalid},
              {"bound_failures", bound_failures},
              {"axiom_failures", axiom_failures}};
  out.check("chains_valid", invalid == 0);
  out.check("half_L_le_ell_le_L", bound_failures == 0);
  out.check("pseudolength_axioms", axiom_failures == 0);
  return out;
}

Outcome lipschitz_splitting_suite(std::uint64_t seed, std::size_t instances, std::size_t sqrt_max_n) {
  Outcome out;
  Rng rng(seed);
  const std::vector<Rational> deltas{Rational(1, 2), Rational(1), Rational(2), Rational(5)};
  std::size_t failures = 0, literal_failures = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t nx = 2 + rng() % 7, ny = 2 + rng() % 7;
    RatMetricSpace x = random_rational_space(rng, nx);
    RatMetricSpace y = random_rational_space(rng, ny);
    PointMap map = random_point_map(rng, nx, ny);
    const Rational& delta = deltas[rng() % deltas.size()];
    auto r = fit_constants(map, x, y, delta);
    if (!r.k_lip) {
      ++failures;
      continue;
    }
    const Rational k = std::max(r.k_large, r.k_short);
    if (*r.k_lip > r.splitting_bound || r.splitting_bound > k + k / delta) ++failures;
    if (*r.k_lip > r.k_large + r.k_large / delta) ++literal_failures;
  }

  Json family = Json::array();
  bool above_root = true, increasing = true;
  std::optional<Surd> previous;
  for (std::size_t n = 1; n <= sqrt_max_n; ++n) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i <= n; ++i) xs.emplace_back(static_cast<long long>(i), static_cast<long long>(n * n));
    std::vector<std::string> ids;
    std::vector<std::vector<Rational>> d1(xs.size(), std::vector<Rational>(xs.size()));
    std::vector<std::vector<Surd>> d4(xs.size(), std::vector<Surd>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ids.push_back(format_rational(xs[i]));
      for (std::size_t k = 0; k < xs.size(); ++k) {
        d1[i][k] = abs(xs[i] - xs[k]);
        d4[i][k] = Surd::root(d1[i][k]);
      }
    }
    auto r = fit_constants(PointMap::identity(xs.size()), RatMetricSpace(ids, d1), RootMetricSpace(ids, d4), Rational(1));
    above_root = above_root && r.k_short >= Surd::root(Rational(static_cast<long long>(n)));
    if (previous && n > 1) increasing = increasing && r.k_short > *previous;
    previous = r.k_short;
    family.push_back({{"n", n}, {"k_short", format_surd(r.k_short)}});
  }

  out.data = {{"instances", instances},
              {"splitting_failures", failures},
              {"literal_bound_violations", literal_failures},
              {"sqrt_family", std::move(family)}};
  out.check("k_lip_le_splitting_bound", failures == 0);
  out.check("sqrt_k_short_ge_root_n", above_root);
  out.check("sqrt_k_short_increasing", increasing);
  return out;
}

Outcome word_metric_oracle_suite(std::uint64_t seed, std::size_t max_m, int max_radius, std::size_t random_groups) {
  Outcome out;
  std::size_t pairs = 0, cyclic_failures = 0, box_failures = 0, geodesic_failures = 0, spaces = 0;
  auto geodesic = [&](const NatMetricSpace& s) {
    ++spaces;
    if (!check_large_scale_geodesic(s, Rational(1)).holds) ++geodesic_failures;
  };

  for (std::size_t m = 2; m <= max_m; ++m) {
    FiniteGroup z = FiniteGroup::cyclic(m);
    WordMetric wm(z, GeneratingSet::make(z, {1}));
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        const std::size_t diff = x > y ? x - y : y - x;
        ++pairs;
        if (wm.distance(x, y) != std::min(diff, m - diff)) ++cyclic_failures;
      }
    }
    geodesic(wm.to_space());
  }

  for (int radius = 1; radius <= max_radius; ++radius) {
    NatMetricSpace box = box_word_metric(2, radius, {{1, 0}, {0, 1}});
    std::vector<std::pair<int, int>> coords;
    for (const auto& id : box.points()) {
      int a = 0, b = 0;
      if (std::sscanf(id.c_str(), "(%d,%d)", &a, &b) != 2) throw InputError("unexpected box point id " + id);
      coords.emplace_back(a, b);
    }
    for (std::size_t i = 0; i < box.size(); ++i) {
      for (std::size_t k = 0; k < box.size(); ++k) {
        ++pairs;
        const int l1 = std::abs(coords[i].first - coords[k].first) + std::abs(coords[i].second - coords[k].second);
        if (box.dist(i, k) != l1) ++box_failures;
      }
    }
    geodesic(box);
  }

  Rng rng(seed);
  for (std::size_t i = 0; i < random_groups; ++i) {
    FiniteGroup g = random_small_group(rng, 120);
    std::vector<Element> gens;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) gens.push_back(static_cast<Element>(rng() % g.order()));
    geodesic(WordMetric(g, GeneratingSet::make(g, gens)).to_space());
  }

  out.data = {{"pairs_checked", pairs},
              {"cyclic_failures", cyclic_failures},
              {"box_failures", box_failures},
              {"metrics_checked", spaces},
              {"geodesic_failures", geodesic_failures}};
  out.check("cyclic_closed_form", cyclic_failures == 0);
  out.check("box_l1_closed_form", box_failures == 0);
  out.check("geodesic_k1", geodesic_failures == 0);
  return out;
}

Outcome amalgamation_suite(std::uint64_t seed, std::size_t instances, std::size_t functoriality_instances) {
  Outcome out;
  Rng rng(seed);
  std::size_t metric = 0, legs = 0, square = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    auto in = random_amalgam_instance(rng, 3, 6, 8);
    auto r = amalgamate(in.a, in.b1, in.b2, in.eta1, in.eta2);
    metric += !validate_metric(r.c).ok();
    legs += !is_embedding(r.zeta1, in.b1, r.c) || !is_embedding(r.zeta2, in.b2, r.c);
    square += compose(r.zeta1, in.eta1) != compose(r.zeta2, in.eta2);
  }
  std::size_t witnessed = 0, largest = 0;
  for (std::size_t i = 0; i < functoriality_instances; ++i) {
    auto in = random_functoriality_instance(rng, 8, 8);
    auto r = functoriality_witness(in.base.a, in.base.b1, in.b1p, in.base.b2, in.base.eta1, in.eta1p, in.base.eta2,
                                   in.iota);
    largest = std::max(largest, r.second.c.size());
    witnessed += r.sigma && is_embedding(*r.sigma, r.first.c, r.second.c) &&
                 compose(*r.sigma, r.first.zeta1) == compose(r.second.zeta1, in.iota) &&
                 compose(*r.sigma, r.first.zeta2) == r.second.zeta2;
  }
  out.data = {{"instances", instances},
              {"invalid_metrics", metric},
              {"non_isometric_legs", legs},
              {"non_commuting_squares", square},
              {"functoriality_instances", functoriality_instances},
              {"largest_c_prime", largest},
              {"functoriality_witnessed", witnessed}};
  out.check("amalgam_is_metric", metric == 0);
  out.check("legs_isometric", legs == 0);
  out.check("square_commutes", square == 0);
  out.check("functoriality", witnessed == functoriality_instances && largest <= 8);
  return out;
}

Outcome urysohn_suite(std::size_t s, std::int64_t r, std::size_t rounds, std::size_t hard_cap) {
  Outcome out;
  auto approx = build_approx(NatMetricSpace({"o"}, {{0}}), {s, r, rounds, hard_cap});
  auto types = enumerate_isometry_types(3, r);
  std::size_t embedded = 0;
  for (const auto& t : types) embedded += embed_space(approx.space, t).has_value();
  auto path = verify_path_metric(approx.space, r);
  out.data = {{"points", approx.space.size()},
              {"partial", approx.partial},
              {"diameter", approx.space.diameter()},
              {"types", types.size()},
              {"types_embedded", embedded},
              {"distance_one_graph_connected", path.connected},
              {"pairs_checked", path.pairs_checked},
              {"pairs_equal", path.pairs_equal}};
  out.check("within_cap", !approx.partial);
  out.check("embeds_all_small_types", embedded == types.size());
  out.check("path_metric_equals_d", path.holds());
  return out;
}

namespace {

Json ms_summary(const MSReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"n", l.n}, {"sphere", l.sphere_size}, {"power", l.power_size}, {"missing", l.missing}});
  }
  return Json{{"base", r.base},
              {"generators", r.generators.size()},
              {"C", r.displacement_constant},
              {"containment", r.containment_holds},
              {"reverse_bound", r.reverse_bound_holds},
              {"levels", std::move(levels)}};
}

}  // namespace

Outcome milnor_schwarz_suite() {
  Outcome out;
  auto run_all = [&](const GroupAction& action, const std::string& name) {
    Json per_vertex = Json::array();
    bool ok = true;
    const std::size_t diameter = action.graph.diameter();
    for (Vertex v = 0; v < action.graph.vertex_count(); ++v) {
      auto r = milnor_schwarz_verify(action, v);
      ok = ok && r.ok() && r.levels.size() == diameter + 1;
      per_vertex.push_back(ms_summary(r));
    }
    out.data[name] = {{"vertices", action.graph.vertex_count()}, {"diameter", diameter}, {"per_vertex", per_vertex}};
    return ok;
  };
  PermGroup s4 = symmetric_group(4);
  const bool cayley = run_all(cayley_action(s4, s4.generators), "cayley_s4");
  auto petersen = petersen_action();
  const std::size_t order = enumerate(petersen.group).order();
  const bool pet = run_all(petersen, "petersen");
  out.data["petersen_group_order"] = order;
  out.check("cayley_s4_containments", cayley);
  out.check("petersen_order_120", order == 120);
  out.check("petersen_containments", pet);
  return out;
}

Outcome double_coset_suite(std::uint64_t seed, std::size_t instances, std::size_t max_order) {
  Outcome out;
  Rng rng(seed);
  std::size_t agree = 0, equal = 0, largest = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    PermGroup g = random_perm_group(rng, 4, 7, max_order);
    auto elements = enumerate(g);
    largest = std::max(largest, elements.order());
    const Perm& x = elements[rng() % elements.order()];
    const Perm& y = elements[rng() % elements.order()];
    Tuple abar{static_cast<Point>(rng() % g.degree)}, bbar{static_cast<Point>(rng() % g.degree)};
    if (i % 3 == 0) bbar.push_back(static_cast<Point>(rng() % g.degree));
    if (i % 4 == 1) abar.push_back(static_cast<Point>(rng() % g.degree));
    auto r = double_coset_conditions(g, x, y, abar, bbar);
    agree += r.consistent();
    equal += r.double_cosets_equal;
  }
  out.data = {{"instances", instances}, {"largest_group", largest}, {"agreeing", agree}, {"equal_double_cosets", equal}};
  out.check("conditions_agree", agree == instances);
  out.check("group_orders_within_bound", largest <= max_order);
  return out;
}

Outcome independence_suite(std::uint64_t seed, std::size_t valence, std::size_t depth, std::size_t samples) {
  Outcome out;
  auto tree = build_truncated_tree(valence, depth);
  const std::size_t order = enumerate(tree.automorphisms).order();
  const Vertex a = tree.root();
  auto r = verify_independence_axioms(tree, a, {seed, samples, 2});

  const Tuple abar{static_cast<Point>(a)};
  auto independent = [&](const Tuple& c, const Tuple& b) { return tree_independent(tree.graph, a, b, c); };
  bool contained = true;
  Json containments = Json::array();
  for (Vertex b = 0; b < tree.graph.vertex_count(); ++b) {
    if (b == a) continue;
    const Tuple bbar{static_cast<Point>(b)};
    auto f = stationarity_connectors(tree.automorphisms, abar, bbar, independent);
    auto c = boundedness_containment(tree.automorphisms, abar, bbar, f);
    contained = contained && c.holds;
    containments.push_back({{"b", b}, {"connectors", f.size()}, {"product_size", c.product_size}, {"holds", c.holds}});
  }
  auto tally = [](const AxiomTally& t) {
    return Json{{"checked", t.checked}, {"passed", t.passed}, {"failed", t.failed}, {"inconclusive", t.inconclusive}};
  };
  out.data = {{"valence", valence},
              {"depth", depth},
              {"automorphism_group_order", order},
              {"samples", samples},
              {"monotonicity", tally(r.monotonicity)},
              {"existence", tally(r.existence)},
              {"stationarity", tally(r.stationarity)},
              {"failures", r.failures},
              {"boundedness", std::move(containments)}};
  if (valence == 3 && depth == 2) out.check("aut_order_48", order == 48);
  out.check("monotonicity", r.monotonicity.failed == 0);
  out.check("existence", r.existence.failed == 0 && r.existence.passed > 0);
  out.check("stationarity", r.stationarity.failed == 0 && r.stationarity.passed > 0);
  out.check("boundedness_containment", contained);
  return out;
}

}  // namespace coarse
