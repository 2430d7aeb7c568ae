#include "coarse/scenario.hpp"

#include "coarse/instances.hpp"
#include "coarse/suites.hpp"
#include "coarse/word_metric.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

namespace coarse {

namespace fs = std::filesystem;

bool Outcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

const Json& Context::input(const std::string& key) const {
  if (!inputs.contains(key)) throw InputError("missing input \"" + key + "\"");
  return inputs.at(key);
}

namespace {

Rational rational_param(const Context& c, const std::string& key, const Rational& fallback) {
  if (!c.params.contains(key)) return fallback;
  const Json& v = c.params.at(key);
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("parameter \"" + key + "\" must be an integer or a \"p/q\" string");
}

std::string rational_text(const Rational& r) { return format_rational(r); }

Json pair_json(const std::optional<PointPair>& p, const std::vector<std::string>& ids) {
  if (!p) return nullptr;
  return Json::array({ids[p->first], ids[p->second]});
}

Json ids_of(const FiniteGroup& g, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(g.id(x));
  return out;
}

Json perms_json(const std::vector<Perm>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

// ---- metric ----

template <class Scalar>
Outcome validate_space(const MetricSpace<Scalar>& s) {
  Outcome out;
  auto report = validate_metric(s);
  out.data = {{"points", s.size()}, {"validation", to_json(report)}};
  out.check(s.pseudometric() ? "pseudometric" : "metric", report.ok());
  return out;
}

Outcome op_metric_validate(const Context& c) {
  const Json& s = c.input("space");
  if (space_has_surds(s)) return validate_space(root_space_from_json(s));
  return validate_space(rat_space_from_json(s));
}

Outcome op_metric_quotient(const Context& c) {
  Outcome out;
  auto q = metric_quotient(rat_space_from_json(c.input("space")));
  out.data = {{"space", to_json(q.space)}, {"projection", q.projection.images}};
  return out;
}

template <class Scalar>
Outcome fit_report(const PointMap& map, const RatMetricSpace& x, const MetricSpace<Scalar>& y, const Rational& delta) {
  Outcome out;
  auto r = fit_constants(map, x, y, delta);
  out.data = {{"delta", rational_text(delta)},
              {"k_lip", r.k_lip ? Json(format_scalar(*r.k_lip)) : Json(nullptr)},
              {"k_large", format_scalar(r.k_large)},
              {"k_short", format_scalar(r.k_short)},
              {"splitting_bound", format_scalar(r.splitting_bound)},
              {"lip_witness", pair_json(r.lip_witness, x.points())},
              {"large_witness", pair_json(r.large_witness, x.points())},
              {"short_witness", pair_json(r.short_witness, x.points())}};
  out.check("k_lip_within_splitting_bound", !r.k_lip || *r.k_lip <= r.splitting_bound);
  return out;
}

Outcome op_metric_fit(const Context& c) {
  RatMetricSpace x = rat_space_from_json(c.input("x"));
  const Json& yj = c.input("y");
  const Rational delta = rational_param(c, "delta", Rational(1));
  if (delta <= 0) throw InputError("delta must be positive");
  if (space_has_surds(yj)) {
    RootMetricSpace y = root_space_from_json(yj);
    return fit_report(point_map_from_json(c.input("map"), x.points(), y.points()), x, y, delta);
  }
  RatMetricSpace y = rat_space_from_json(yj);
  return fit_report(point_map_from_json(c.input("map"), x.points(), y.points()), x, y, delta);
}

Outcome op_metric_qi(const Context& c) {
  Outcome out;
  RatMetricSpace x = rat_space_from_json(c.input("x"));
  RatMetricSpace y = rat_space_from_json(c.input("y"));
  auto f = point_map_from_json(c.input("forward"), x.points(), y.points());
  auto g = point_map_from_json(c.input("backward"), y.points(), x.points());
  auto r = qi_constants(x, y, f, g);
  out.data = {{"forward_k_large", rational_text(r.forward_k_large)},
              {"backward_k_large", rational_text(r.backward_k_large)},
              {"closeness_on_x", rational_text(r.closeness_on_x)},
              {"closeness_on_y", rational_text(r.closeness_on_y)},
              {"k", rational_text(r.k)},
              {"quasi_isometry", r.quasi_isometry}};
  out.check("quasi_isometry", r.quasi_isometry);
  return out;
}

// ---- birkhoff ----

Outcome op_birkhoff_chain(const Context& c) {
  Outcome out;
  FiniteGroup g = group_from_json(c.input("group"));
  NeighborhoodChain chain = chain_from_json(g, c.input("chain"));
  auto report = validate_chain(chain);
  out.data = {{"group_order", g.order()}, {"validation", to_json(report)}};
  // Witness n is stored as an offset from n_min.
  for (auto& v : out.data["validation"]["violations"]) {
    const std::string axiom = v["axiom"];
    if (axiom != "exhaustion" && !v["witness"].empty()) {
      v["n"] = static_cast<int>(v["witness"][0].get<std::size_t>()) + chain.n_min();
    }
  }
  out.check("chain_valid", report.ok());
  return out;
}

Outcome op_birkhoff_length(const Context& c) {
  Outcome out;
  FiniteGroup g = group_from_json(c.input("group"));
  NeighborhoodChain chain = chain_from_json(g, c.input("chain"));
  auto chain_report = validate_chain(chain);
  out.data["chain_valid"] = chain_report.ok();
  if (!chain_report.ok()) {
    out.data["validation"] = to_json(chain_report);
    out.check("chain_valid", false);
    return out;
  }
  LengthFunction ell = birkhoff_length(chain);
  CsvTable table{"length", {"element", "length", "L"}, {}};
  std::size_t bound_failures = 0;
  Json lengths = Json::object();
  for (Element x = 0; x < g.order(); ++x) {
    const Rational big_l = capital_L(chain, x);
    if (2 * ell(x) < big_l || ell(x) > big_l) ++bound_failures;
    table.rows.push_back({g.id(x), rational_text(ell(x)), rational_text(big_l)});
    lengths[g.id(x)] = rational_text(ell(x));
  }
  auto axioms = validate_length(g, ell);
  out.data["separates_points"] = ell.separates_points;
  out.data["bound_failures"] = bound_failures;
  out.data["length_axioms"] = to_json(axioms);
  out.data["length"] = std::move(lengths);
  out.tables.push_back(std::move(table));
  out.check("chain_valid", true);
  out.check("half_L_le_ell_le_L", bound_failures == 0);
  out.check("pseudolength_axioms", axioms.ok());
  return out;
}

Json minimality_witnesses(const FiniteGroup& g, const std::vector<MinimalityWitness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back({{"g", g.id(w.g)}, {"n", w.n}, {"ratio", rational_text(w.ratio)}});
  return out;
}

Outcome op_birkhoff_minimality(const Context& c) {
  Outcome out;
  FiniteGroup g = group_from_json(c.input("group"));
  LengthFunction ell;
  if (c.has_input("chain")) {
    NeighborhoodChain chain = chain_from_json(g, c.input("chain"));
    if (!validate_chain(chain).ok()) throw InputError("invalid chain");
    ell = birkhoff_length(chain);
  } else {
    ell = word_length_function(g, elements_from_json(g, c.input("generators")));
  }
  auto u = elements_from_json(g, c.input("u"));
  const Rational eps = rational_param(c, "eps", Rational(1));
  if (eps <= 0) throw InputError("eps must be positive");
  auto r = check_minimality(g, ell, u, eps);
  out.data = {{"eps", rational_text(eps)},
              {"upper_holds", r.upper_holds},
              {"lower_holds", r.lower_holds},
              {"max_eps", r.max_eps ? Json(rational_text(*r.max_eps)) : Json("unbounded")},
              {"pairs_scanned", r.pairs_scanned},
              {"upper_violations", minimality_witnesses(g, r.upper_violations)},
              {"lower_violations", minimality_witnesses(g, r.lower_violations)}};
  out.check("minimality", r.holds);
  return out;
}

Outcome op_birkhoff_geodesic(const Context& c) {
  Outcome out;
  RatMetricSpace s = rat_space_from_json(c.input("space"));
  const Rational k = rational_param(c, "k", Rational(1));
  auto r = check_large_scale_geodesic(s, k);
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"x", s.point(f.x)},
                        {"y", s.point(f.y)},
                        {"chain_length", f.chain_length ? Json(rational_text(*f.chain_length)) : Json(nullptr)}});
  }
  out.data = {{"k", rational_text(k)}, {"failures", std::move(failures)}};
  out.check("large_scale_geodesic", r.holds);
  return out;
}

// ---- word metric ----

Outcome op_wordmetric(const Context& c) {
  Outcome out;
  FiniteGroup g = group_from_json(c.input("group"));
  auto gens = GeneratingSet::make(g, elements_from_json(g, c.input("generators")));
  WordMetric wm(g, gens);
  const std::size_t n_max = c.param<std::size_t>("n_max", 10);
  auto grow = growth(g, gens, n_max);
  CsvTable dist{"distances", {"x", "y", "distance"}, {}};
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) {
      auto d = wm.distance(x, y);
      dist.rows.push_back({g.id(x), g.id(y), d ? std::to_string(*d) : "inf"});
    }
  }
  CsvTable growth_table{"growth", {"n", "ball_size"}, {}};
  for (std::size_t n = 0; n < grow.size(); ++n) growth_table.rows.push_back({std::to_string(n), std::to_string(grow[n])});
  const bool geodesic = check_large_scale_geodesic(wm.to_space(), Rational(1)).holds;
  out.data = {{"group_order", g.order()},
              {"alphabet", ids_of(g, wm.alphabet())},
              {"generates", wm.generates()},
              {"subgroup_order", wm.members().size()},
              {"growth", grow}};
  out.tables.push_back(std::move(dist));
  out.tables.push_back(std::move(growth_table));
  out.check("geodesic_k1", geodesic);
  return out;
}

// ---- amalgam ----

Json embedding_json(const Embedding& e, const NatMetricSpace& codomain) {
  Json out = Json::array();
  for (std::size_t i : e.images) out.push_back(codomain.point(i));
  return out;
}

Outcome op_amalgamate(const Context& c) {
  Outcome out;
  auto a = nat_space_from_json(c.input("a"));
  auto b1 = nat_space_from_json(c.input("b1"));
  auto b2 = nat_space_from_json(c.input("b2"));
  auto eta1 = embedding_from_json(c.input("eta1"), a, b1);
  auto eta2 = embedding_from_json(c.input("eta2"), a, b2);
  auto r = amalgamate(a, b1, b2, eta1, eta2);
  out.data = {{"c", to_json(r.c)},
              {"zeta1", embedding_json(r.zeta1, r.c)},
              {"zeta2", embedding_json(r.zeta2, r.c)},
              {"square", {{"zeta1_eta1", embedding_json(compose(r.zeta1, eta1), r.c)},
                          {"zeta2_eta2", embedding_json(compose(r.zeta2, eta2), r.c)}}}};
  out.check("metric", validate_metric(r.c).ok());
  out.check("legs_isometric", is_embedding(r.zeta1, b1, r.c) && is_embedding(r.zeta2, b2, r.c));
  out.check("square_commutes", compose(r.zeta1, eta1) == compose(r.zeta2, eta2));
  return out;
}

Outcome op_functoriality(const Context& c) {
  Outcome out;
  auto a = nat_space_from_json(c.input("a"));
  auto b1 = nat_space_from_json(c.input("b1"));
  auto b1p = nat_space_from_json(c.input("b1p"));
  auto b2 = nat_space_from_json(c.input("b2"));
  auto eta1 = embedding_from_json(c.input("eta1"), a, b1);
  auto eta1p = embedding_from_json(c.input("eta1p"), a, b1p);
  auto eta2 = embedding_from_json(c.input("eta2"), a, b2);
  auto iota = embedding_from_json(c.input("iota"), b1, b1p);
  auto r = functoriality_witness(a, b1, b1p, b2, eta1, eta1p, eta2, iota);
  out.data = {{"c", to_json(r.first.c)},
              {"c_prime", to_json(r.second.c)},
              {"sigma", r.sigma ? embedding_json(*r.sigma, r.second.c) : Json(nullptr)}};
  out.check("functoriality_witness", r.sigma.has_value());
  return out;
}

Outcome op_independence(const Context& c) {
  Outcome out;
  auto s = nat_space_from_json(c.input("space"));
  auto abar = indices_from_json(c.input("abar"), s.points());
  auto b1 = indices_from_json(c.input("b1"), s.points());
  auto b2 = indices_from_json(c.input("b2"), s.points());
  out.data = {{"independent", independence_check(s, abar, b1, b2)}};
  return out;
}

Outcome op_fraisse(const Context& c) {
  Outcome out;
  const std::size_t size_cap = c.param<std::size_t>("max_size", 3);
  const std::int64_t dist_cap = c.param<std::int64_t>("max_dist", 3);
  std::vector<NatMetricSpace> catalog;
  if (c.has_input("catalog")) {
    for (const auto& s : c.input("catalog")) catalog.push_back(nat_space_from_json(s));
  } else {
    catalog = enumerate_isometry_types(size_cap, dist_cap);
  }
  auto r = check_fraisse_axioms(catalog, size_cap, dist_cap);
  Json examples = Json::array();
  for (const auto& x : r.counterexamples) examples.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
  out.data = {{"catalog_size", catalog.size()},
              {"hereditary", r.hereditary},
              {"joint_embedding", r.joint_embedding},
              {"amalgamation", r.amalgamation},
              {"subspaces_checked", r.subspaces_checked},
              {"joint_embeddings_checked", r.joint_embeddings_checked},
              {"amalgamations_checked", r.amalgamations_checked},
              {"beyond_caps", r.beyond_caps},
              {"counterexamples", std::move(examples)}};
  out.check("fraisse_axioms", r.ok());
  return out;
}

// ---- urysohn ----

constexpr const char* kUrysohnNote =
    "global boundedness of point stabilisers has no finite counterpart; only extension-property probes are reported";

UrysohnParams urysohn_params(const Context& c) {
  UrysohnParams p;
  p.subset_size = c.param<std::size_t>("s", p.subset_size);
  p.value_cap = c.param<std::int64_t>("r", p.value_cap);
  p.rounds = c.param<std::size_t>("rounds", p.rounds);
  p.hard_cap = c.param<std::size_t>("hard_cap", p.hard_cap);
  return p;
}

UrysohnApprox approximation(const Context& c) {
  if (c.has_input("approximation")) return urysohn_from_json(c.input("approximation"));
  NatMetricSpace seed = c.has_input("seed_space") ? nat_space_from_json(c.input("seed_space"))
                                                  : NatMetricSpace({"o"}, {{0}});
  return build_approx(seed, urysohn_params(c));
}

Outcome op_urysohn_build(const Context& c) {
  Outcome out;
  auto approx = approximation(c);
  out.data = {{"points", approx.space.size()},
              {"steps", approx.log.size()},
              {"partial", approx.partial},
              {"diameter", approx.space.diameter()}};
  out.artifacts["approximation"] = to_json(approx);
  out.check("within_cap", !approx.partial);
  return out;
}

Outcome op_urysohn_check(const Context& c) {
  Outcome out;
  auto approx = approximation(c);
  const std::size_t type_size = c.param<std::size_t>("max_type_size", 3);
  const std::int64_t r = c.param<std::int64_t>("max_distance", approx.params.value_cap);
  auto types = enumerate_isometry_types(type_size, r);
  Json missing = Json::array();
  for (const auto& t : types) {
    if (!embed_space(approx.space, t)) missing.push_back(to_json(t));
  }
  auto path = verify_path_metric(approx.space, r);
  Json failures = Json::array();
  for (std::size_t i = 0; i < path.failures.size() && i < 20; ++i) {
    const auto& f = path.failures[i];
    failures.push_back({{"x", approx.space.point(f.x)},
                        {"y", approx.space.point(f.y)},
                        {"d", f.distance},
                        {"rho", f.path_length ? Json(*f.path_length) : Json(nullptr)}});
  }
  out.data = {{"points", approx.space.size()},
              {"types", types.size()},
              {"types_missing", std::move(missing)},
              {"distance_one_graph_connected", path.connected},
              {"pairs_checked", path.pairs_checked},
              {"pairs_equal", path.pairs_equal},
              {"first_failures", std::move(failures)},
              {"note", kUrysohnNote}};
  out.check("embeds_all_small_types", out.data["types_missing"].empty());
  out.check("path_metric_equals_d", path.holds());
  return out;
}

Outcome op_urysohn_embed(const Context& c) {
  Outcome out;
  auto approx = approximation(c);
  auto target = nat_space_from_json(c.input("target"));
  auto e = embed_space(approx.space, target);
  out.data = {{"embedding", e ? embedding_json(*e, approx.space) : Json(nullptr)}};
  out.check("embeds", e.has_value());
  return out;
}

Outcome op_urysohn_extend(const Context& c) {
  Outcome out;
  auto approx = approximation(c);
  PartialIsometry p;
  for (const auto& pair : c.input("partial")) {
    auto ix = indices_from_json(pair, approx.space.points());
    if (ix.size() != 2) throw InputError("partial isometry entries are [x, image] pairs");
    p.emplace_back(ix[0], ix[1]);
  }
  auto point = indices_from_json(Json::array({c.input("new_point")}), approx.space.points())[0];
  auto y = extend_partial_isometry(approx.space, p, point);
  out.data = {{"image", y ? Json(approx.space.point(*y)) : Json(nullptr)}, {"note", kUrysohnNote}};
  out.check("extends", y.has_value());
  return out;
}

// ---- permutation groups ----

Outcome op_group_enumerate(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  out.data = {{"degree", g.degree}, {"order", enumerate(g, c.cap).order()}};
  return out;
}

Outcome op_group_orbit(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  Tuple t = tuple_from_json(c.input("tuple"), g.degree);
  PermGroup acting = g;
  if (c.has_input("abar")) acting = pointwise_stabilizer(g, tuple_from_json(c.input("abar"), g.degree), c.cap);
  auto type = orbital_type(acting.generators, t);
  out.data = {{"orbit", tuple_orbit(acting, t)}, {"representative", type.representative}, {"orbit_size", type.orbit_size}};
  return out;
}

Outcome op_group_stabilizer(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  auto w = pointwise_stabilizer(g, tuple_from_json(c.input("abar"), g.degree), c.cap);
  out.data = {{"generators", perms_json(w.generators)}, {"order", enumerate(w, c.cap).order()}};
  return out;
}

Outcome op_group_double_coset(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  auto r = double_coset_conditions(g, perm_from_json(c.input("g"), g.degree), perm_from_json(c.input("f"), g.degree),
                                   tuple_from_json(c.input("abar"), g.degree),
                                   tuple_from_json(c.input("bbar"), g.degree), c.cap);
  out.data = {{"relative_types_equal", r.relative_types_equal},
              {"joint_types_equal", r.joint_types_equal},
              {"double_cosets_equal", r.double_cosets_equal}};
  out.check("conditions_agree", r.consistent());
  return out;
}

Outcome op_group_boundedness(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  auto r = boundedness_containment(g, tuple_from_json(c.input("abar"), g.degree),
                                   tuple_from_json(c.input("bbar"), g.degree),
                                   perms_from_json(c.input("f"), g.degree), c.cap);
  out.data = {{"subgroup_order", r.subgroup_order}, {"product_size", r.product_size}, {"missing", perms_json(r.missing)}};
  out.check("containment", r.holds);
  return out;
}

// ---- actions ----

Json ms_json(const MSReport& r) {
  Json transversal = Json::array();
  for (const auto& [u, v] : r.edge_transversal) transversal.push_back({u, v});
  Json connectors = Json::array();
  for (const auto& f : r.connectors) {
    connectors.push_back({{"from_edge", f.from_edge}, {"to_edge", f.to_edge}, {"f", to_json(f.f)}});
  }
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"n", l.n},
                      {"sphere_size", l.sphere_size},
                      {"power_size", l.power_size},
                      {"missing", l.missing},
                      {"ball_contained", l.ball_contained}});
  }
  return Json{{"base", r.base},
              {"group_order", r.group_order},
              {"vertex_transversal", r.vertex_transversal},
              {"edge_transversal", std::move(transversal)},
              {"connectors", std::move(connectors)},
              {"generators", perms_json(r.generators)},
              {"levels", std::move(levels)},
              {"containment_holds", r.containment_holds},
              {"a_generates", r.a_generates},
              {"displacement_constant", r.displacement_constant},
              {"reverse_bound_holds", r.reverse_bound_holds},
              {"word_length_excess", r.word_length_excess},
              {"caveat", "stabilisers of a finite group are finite, so the bounded-stabiliser hypothesis is vacuous; "
                         "the explicit containments of the argument are checked instead"}};
}

Outcome op_action_verify(const Context& c) {
  Outcome out;
  auto action = action_from_json(c.input("action"));
  std::optional<std::size_t> m_max;
  if (c.params.contains("m_max")) m_max = c.params.at("m_max").get<std::size_t>();
  std::vector<Vertex> bases;
  if (c.params.contains("base")) {
    bases.push_back(c.params.at("base").get<Vertex>());
  } else {
    for (Vertex v = 0; v < action.graph.vertex_count(); ++v) bases.push_back(v);
  }
  Json reports = Json::array();
  bool containment = true, reverse = true;
  for (Vertex v : bases) {
    if (v >= action.graph.vertex_count()) throw InputError("base vertex out of range");
    auto r = milnor_schwarz_verify(action, v, m_max, c.cap);
    containment = containment && r.containment_holds;
    reverse = reverse && r.reverse_bound_holds;
    reports.push_back(ms_json(r));
  }
  auto q = quotient_counts(action);
  out.data = {{"vertices", action.graph.vertex_count()},
              {"diameter", action.graph.diameter()},
              {"vertex_orbits", q.vertex_orbits},
              {"edge_orbits", q.edge_orbits},
              {"reports", std::move(reports)}};
  out.check("containments", containment);
  out.check("reverse_bound", reverse);
  return out;
}

Outcome op_action_quotient(const Context& c) {
  Outcome out;
  auto action = action_from_json(c.input("action"));
  auto valid = validate_action(action);
  auto q = quotient_counts(action);
  out.data = {{"validation", to_json(valid)}, {"vertex_orbits", q.vertex_orbits}, {"edge_orbits", q.edge_orbits}};
  out.check("valid_action", valid.ok());
  return out;
}

Outcome op_coset_graph(const Context& c) {
  Outcome out;
  auto g = perm_group_from_json(c.input("group"));
  auto w = perms_from_json(c.input("subgroup"), g.degree);
  auto f = perms_from_json(c.input("connectors"), g.degree);
  auto r = coset_graph(g, w, f, c.cap);
  out.data = {{"graph", to_json(r.action.graph)},
              {"representatives", perms_json(r.representatives)},
              {"translations", perms_json(r.action.group.generators)},
              {"connected", r.connected},
              {"generates", r.generates}};
  out.check("valid_action", validate_action(r.action).ok());
  out.check("connected_iff_generates", r.connected == r.generates);
  return out;
}

Outcome op_tree_independence(const Context& c) {
  return independence_suite(c.seed, c.param<std::size_t>("valence", 3), c.param<std::size_t>("depth", 2),
                            c.param<std::size_t>("samples", 200));
}

// ---- randomised suites ----

Outcome op_suite_birkhoff(const Context& c) {
  return birkhoff_bound_suite(c.seed, c.param<std::size_t>("instances", 100), c.param<std::size_t>("max_order", 2000));
}
Outcome op_suite_lipschitz(const Context& c) {
  return lipschitz_splitting_suite(c.seed, c.param<std::size_t>("instances", 100), c.param<std::size_t>("sqrt_max_n", 12));
}
Outcome op_suite_word_metric(const Context& c) {
  return word_metric_oracle_suite(c.seed, c.param<std::size_t>("max_m", 40), c.param<int>("max_radius", 5),
                                  c.param<std::size_t>("random_groups", 30));
}
Outcome op_suite_amalgamation(const Context& c) {
  return amalgamation_suite(c.seed, c.param<std::size_t>("instances", 200),
                            c.param<std::size_t>("functoriality_instances", 200));
}
Outcome op_suite_urysohn(const Context& c) {
  auto p = urysohn_params(c);
  return urysohn_suite(p.subset_size, p.value_cap, p.rounds, p.hard_cap);
}
Outcome op_suite_milnor_schwarz(const Context&) { return milnor_schwarz_suite(); }
Outcome op_suite_double_coset(const Context& c) {
  return double_coset_suite(c.seed, c.param<std::size_t>("instances", 50), c.param<std::size_t>("max_order", 5000));
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

Json error_report(const std::string& name, const std::string& operation, const std::string& message) {
  return Json{{"scenario", name}, {"operation", operation}, {"result", "error"}, {"error", message}};
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace

const std::map<std::string, Operation>& operations() {
  static const std::map<std::string, Operation> ops{
      {"metric.validate", op_metric_validate},
      {"metric.quotient", op_metric_quotient},
      {"metric.fit", op_metric_fit},
      {"metric.qi", op_metric_qi},
      {"birkhoff.chain", op_birkhoff_chain},
      {"birkhoff.length", op_birkhoff_length},
      {"birkhoff.minimality", op_birkhoff_minimality},
      {"birkhoff.geodesic", op_birkhoff_geodesic},
      {"wordmetric", op_wordmetric},
      {"amalgam.amalgamate", op_amalgamate},
      {"amalgam.functoriality", op_functoriality},
      {"amalgam.independence", op_independence},
      {"amalgam.fraisse", op_fraisse},
      {"urysohn.build", op_urysohn_build},
      {"urysohn.check", op_urysohn_check},
      {"urysohn.embed", op_urysohn_embed},
      {"urysohn.extend", op_urysohn_extend},
      {"group.enumerate", op_group_enumerate},
      {"group.orbit", op_group_orbit},
      {"group.stabilizer", op_group_stabilizer},
      {"group.double_coset", op_group_double_coset},
      {"group.boundedness", op_group_boundedness},
      {"action.verify", op_action_verify},
      {"action.quotient", op_action_quotient},
      {"action.coset_graph", op_coset_graph},
      {"tree.independence", op_tree_independence},
      {"suite.birkhoff_bounds", op_suite_birkhoff},
      {"suite.lipschitz_splitting", op_suite_lipschitz},
      {"suite.word_metric_oracle", op_suite_word_metric},
      {"suite.amalgamation", op_suite_amalgamation},
      {"suite.urysohn", op_suite_urysohn},
      {"suite.milnor_schwarz", op_suite_milnor_schwarz},
      {"suite.double_coset", op_suite_double_coset},
      {"suite.independence", op_tree_independence},
  };
  return ops;
}

RunResult run_scenario(const Json& scenario, const fs::path& base_dir, const Overrides& overrides) {
  RunResult result;
  try {
    if (!scenario.is_object()) throw InputError("a scenario is a JSON object");
    result.name = scenario.value("name", std::string("scenario"));
    if (!scenario.contains("operation") || !scenario.at("operation").is_string()) {
      throw InputError("missing field \"operation\"");
    }
    result.operation = scenario.at("operation").get<std::string>();
    auto it = operations().find(result.operation);
    if (it == operations().end()) throw InputError("unknown operation \"" + result.operation + "\"");

    Context ctx;
    ctx.base_dir = base_dir;
    ctx.seed = overrides.seed.value_or(scenario.value("seed", std::uint64_t{1}));
    ctx.cap = overrides.cap.value_or(scenario.value("cap", kDefaultEnumerationCap));
    if (scenario.contains("params")) ctx.params = scenario.at("params");
    if (!ctx.params.is_object()) throw InputError("\"params\" must be an object");
    if (scenario.contains("inputs")) {
      const Json& inputs = scenario.at("inputs");
      if (!inputs.is_object()) throw InputError("\"inputs\" must be an object");
      for (const auto& [key, value] : inputs.items()) {
        bool file = value.is_string() && value.get<std::string>().ends_with(".json");
        ctx.inputs[key] = file ? read_json_file(base_dir / value.get<std::string>()) : value;
      }
    }

    Outcome outcome = it->second(ctx);

    if (scenario.contains("expect")) {
      for (const auto& [key, value] : scenario.at("expect").items()) {
        outcome.check("expect." + key, outcome.data.contains(key) && outcome.data.at(key) == value);
      }
    }

    Json checks = Json::object();
    Json failed = Json::array();
    for (const auto& c : outcome.checks) {
      checks[c.name] = c.holds;
      if (!c.holds) failed.push_back(c.name);
    }
    const bool pass = failed.empty();
    result.exit_code = pass ? kExitPass : kExitFail;
    result.report = Json{{"scenario", result.name},
                         {"operation", result.operation},
                         {"seed", ctx.seed},
                         {"cap", ctx.cap},
                         {"input_hash", fnv1a_hex(ctx.inputs.dump() + ctx.params.dump())},
                         {"result", pass ? "pass" : "fail"},
                         {"failed_checks", std::move(failed)},
                         {"checks", std::move(checks)},
                         {"data", std::move(outcome.data)}};
    result.tables = std::move(outcome.tables);
    result.artifacts = std::move(outcome.artifacts);
  } catch (const std::exception& e) {
    result.exit_code = kExitInput;
    result.report = error_report(result.name, result.operation, e.what());
  }
  return result;
}

RunResult run_scenario_file(const fs::path& file, const Overrides& overrides) {
  Json scenario;
  try {
    scenario = read_json_file(file);
  } catch (const std::exception& e) {
    RunResult r;
    r.name = file.stem().string();
    r.report = error_report(r.name, "", e.what());
    return r;
  }
  if (scenario.is_object() && !scenario.contains("name")) scenario["name"] = file.stem().string();
  return run_scenario(scenario, file.parent_path(), overrides);
}

std::string report_text(const RunResult& result) { return result.report.dump(2) + "\n"; }

void write_outputs(const RunResult& result, const Json& outputs, const fs::path& out_dir) {
  if (!outputs.is_object()) return;
  for (const auto& [key, value] : outputs.items()) {
    if (key == "report") {
      write_text(out_dir / value.get<std::string>(), report_text(result));
    } else if (key == "csv") {
      if (value.is_string()) {
        if (!result.tables.empty()) write_text(out_dir / value.get<std::string>(), to_csv(result.tables.front()));
      } else {
        for (const auto& t : result.tables) {
          if (value.contains(t.name)) write_text(out_dir / value.at(t.name).get<std::string>(), to_csv(t));
        }
      }
    } else if (auto it = result.artifacts.find(key); it != result.artifacts.end()) {
      write_text(out_dir / value.get<std::string>(), it->second.dump() + "\n");
    }
  }
}

int SuiteResult::exit_code() const {
  int code = kExitPass;
  for (const auto& e : entries) code = std::max(code, e.result.exit_code);
  return code;
}

SuiteResult run_suite(const fs::path& dir, const fs::path& out_dir, const Overrides& overrides) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<SuiteEntry>> running;
  for (const auto& file : files) {
    running.push_back(std::async(std::launch::async, [file, &overrides] {
      const auto start = std::chrono::steady_clock::now();
      SuiteEntry entry{file.filename().string(), run_scenario_file(file, overrides), 0};
      entry.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return entry;
    }));
  }
  SuiteResult suite;
  for (auto& f : running) suite.entries.push_back(f.get());

  fs::create_directories(out_dir);
  CsvTable summary{"summary", {"scenario", "operation", "result", "runtime"}, {}};
  Json json_summary = Json::array();
  for (std::size_t i = 0; i < suite.entries.size(); ++i) {
    const auto& e = suite.entries[i];
    const std::string verdict = e.result.report.value("result", std::string("error"));
    write_text(out_dir / (files[i].stem().string() + ".report.json"), report_text(e.result));
    std::ostringstream runtime;
    runtime.precision(3);
    runtime << std::fixed << e.runtime_seconds;
    summary.rows.push_back({e.scenario, e.result.operation, verdict, runtime.str()});
    json_summary.push_back({{"scenario", e.scenario}, {"operation", e.result.operation}, {"result", verdict}});
  }
  write_text(out_dir / "summary.csv", to_csv(summary));
  write_text(out_dir / "summary.json", Json{{"scenarios", std::move(json_summary)}, {"exit_code", suite.exit_code()}}.dump(2) + "\n");
  return suite;
}

}  // namespace coarse
