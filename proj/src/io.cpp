#include "coarse/io.hpp"

#include "coarse/instances.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace coarse {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw InputError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::string> point_ids(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) throw InputError("\"points\" must be an array");
  std::vector<std::string> ids;
  for (const auto& p : pts) {
    if (p.is_string()) ids.push_back(p.get<std::string>());
    else if (p.is_number_integer()) ids.push_back(std::to_string(p.get<std::int64_t>()));
    else throw InputError("point ids must be strings or integers");
  }
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("duplicate point id");
  return ids;
}

template <class Scalar, class Parse>
MetricSpace<Scalar> read_space(const Json& j, Parse parse) {
  auto ids = point_ids(j);
  const Json& rows = field(j, "dist");
  if (!rows.is_array()) throw InputError("\"dist\" must be an array of rows");
  std::vector<std::vector<Scalar>> d;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("\"dist\" rows must be arrays");
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(parse(v));
    d.push_back(std::move(r));
  }
  bool pseudo = j.contains("pseudometric") && j.at("pseudometric").get<bool>();
  return MetricSpace<Scalar>(std::move(ids), std::move(d), pseudo);
}

Rational rational_value(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("distance entries must be integers or \"p/q\" strings");
}

template <class Scalar>
Json write_space(const MetricSpace<Scalar>& s) {
  Json dist = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if constexpr (std::is_same_v<Scalar, std::int64_t>) {
        row.push_back(s.dist(i, k));
      } else {
        std::string text = format_scalar(s.dist(i, k));
        if (text.find_first_not_of("-0123456789") == std::string::npos) row.push_back(std::stoll(text));
        else row.push_back(text);
      }
    }
    dist.push_back(std::move(row));
  }
  Json out{{"points", s.points()}, {"dist", std::move(dist)}};
  if (s.pseudometric()) out["pseudometric"] = true;
  return out;
}

std::string element_token(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_array()) {
    std::string id = "[";
    for (std::size_t i = 0; i < v.size(); ++i) id += (i ? "," : "") + std::to_string(v[i].get<std::int64_t>());
    return id + "]";
  }
  throw InputError("element references must be ids, integers or image arrays");
}

}  // namespace

bool space_has_surds(const Json& j) {
  for (const auto& row : field(j, "dist")) {
    for (const auto& v : row) {
      if (v.is_string() && v.get<std::string>().starts_with("sqrt")) return true;
    }
  }
  return false;
}

RatMetricSpace rat_space_from_json(const Json& j) { return read_space<Rational>(j, rational_value); }

NatMetricSpace nat_space_from_json(const Json& j) {
  return read_space<std::int64_t>(j, [](const Json& v) {
    if (!v.is_number_integer()) throw InputError("integer distances required");
    return v.get<std::int64_t>();
  });
}

RootMetricSpace root_space_from_json(const Json& j) {
  return read_space<Surd>(j, [](const Json& v) {
    if (v.is_string()) return parse_surd(v.get<std::string>());
    return Surd(rational_value(v));
  });
}

Json to_json(const RatMetricSpace& space) { return write_space(space); }
Json to_json(const NatMetricSpace& space) { return write_space(space); }
Json to_json(const RootMetricSpace& space) { return write_space(space); }

std::vector<std::size_t> indices_from_json(const Json& j, const std::vector<std::string>& codomain) {
  if (!j.is_array()) throw InputError("expected an array of points");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      auto i = v.get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= codomain.size()) throw InputError("point index out of range");
      out.push_back(static_cast<std::size_t>(i));
    } else if (v.is_string()) {
      auto it = std::find(codomain.begin(), codomain.end(), v.get<std::string>());
      if (it == codomain.end()) throw InputError("unknown point id \"" + v.get<std::string>() + "\"");
      out.push_back(static_cast<std::size_t>(it - codomain.begin()));
    } else {
      throw InputError("points are referenced by index or id");
    }
  }
  return out;
}

PointMap point_map_from_json(const Json& j, const std::vector<std::string>& domain,
                             const std::vector<std::string>& codomain) {
  PointMap map{indices_from_json(j, codomain), codomain.size()};
  check_point_map(map, domain.size(), codomain.size());
  return map;
}

Embedding embedding_from_json(const Json& j, const NatMetricSpace& domain, const NatMetricSpace& codomain) {
  Embedding e{indices_from_json(j, codomain.points())};
  if (e.images.size() != domain.size()) throw InputError("embedding has the wrong number of images");
  return e;
}

FiniteGroup group_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "cyclic") return FiniteGroup::cyclic(size_field(j, "n"));
  if (kind == "dihedral") return FiniteGroup::dihedral(size_field(j, "n"));
  if (kind == "product") {
    const Json& f = field(j, "factors");
    if (!f.is_array() || f.size() < 2) throw InputError("a product needs at least two factors");
    FiniteGroup g = group_from_json(f[0]);
    for (std::size_t i = 1; i < f.size(); ++i) g = FiniteGroup::direct_product(g, group_from_json(f[i]));
    return g;
  }
  if (kind == "table") {
    std::vector<std::string> ids;
    for (const auto& e : field(j, "elements")) ids.push_back(element_token(e));
    const Json& rows = field(j, "table");
    if (!rows.is_array() || rows.size() != ids.size()) throw InputError("table must have one row per element");
    std::map<std::string, Element> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<Element>(i);
    std::vector<Element> mul;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != ids.size()) throw InputError("table rows must have one entry per element");
      for (const auto& v : row) {
        auto it = index.find(element_token(v));
        if (it == index.end()) throw InputError("table entry is not an element");
        mul.push_back(it->second);
      }
    }
    FiniteGroup g(std::move(ids), std::move(mul));
    auto report = g.validate();
    if (!report.ok()) throw InputError("table violates the group axiom \"" + report.violations.front().axiom + "\"");
    return g;
  }
  if (kind == "perm" || kind == "symmetric") return to_finite_group(enumerate(perm_group_from_json(j)));
  throw InputError("unknown group kind \"" + kind + "\"");
}

std::vector<Element> elements_from_json(const FiniteGroup& group, const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of elements");
  std::vector<Element> out;
  for (const auto& v : j) out.push_back(group.at(element_token(v)));
  return out;
}

PermGroup perm_group_from_json(const Json& j) {
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "symmetric") return symmetric_group(size_field(j, "n"));
    if (kind == "cyclic" && !j.contains("generators")) return cyclic_perm_group(size_field(j, "n"));
    if (kind != "perm") throw InputError("unknown permutation group kind \"" + kind + "\"");
  }
  const std::size_t degree = size_field(j, "degree");
  return PermGroup(degree, perms_from_json(field(j, "generators"), degree));
}

Perm perm_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw InputError("a permutation is an array of images");
  std::vector<Point> images;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InputError("images must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  if (images.size() != degree) throw InputError("permutation has the wrong degree");
  return Perm(std::move(images));
}

std::vector<Perm> perms_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw InputError("expected an array of permutations");
  std::vector<Perm> out;
  for (const auto& p : j) out.push_back(perm_from_json(p, degree));
  return out;
}

Json to_json(const Perm& p) { return Json(p.images()); }

Tuple tuple_from_json(const Json& j, std::size_t degree) {
  if (!j.is_array()) throw InputError("a tuple is an array of points");
  Tuple t;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::size_t>() >= degree) {
      throw InputError("tuple entry out of range");
    }
    t.push_back(v.get<Point>());
  }
  return t;
}

NeighborhoodChain chain_from_json(const FiniteGroup& group, const Json& j) {
  const Json& nm = field(j, "n_min");
  if (!nm.is_number_integer()) throw InputError("\"n_min\" must be an integer");
  const int n_min = nm.get<int>();
  const Json& lv = field(j, "levels");
  std::map<int, std::vector<Element>> by_index;
  if (lv.is_object()) {
    for (const auto& [key, members] : lv.items()) {
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(key, &used);
        if (used != key.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("level keys must be integers, got \"" + key + "\"");
      }
      by_index[n] = elements_from_json(group, members);
    }
  } else if (lv.is_array()) {
    int n = n_min;
    for (const auto& members : lv) by_index[n++] = elements_from_json(group, members);
  } else {
    throw InputError("\"levels\" must be an object or an array");
  }
  std::vector<std::vector<Element>> levels;
  int expected = n_min;
  for (auto& [n, members] : by_index) {
    if (n != expected++) throw InputError("levels must be consecutive from n_min");
    levels.push_back(std::move(members));
  }
  if (levels.empty()) throw InputError("a chain needs at least one level");
  return NeighborhoodChain(group, n_min, std::move(levels));
}

Json to_json(const NeighborhoodChain& chain) {
  Json levels = Json::object();
  for (int n = chain.n_min(); n <= chain.n_max(); ++n) {
    Json ids = Json::array();
    for (Element g : chain.level(n)) ids.push_back(chain.group().id(g));
    levels[std::to_string(n)] = std::move(ids);
  }
  return Json{{"n_min", chain.n_min()}, {"levels", std::move(levels)}};
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = size_field(j, "vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("edges are pairs [u, v]");
    auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw InputError("edge endpoint out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

Json to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& [u, v] : graph.arcs()) {
    if (u < v) edges.push_back({u, v});
  }
  return Json{{"vertices", graph.vertex_count()}, {"edges", std::move(edges)}};
}

GroupAction action_from_json(const Json& j) {
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "petersen") return petersen_action();
    if (kind == "cayley") {
      PermGroup g = perm_group_from_json(field(j, "group"));
      auto gens = j.contains("generators") ? perms_from_json(j.at("generators"), g.degree) : g.generators;
      return cayley_action(g, gens);
    }
    throw InputError("unknown action kind \"" + kind + "\"");
  }
  GroupAction action{graph_from_json(field(j, "graph")), perm_group_from_json(field(j, "group"))};
  if (action.group.degree != action.graph.vertex_count()) throw InputError("group degree differs from vertex count");
  return action;
}

Json to_json(const UrysohnApprox& approx) {
  Json log = Json::array();
  for (const auto& step : approx.log) {
    log.push_back({{"subset", step.function.subset},
                   {"values", step.function.values},
                   {"point", step.point},
                   {"round", step.round}});
  }
  return Json{{"params",
               {{"s", approx.params.subset_size},
                {"r", approx.params.value_cap},
                {"rounds", approx.params.rounds},
                {"hard_cap", approx.params.hard_cap}}},
              {"partial", approx.partial},
              {"space", to_json(approx.space)},
              {"log", std::move(log)}};
}

UrysohnApprox urysohn_from_json(const Json& j) {
  UrysohnApprox a;
  const Json& p = field(j, "params");
  a.params.subset_size = size_field(p, "s");
  a.params.value_cap = field(p, "r").get<std::int64_t>();
  a.params.rounds = size_field(p, "rounds");
  a.params.hard_cap = size_field(p, "hard_cap");
  a.partial = field(j, "partial").get<bool>();
  a.space = nat_space_from_json(field(j, "space"));
  for (const auto& s : field(j, "log")) {
    BuildStep step;
    step.function.subset = field(s, "subset").get<std::vector<std::size_t>>();
    step.function.values = field(s, "values").get<std::vector<std::int64_t>>();
    step.point = size_field(s, "point");
    step.round = size_field(s, "round");
    if (step.point >= a.space.size() || step.function.subset.size() != step.function.values.size()) {
      throw InputError("malformed build log entry");
    }
    a.log.push_back(std::move(step));
  }
  return a;
}

Json to_json(const ValidationReport& report) {
  Json v = Json::array();
  for (const auto& x : report.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  return Json{{"ok", report.ok()}, {"violations", std::move(v)}};
}

std::string to_csv(const CsvTable& table) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell(row[i]);
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace coarse
