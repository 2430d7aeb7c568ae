#pragma once

// JSON and CSV encodings of the library's objects.

#include "coarse/amalgam.hpp"
#include "coarse/birkhoff.hpp"
#include "coarse/graph_action.hpp"
#include "coarse/group.hpp"
#include "coarse/metric.hpp"
#include "coarse/permgroup.hpp"
#include "coarse/urysohn.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace coarse {

using Json = nlohmann::ordered_json;

/// Every reader throws InputError on schema violations.

/// {"points": [ids], "dist": [[int | "p/q" | "sqrt(p/q)"]]}; optional "pseudometric": bool.
bool space_has_surds(const Json& j);
RatMetricSpace rat_space_from_json(const Json& j);
NatMetricSpace nat_space_from_json(const Json& j);
RootMetricSpace root_space_from_json(const Json& j);

Json to_json(const RatMetricSpace& space);
Json to_json(const NatMetricSpace& space);
Json to_json(const RootMetricSpace& space);

/// Array of codomain indices or codomain point ids.
std::vector<std::size_t> indices_from_json(const Json& j, const std::vector<std::string>& codomain);
PointMap point_map_from_json(const Json& j, const std::vector<std::string>& domain,
                             const std::vector<std::string>& codomain);
Embedding embedding_from_json(const Json& j, const NatMetricSpace& domain, const NatMetricSpace& codomain);

/// {"kind": "cyclic", "n"} | {"kind": "dihedral", "n"} | {"kind": "product", "factors": [g, g]}
/// | {"kind": "table", "elements": [ids], "table": [[ids]]} | {"kind": "perm", "degree", "generators"}.
FiniteGroup group_from_json(const Json& j);
std::vector<Element> elements_from_json(const FiniteGroup& group, const Json& j);

/// {"degree": n, "generators": [[images]]} or {"kind": "symmetric" | "cyclic", "n"}.
PermGroup perm_group_from_json(const Json& j);
Perm perm_from_json(const Json& j, std::size_t degree);
std::vector<Perm> perms_from_json(const Json& j, std::size_t degree);
Json to_json(const Perm& p);
Tuple tuple_from_json(const Json& j, std::size_t degree);

/// {"n_min": int, "levels": {"n": [ids]}}.
NeighborhoodChain chain_from_json(const FiniteGroup& group, const Json& j);
Json to_json(const NeighborhoodChain& chain);

/// {"vertices": n, "edges": [[u, v]]}.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& graph);

/// {"graph": graph, "group": perm group} | {"kind": "petersen"}
/// | {"kind": "cayley", "group": perm group, "generators": [[images]] (optional)}.
GroupAction action_from_json(const Json& j);

/// {"params": {...}, "partial": bool, "space": space, "log": [{"subset", "values", "point", "round"}]}.
Json to_json(const UrysohnApprox& approx);
UrysohnApprox urysohn_from_json(const Json& j);

Json to_json(const ValidationReport& report);

struct CsvTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace coarse
