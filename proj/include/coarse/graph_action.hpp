#pragma once

// Group actions on finite connected graphs: cofiniteness data, exact verification of
// the orbit-map quasi-isometry containments, coset graphs, and the tree independence
// relation.

#include "coarse/graph.hpp"
#include "coarse/permgroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coarse {

/// A permutation group acting on the vertices of `graph`.
struct GroupAction {
  Graph graph;
  PermGroup group;
};

/// Violations "edge" with witness (generator, u, v): (u, v) is an edge but its image is not.
ValidationReport validate_action(const GroupAction& action);

struct QuotientCounts {
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;  // orbits on undirected edges
};

QuotientCounts quotient_counts(const GroupAction& action);

struct Connector {
  std::size_t from_edge;  // e ∈ S, index into edge_transversal
  std::size_t to_edge;    // e′ ∈ S
  Perm f;                 // t(e) = f·o(e′)
};

struct ContainmentLevel {
  std::size_t n = 0;
  std::size_t sphere_size = 0;        // |{g : ρ(gv,v) = n}|
  std::size_t power_size = 0;         // |A^{2n+1}|
  std::size_t missing = 0;            // sphere elements outside A^{2n+1}
  bool ball_contained = false;        // {g : ρ(gv,v) ≤ n} ⊆ ⋃_{j≤n} A^{2j+1}
  bool contained() const { return missing == 0; }
};

struct MSReport {
  Vertex base = 0;
  std::size_t group_order = 0;
  std::vector<Vertex> vertex_transversal;  // T
  std::vector<Arc> edge_transversal;       // S, with o(e) ∈ T
  std::vector<Connector> connectors;       // F
  std::vector<Perm> generators;            // A, sorted
  std::vector<ContainmentLevel> levels;    // n = 0 … m_max
  bool containment_holds = false;
  bool a_generates = false;
  std::size_t displacement_constant = 0;   // C = max_{a∈A} ρ(av, v)
  bool reverse_bound_holds = false;        // ρ(gv,v) ≤ C·|g|_A for all g
  /// max over g of |g|_A − (2ρ(gv,v) + 1); ≤ 0 when the word-length side of the
  /// quasi-isometry holds with the constants of the containment.
  std::int64_t word_length_excess = 0;

  bool ok() const { return containment_holds && reverse_bound_holds; }
};

/// Builds T, S, F and A = (F ∪ ⋃_{u∈T} W_u ∪ {1})^± and checks, for n ≤ m_max (default:
/// graph diameter), {g : ρ(gv,v) = n} ⊆ A^{2n+1} and ρ(gv,v) ≤ C·|g|_A.
MSReport milnor_schwarz_verify(const GroupAction& action, Vertex v, std::optional<std::size_t> m_max = std::nullopt,
                               std::size_t cap = kDefaultEnumerationCap);

struct CosetGraph {
  GroupAction action;                // left translation on G/W
  std::vector<Perm> representatives; // one element per coset, vertex order
  bool connected = false;
  bool generates = false;            // ⟨F ∪ W⟩ = G
};

/// Vertices G/W, with (gW, hW) an edge iff g⁻¹h ∈ W f W for some f ∈ F (loops dropped).
CosetGraph coset_graph(const PermGroup& group, const std::vector<Perm>& subgroup_generators,
                       const std::vector<Perm>& connectors, std::size_t cap = kDefaultEnumerationCap);

/// Rooted tree: root 0 with `valence` children, other internal vertices with valence−1
/// children, all leaves at depth `depth`. Vertices are numbered breadth-first.
struct TruncatedTree {
  std::size_t valence = 0;
  std::size_t depth = 0;
  Graph graph;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<std::size_t> level;  // depth of each vertex
  PermGroup automorphisms;         // subtree swaps of adjacent siblings

  Vertex root() const { return 0; }
};

inline constexpr std::size_t kTreeVertexCap = 100000;

TruncatedTree build_truncated_tree(std::size_t valence, std::size_t depth);

/// Generators of the pointwise stabiliser of `points` in the tree's automorphism group:
/// swaps of adjacent siblings whose subtrees avoid every point.
std::vector<Perm> tree_stabilizer_generators(const TruncatedTree& tree, const Tuple& points);

/// Union of the unique paths between pairs of vertices of `vertices`. Throws InputError
/// unless `tree` is a tree.
std::vector<Vertex> convex_hull(const Graph& tree, const std::vector<Vertex>& vertices);

/// conv(B ∪ {a}) ∩ conv(C ∪ {a}) = {a}.
bool tree_independent(const Graph& tree, Vertex a, const Tuple& b, const Tuple& c);

struct AxiomTally {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;  // outside the branch budget of the truncation
};

struct IndependenceSamplerConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t max_tuple_length = 2;
};

struct IndependenceAxiomReport {
  AxiomTally monotonicity;
  std::size_t monotonicity_premises = 0;  // samples where (c̄,d̄) ⫝ b̄ held
  AxiomTally existence;
  AxiomTally stationarity;
  std::vector<std::string> failures;

  bool ok() const { return monotonicity.failed == 0 && existence.failed == 0 && stationarity.failed == 0; }
};

IndependenceAxiomReport verify_independence_axioms(const TruncatedTree& tree, Vertex a,
                                                   const IndependenceSamplerConfig& config);

}  // namespace coarse
