#pragma once

#include "coarse/common.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coarse {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;

/// Finite undirected simple graph. Every edge {u, v} is stored as the two arcs (u, v)
/// and (v, u); o(e) and t(e) are the arc's first and second vertex.
class Graph {
 public:
  Graph() = default;
  /// Duplicate edges are merged; self-loops are rejected.
  Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return arcs_.size() / 2; }
  /// Sorted list of arcs (both orientations).
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Breadth-first distances from v; nullopt for unreachable vertices.
  std::vector<std::optional<std::size_t>> distances_from(Vertex v) const;
  bool connected() const;
  /// Largest finite distance (the diameter when connected).
  std::size_t diameter() const;
  /// Path metric ρ; throws InputError for a disconnected graph.
  std::vector<std::vector<std::size_t>> path_metric() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Arc> arcs_;
};

}  // namespace coarse
