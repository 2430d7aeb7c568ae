#include "coarse/graph.hpp"

#include <algorithm>
#include <queue>

namespace coarse {

Graph::Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : adjacency_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    arcs_.emplace_back(u, v);
    arcs_.emplace_back(v, u);
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (auto [u, v] : arcs_) adjacency_[u].push_back(v);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<std::optional<std::size_t>> Graph::distances_from(Vertex v) const {
  std::vector<std::optional<std::size_t>> dist(vertex_count());
  std::queue<Vertex> queue;
  dist[v] = 0;
  queue.push(v);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : adjacency_[u]) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (vertex_count() == 0) return true;
  auto dist = distances_from(0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::size_t Graph::diameter() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (const auto& d : distances_from(v)) {
      if (d) best = std::max(best, *d);
    }
  }
  return best;
}

std::vector<std::vector<std::size_t>> Graph::path_metric() const {
  std::vector<std::vector<std::size_t>> rho;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    std::vector<std::size_t> row;
    for (const auto& d : distances_from(v)) {
      if (!d) throw InputError("path_metric: graph is disconnected");
      row.push_back(*d);
    }
    rho.push_back(std::move(row));
  }
  return rho;
}

}  // namespace coarse
