#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace genusgrid {

using VertexIndex = int;
using EdgeIndex = int;

struct Edge {
  VertexIndex u = 0;
  VertexIndex v = 0;

  VertexIndex other(VertexIndex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on dense vertex indices 0..n-1 with a compressed
/// adjacency (neighbour, edge index) per vertex.
class Graph {
 public:
  struct Incidence {
    VertexIndex neighbor;
    EdgeIndex edge;
  };

  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> incident(VertexIndex v) const {
    auto b = offsets_[static_cast<std::size_t>(v)];
    auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {incidences_.data() + b, static_cast<std::size_t>(e - b)};
  }
  int degree(VertexIndex v) const { return static_cast<int>(incident(v).size()); }

  /// Copy without the edges flagged in `removed` (indexed by edge). Edge
  /// indices of the result are renumbered densely in original order.
  Graph without_edges(const std::vector<bool>& removed) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Incidence> incidences_;
};

struct TwoColoring {
  std::vector<int> color;  // 0 or 1 per vertex
};

struct OddCycle {
  std::vector<VertexIndex> vertices;  // closed walk v0..vk, edge vk-v0 implied
};

using BipartiteCheck = std::variant<TwoColoring, OddCycle>;

/// BFS 2-colouring; on failure returns an odd cycle as counterexample.
BipartiteCheck verify_bipartite(const Graph& g);

}  // namespace genusgrid
