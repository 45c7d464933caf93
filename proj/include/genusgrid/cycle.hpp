#pragma once

#include "genusgrid/graph.hpp"

#include <span>
#include <vector>

namespace genusgrid {

/// An oriented simple cycle. Edge `edges[i]` runs from `vertices[i]` to
/// `vertices[(i + 1) % size]`.
///
/// Canonical orientation: the cycle starts at its smallest edge index and
/// is traversed toward the smaller of that edge's two cycle neighbours.
/// Position parity is 0-based, so the starting edge carries sign +1 in
/// circulations.
struct Cycle {
  std::vector<VertexIndex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t size() const { return edges.size(); }

  /// Build from a closed vertex walk v0..vk (edge vk-v0 implied) and its
  /// edges, then rotate/reflect into canonical orientation.
  static Cycle canonical(std::vector<VertexIndex> vertices, std::vector<EdgeIndex> edges);

  /// Position of `e` on the cycle, or -1.
  int position(EdgeIndex e) const;

  /// Start vertex of the traversal of edges[i].
  VertexIndex tail(std::size_t i) const { return vertices[i]; }
  VertexIndex head(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }
};

}  // namespace genusgrid
