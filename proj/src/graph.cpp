#include "genusgrid/graph.hpp"

#include <algorithm>
#include <deque>

namespace genusgrid {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  offsets_.assign(static_cast<std::size_t>(num_vertices_) + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  incidences_.resize(static_cast<std::size_t>(offsets_.back()));
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex i = 0; i < num_edges(); ++i) {
    const auto& e = edges_[static_cast<std::size_t>(i)];
    incidences_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = {e.v, i};
    incidences_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = {e.u, i};
  }
}

Graph Graph::without_edges(const std::vector<bool>& removed) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i >= removed.size() || !removed[i]) kept.push_back(edges_[i]);
  return Graph(num_vertices_, std::move(kept));
}

BipartiteCheck verify_bipartite(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> color(n, -1);
  std::vector<VertexIndex> parent(n, -1);
  std::vector<int> depth(n, 0);

  for (VertexIndex root = 0; root < g.num_vertices(); ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::deque<VertexIndex> queue{root};
    while (!queue.empty()) {
      VertexIndex v = queue.front();
      queue.pop_front();
      for (auto [w, e] : g.incident(v)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          parent[static_cast<std::size_t>(w)] = v;
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          // Conflict edge v-w: join the two BFS-tree paths at their lowest
          // common ancestor.
          std::vector<VertexIndex> left{v}, right{w};
          VertexIndex a = v, b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)])
            left.push_back(a = parent[static_cast<std::size_t>(a)]);
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)])
            right.push_back(b = parent[static_cast<std::size_t>(b)]);
          while (a != b) {
            left.push_back(a = parent[static_cast<std::size_t>(a)]);
            right.push_back(b = parent[static_cast<std::size_t>(b)]);
          }
          right.pop_back();  // common ancestor already in `left`
          OddCycle cycle;
          cycle.vertices = left;
          cycle.vertices.insert(cycle.vertices.end(), right.rbegin(), right.rend());
          // rotate so the ancestor is first; closing edge w..v is the conflict
          std::rotate(cycle.vertices.begin(), cycle.vertices.begin() + static_cast<long>(left.size()) - 1,
                      cycle.vertices.end());
          return cycle;
        }
      }
    }
  }
  return TwoColoring{std::vector<int>(color.begin(), color.end())};
}

}  // namespace genusgrid
