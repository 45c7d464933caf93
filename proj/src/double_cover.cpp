#include "genusgrid/double_cover.hpp"

#include "genusgrid/error.hpp"
#include "genusgrid/matching.hpp"

#include <algorithm>

namespace genusgrid {

std::string to_string(CoverCase c) { return c == CoverCase::Klein ? "klein" : "projective"; }

CoverCase cover_case_from_string(const std::string& s) {
  if (s == "klein") return CoverCase::Klein;
  if (s == "projective") return CoverCase::Projective;
  throw Error(ErrorKind::Parse, "unknown case '" + s + "'");
}

LabeledGraph double_cover(const LabeledGraph& g) {
  const int n = g.graph.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * g.graph.edges().size());
  for (EdgeIndex e = 0; e < g.graph.num_edges(); ++e) {
    const auto [u, v] = g.graph.edge(e);
    const bool cross = g.crossing[static_cast<std::size_t>(e)];
    edges.push_back({u, cross ? v + n : v});
    edges.push_back({u + n, cross ? v : v + n});
  }
  LabeledGraph out;
  out.crossing.assign(edges.size(), false);
  out.graph = Graph(2 * n, std::move(edges));
  out.kind = g.kind;
  return out;
}

std::vector<EdgeIndex> lift_matching(const LabeledGraph& g, const std::vector<EdgeIndex>& m) {
  if (!is_perfect(g.graph, m)) throw Error(ErrorKind::NotPerfect, "matching to lift is not perfect");
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : m) {
    out.push_back(2 * e);
    out.push_back(2 * e + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeIndex> project_matching(const LabeledGraph& g, const std::vector<EdgeIndex>& m2) {
  const LabeledGraph cover = double_cover(g);
  if (!is_perfect(cover.graph, m2)) throw Error(ErrorKind::NotPerfect, "matching to project is not perfect");

  const auto n = static_cast<std::size_t>(g.graph.num_vertices());
  // Projected multigraph: instance i is m2[i] seen in g; every vertex meets
  // exactly two instances.
  std::vector<EdgeIndex> sorted = m2;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<std::size_t>> at(n);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& ed = g.graph.edge(sorted[i] / 2);
    at[static_cast<std::size_t>(ed.u)].push_back(i);
    at[static_cast<std::size_t>(ed.v)].push_back(i);
  }

  std::vector<EdgeIndex> out;
  std::vector<char> visited(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    auto v = static_cast<VertexIndex>(start);
    std::size_t inst = std::min(at[start][0], at[start][1]);
    bool keep = true;
    do {
      visited[static_cast<std::size_t>(v)] = 1;
      const EdgeIndex e = sorted[inst] / 2;
      if (keep) out.push_back(e);
      keep = !keep;
      v = g.graph.edge(e).other(v);
      const auto& two = at[static_cast<std::size_t>(v)];
      inst = two[0] == inst ? two[1] : two[0];
    } while (static_cast<std::size_t>(v) != start);
  }
  std::sort(out.begin(), out.end());
  if (!is_perfect(g.graph, out)) throw Error(ErrorKind::NotPerfect, "projection did not yield a perfect matching");
  return out;
}

}  // namespace genusgrid
