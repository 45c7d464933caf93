#pragma once

#include "genusgrid/graph.hpp"

#include <string>
#include <vector>

namespace genusgrid {

enum class CoverCase { Klein, Projective };

std::string to_string(CoverCase c);
CoverCase cover_case_from_string(const std::string& s);

/// Bipartite graph with the edges that cross the distinguished glued side
/// flagged. Both cases use the same wiring.
struct LabeledGraph {
  Graph graph;
  std::vector<bool> crossing;  // per edge
  CoverCase kind = CoverCase::Klein;
};

/// Vertex v has copies v (copy 0) and v + n (copy 1). Edge e yields edges
/// 2e and 2e+1: (u0, v0), (u1, v1) when not crossing, (u0, v1), (u1, v0)
/// when crossing. The result carries no crossing flags.
LabeledGraph double_cover(const LabeledGraph& g);

/// Both images of every edge of M. Throws NotPerfect unless M is a perfect
/// matching of g.
std::vector<EdgeIndex> lift_matching(const LabeledGraph& g, const std::vector<EdgeIndex>& m);

/// Projects a perfect matching of the double cover to g. The projection is
/// a 2-regular multigraph; each component (a doubled edge or an even cycle)
/// is walked from its smallest vertex along its smaller edge and every
/// other edge is kept. Throws NotPerfect unless m2 is a perfect matching
/// of double_cover(g).
std::vector<EdgeIndex> project_matching(const LabeledGraph& g, const std::vector<EdgeIndex>& m2);

}  // namespace genusgrid
