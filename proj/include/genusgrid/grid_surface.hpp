#pragma once

#include "genusgrid/error.hpp"
#include "genusgrid/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace genusgrid {

enum class Corner { NW, NE, SE, SW };

std::string to_string(Corner c);
Corner corner_from_string(const std::string& s);

/// Boundary segment S_index (primed == false) or S'_index (primed == true),
/// index in 1..2g.
struct SegmentId {
  int index = 1;
  bool primed = false;

  friend bool operator==(const SegmentId&, const SegmentId&) = default;
};

std::string to_string(SegmentId s);
SegmentId segment_from_string(const std::string& s);

/// How the border of a 2m x 2m grid is split into the 4g glued segments.
///
/// The clockwise border scan starts at `origin` and visits the 8m-4 border
/// cells. Blocks of `lengths[0], lengths[1], lengths[0], lengths[1], ...`
/// cells are assigned to S1 S2 S1' S2' ... S_{2g-1} S_{2g} S'_{2g-1} S'_{2g}.
/// The first cell of every block is a polygon corner (all corners are one
/// point of the surface and never carry an edge); the remaining L-1 cells are
/// ports 1..L-1. Port(S_i, j) sits j cells clockwise from the corner of S_i,
/// Port(S'_i, j) sits j cells counter-clockwise from the end of S'_i, so the
/// pairing reverses the scan direction and the surface is orientable.
struct SegmentLayout {
  int g = 1;
  int m = 2;
  std::vector<int> lengths;
  Corner origin = Corner::NW;

  int side() const { return 2 * m; }
  int perimeter() const { return 8 * m - 4; }
  int num_segments() const { return 2 * g; }
  int length(int segment_index) const { return lengths[static_cast<std::size_t>(segment_index - 1)]; }

  /// Throws SegmentLengthOdd, PerimeterMismatch or InvalidLayout.
  void validate() const;

  friend bool operator==(const SegmentLayout&, const SegmentLayout&) = default;
};

/// Seeded composition of 4m-2 into 2g even parts >= 2. Throws InvalidLayout
/// when no such composition exists (e.g. g = 2, m = 2).
SegmentLayout random_layout(int g, int m, std::uint64_t seed);

struct GridCell {
  int x = 1;  // column, 1..2m, left to right
  int y = 1;  // row, 1..2m, bottom to top

  friend bool operator==(const GridCell&, const GridCell&) = default;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

struct Port {
  SegmentId seg;
  int idx = 1;

  friend bool operator==(const Port&, const Port&) = default;
};

using Position = std::variant<GridCell, Port>;

/// Canonical vertex id: the row-major cell index of the representative
/// cell. Interior cells represent themselves; a glued port pair is
/// represented by its S-side (unprimed) cell.
using VertexId = int;

enum class CellKind { Interior, Port, PolygonCorner };

struct CellInfo {
  CellKind kind = CellKind::Interior;
  SegmentId seg;  // meaningful for Port and PolygonCorner
  int idx = 0;    // port index, 0 for a polygon corner
};

/// Precomputed border scan for a validated layout.
class BorderMap {
 public:
  explicit BorderMap(const SegmentLayout& layout);

  const SegmentLayout& layout() const { return layout_; }
  bool in_bounds(GridCell c) const;
  bool on_border(GridCell c) const;
  CellInfo info(GridCell c) const;
  GridCell cell_of(Port p) const;  // throws OutOfBounds
  int cell_index(GridCell c) const { return (c.y - 1) * layout_.side() + (c.x - 1); }
  GridCell cell_at(int index) const { return {index % layout_.side() + 1, index / layout_.side() + 1}; }
  const std::vector<GridCell>& scan() const { return scan_; }
  int scan_position(GridCell c) const;

  /// The unique interior neighbour of a non-corner border cell.
  std::optional<GridCell> inward_neighbor(GridCell c) const;

 private:
  SegmentLayout layout_;
  std::vector<GridCell> scan_;
  std::vector<int> scan_pos_;   // per cell index, -1 for interior
  std::vector<int> block_start_;  // per segment slot (0..4g-1)
  std::vector<CellInfo> scan_info_;
};

VertexId canonical_id(const BorderMap& border, const Position& p);

struct GridEdge {
  GridCell a;  // a < b
  GridCell b;
  VertexId u;  // canonical ids, u < v
  VertexId v;
};

/// Port endpoint of an edge touching the border.
struct PortIncidence {
  SegmentId seg;
  int idx;
  VertexIndex port_vertex;      // dense index of the glued port vertex
  VertexIndex interior_vertex;  // dense index of the other endpoint
};

/// A graph in the class of genus-g grid graphs. Immutable after build().
class GenusGrid {
 public:
  using PositionEdge = std::pair<Position, Position>;

  /// Validates and canonicalises. Throws SegmentLengthOdd,
  /// PerimeterMismatch, BoundaryEdgeForbidden, PolygonCornerForbidden,
  /// NonUnitEdge, DuplicateEdge or OutOfBounds.
  static GenusGrid build(const SegmentLayout& layout, const std::vector<PositionEdge>& edges);
  static GenusGrid build_from_cells(const SegmentLayout& layout,
                                    const std::vector<std::pair<GridCell, GridCell>>& edges);

  const SegmentLayout& layout() const { return border_.layout(); }
  const BorderMap& border() const { return border_; }
  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }

  VertexId vertex_id(VertexIndex v) const { return vertices_[static_cast<std::size_t>(v)]; }
  std::optional<VertexIndex> index_of(VertexId id) const;
  const std::vector<VertexId>& vertex_ids() const { return vertices_; }

  const GridEdge& geometry(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::optional<PortIncidence>& port(EdgeIndex e) const { return ports_[static_cast<std::size_t>(e)]; }

  /// Edge set as position pairs with ports in canonical (unprimed) form.
  std::vector<PositionEdge> canonical_edges() const;
  Position canonical_position(GridCell c) const;

  /// Subgraph without the flagged edges; vertices left isolated are dropped.
  GenusGrid without_edges(const std::vector<bool>& removed) const;

 private:
  explicit GenusGrid(const SegmentLayout& layout) : border_(layout) {}

  BorderMap border_;
  std::vector<VertexId> vertices_;
  std::vector<GridEdge> edges_;
  std::vector<std::optional<PortIncidence>> ports_;
  Graph graph_;
};

/// Deterministic instance generator. With ensure_pm, a random maximal set of
/// disjoint legal edges is planted and `density` of the remaining legal
/// edges between planted vertices is added; otherwise `density` of all legal
/// edges is taken. Throws InfeasibleDensity for density outside [0, 1].
GenusGrid gen_instance(const SegmentLayout& layout, std::uint64_t seed, double density, bool ensure_pm);

/// Every unit edge a GenusGrid on this layout may contain.
std::vector<std::pair<GridCell, GridCell>> legal_edges(const BorderMap& border);

}  // namespace genusgrid
