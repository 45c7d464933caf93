#include "genusgrid/grid_surface.hpp"

#include "genusgrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace genusgrid {

std::string to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SE: return "SE";
    case Corner::SW: return "SW";
  }
  return "NW";
}

Corner corner_from_string(const std::string& s) {
  if (s == "NW") return Corner::NW;
  if (s == "NE") return Corner::NE;
  if (s == "SE") return Corner::SE;
  if (s == "SW") return Corner::SW;
  throw Error(ErrorKind::Parse, "unknown corner '" + s + "'");
}

std::string to_string(SegmentId s) {
  return "S" + std::to_string(s.index) + (s.primed ? "p" : "");
}

SegmentId segment_from_string(const std::string& s) {
  if (s.size() < 2 || s[0] != 'S') throw Error(ErrorKind::Parse, "bad segment '" + s + "'");
  SegmentId id;
  std::string digits = s.substr(1);
  if (!digits.empty() && (digits.back() == 'p' || digits.back() == '\'')) {
    id.primed = true;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorKind::Parse, "bad segment '" + s + "'");
  id.index = std::stoi(digits);
  return id;
}

void SegmentLayout::validate() const {
  if (g < 1 || m < 2) throw Error(ErrorKind::InvalidLayout, "need g >= 1 and m >= 2");
  if (static_cast<int>(lengths.size()) != 2 * g)
    throw Error(ErrorKind::InvalidLayout, "expected " + std::to_string(2 * g) + " segment lengths");
  long total = 0;
  for (int len : lengths) {
    if (len % 2 != 0) throw Error(ErrorKind::SegmentLengthOdd, "segment length " + std::to_string(len));
    if (len < 2) throw Error(ErrorKind::InvalidLayout, "segment length must be >= 2");
    total += len;
  }
  if (2 * total != perimeter())
    throw Error(ErrorKind::PerimeterMismatch, "2*sum(lengths) = " + std::to_string(2 * total) +
                                                  ", border has " + std::to_string(perimeter()) + " cells");
}

SegmentLayout random_layout(int g, int m, std::uint64_t seed) {
  const int units = 2 * m - 1;  // sum(lengths) / 2
  if (g < 1 || m < 2 || units < 2 * g)
    throw Error(ErrorKind::InvalidLayout, "no even composition for g=" + std::to_string(g) + ", m=" + std::to_string(m));
  std::mt19937_64 rng(seed);
  SegmentLayout layout;
  layout.g = g;
  layout.m = m;
  layout.lengths.assign(static_cast<std::size_t>(2 * g), 2);
  for (int extra = units - 2 * g; extra > 0; --extra) layout.lengths[rng() % static_cast<std::uint64_t>(2 * g)] += 2;
  layout.origin = static_cast<Corner>(rng() % 4);
  return layout;
}

// ---------------------------------------------------------------- BorderMap

namespace {

// Segment slot k (0..4g-1) in clockwise order S1 S2 S1' S2' S3 ...
SegmentId slot_segment(int k) {
  int group = k / 4, r = k % 4;
  return {2 * group + 1 + (r % 2), r >= 2};
}

int slot_of(SegmentId s) {
  int group = (s.index - 1) / 2;
  int r = (s.index - 1) % 2 + (s.primed ? 2 : 0);
  return 4 * group + r;
}

}  // namespace

BorderMap::BorderMap(const SegmentLayout& layout) : layout_(layout) {
  layout_.validate();
  const int n = layout_.side();
  std::vector<GridCell> nw;
  for (int x = 1; x <= n; ++x) nw.push_back({x, n});
  for (int y = n - 1; y >= 1; --y) nw.push_back({n, y});
  for (int x = n - 1; x >= 1; --x) nw.push_back({x, 1});
  for (int y = 2; y <= n - 1; ++y) nw.push_back({1, y});
  int shift = 0;
  switch (layout_.origin) {
    case Corner::NW: shift = 0; break;
    case Corner::NE: shift = n - 1; break;
    case Corner::SE: shift = 2 * n - 2; break;
    case Corner::SW: shift = 3 * n - 3; break;
  }
  std::rotate(nw.begin(), nw.begin() + shift, nw.end());
  scan_ = std::move(nw);

  scan_pos_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t i = 0; i < scan_.size(); ++i) scan_pos_[static_cast<std::size_t>(cell_index(scan_[i]))] = static_cast<int>(i);

  scan_info_.resize(scan_.size());
  int pos = 0;
  for (int k = 0; k < 4 * layout_.g; ++k) {
    SegmentId seg = slot_segment(k);
    int len = layout_.length(seg.index);
    block_start_.push_back(pos);
    scan_info_[static_cast<std::size_t>(pos)] = {CellKind::PolygonCorner, seg, 0};
    for (int d = 1; d < len; ++d)
      scan_info_[static_cast<std::size_t>(pos + d)] = {CellKind::Port, seg, seg.primed ? len - d : d};
    pos += len;
  }
}

bool BorderMap::in_bounds(GridCell c) const {
  return c.x >= 1 && c.y >= 1 && c.x <= layout_.side() && c.y <= layout_.side();
}

bool BorderMap::on_border(GridCell c) const {
  return c.x == 1 || c.y == 1 || c.x == layout_.side() || c.y == layout_.side();
}

int BorderMap::scan_position(GridCell c) const { return scan_pos_[static_cast<std::size_t>(cell_index(c))]; }

CellInfo BorderMap::info(GridCell c) const {
  if (!in_bounds(c)) throw Error(ErrorKind::OutOfBounds, "cell outside grid");
  int p = scan_position(c);
  if (p < 0) return {};
  return scan_info_[static_cast<std::size_t>(p)];
}

GridCell BorderMap::cell_of(Port p) const {
  if (p.seg.index < 1 || p.seg.index > 2 * layout_.g)
    throw Error(ErrorKind::OutOfBounds, "no segment " + to_string(p.seg));
  int len = layout_.length(p.seg.index);
  if (p.idx < 1 || p.idx >= len)
    throw Error(ErrorKind::OutOfBounds, to_string(p.seg) + " has ports 1.." + std::to_string(len - 1) +
                                            ", got " + std::to_string(p.idx));
  int start = block_start_[static_cast<std::size_t>(slot_of(p.seg))];
  int d = p.seg.primed ? len - p.idx : p.idx;
  return scan_[static_cast<std::size_t>(start + d)];
}

std::optional<GridCell> BorderMap::inward_neighbor(GridCell c) const {
  const int n = layout_.side();
  bool left = c.x == 1, right = c.x == n, bottom = c.y == 1, top = c.y == n;
  if ((left || right) && (bottom || top)) return std::nullopt;
  if (left) return GridCell{2, c.y};
  if (right) return GridCell{n - 1, c.y};
  if (bottom) return GridCell{c.x, 2};
  if (top) return GridCell{c.x, n - 1};
  return std::nullopt;
}

VertexId canonical_id(const BorderMap& border, const Position& p) {
  GridCell cell;
  if (const auto* port = std::get_if<Port>(&p)) {
    cell = border.cell_of(*port);
  } else {
    cell = std::get<GridCell>(p);
  }
  CellInfo info = border.info(cell);
  switch (info.kind) {
    case CellKind::Interior: return border.cell_index(cell);
    case CellKind::Port: return border.cell_index(border.cell_of({{info.seg.index, false}, info.idx}));
    case CellKind::PolygonCorner: return border.cell_index(border.scan().front());
  }
  return border.cell_index(cell);
}

// ---------------------------------------------------------------- GenusGrid

namespace {

bool unit_apart(GridCell a, GridCell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

GridCell resolve(const BorderMap& border, const Position& p, const Position& other) {
  if (const auto* c = std::get_if<GridCell>(&p)) {
    if (!border.in_bounds(*c)) throw Error(ErrorKind::OutOfBounds, "cell outside grid");
    return *c;
  }
  const Port& port = std::get<Port>(p);
  GridCell here = border.cell_of(port);
  if (port.seg.primed) return here;
  // An unprimed port names the glued vertex; pick whichever of the two border
  // cells is adjacent to the other endpoint.
  if (const auto* c = std::get_if<GridCell>(&other)) {
    GridCell there = border.cell_of({{port.seg.index, true}, port.idx});
    if (!unit_apart(here, *c) && unit_apart(there, *c)) return there;
  }
  return here;
}

}  // namespace

GenusGrid GenusGrid::build(const SegmentLayout& layout, const std::vector<PositionEdge>& edges) {
  BorderMap border(layout);
  std::vector<std::pair<GridCell, GridCell>> cells;
  cells.reserve(edges.size());
  for (const auto& [p, q] : edges) {
    if (std::holds_alternative<Port>(p) && std::holds_alternative<Port>(q))
      throw Error(ErrorKind::BoundaryEdgeForbidden, "edge joins two ports");
    cells.emplace_back(resolve(border, p, q), resolve(border, q, p));
  }
  return build_from_cells(layout, cells);
}

GenusGrid GenusGrid::build_from_cells(const SegmentLayout& layout,
                                      const std::vector<std::pair<GridCell, GridCell>>& edges) {
  GenusGrid grid(layout);
  const BorderMap& border = grid.border_;

  std::vector<GridEdge> geo;
  geo.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (!border.in_bounds(a) || !border.in_bounds(b)) throw Error(ErrorKind::OutOfBounds, "cell outside grid");
    if (b < a) std::swap(a, b);
    bool ba = border.on_border(a), bb = border.on_border(b);
    if (ba && bb) throw Error(ErrorKind::BoundaryEdgeForbidden, "edge along the border");
    if (!unit_apart(a, b)) throw Error(ErrorKind::NonUnitEdge, "endpoints are not grid neighbours");
    for (GridCell c : {a, b})
      if (border.info(c).kind == CellKind::PolygonCorner)
        throw Error(ErrorKind::PolygonCornerForbidden, "edge touches a polygon corner cell");
    VertexId u = canonical_id(border, a), v = canonical_id(border, b);
    if (v < u) std::swap(u, v);
    geo.push_back({a, b, u, v});
  }
  std::sort(geo.begin(), geo.end(), [](const GridEdge& l, const GridEdge& r) {
    return std::tie(l.u, l.v, l.a, l.b) < std::tie(r.u, r.v, r.a, r.b);
  });
  for (std::size_t i = 1; i < geo.size(); ++i)
    if (geo[i].u == geo[i - 1].u && geo[i].v == geo[i - 1].v)
      throw Error(ErrorKind::DuplicateEdge, "edge listed twice");

  std::set<VertexId> ids;
  for (const auto& e : geo) ids.insert({e.u, e.v});
  grid.vertices_.assign(ids.begin(), ids.end());

  std::vector<Edge> dense;
  dense.reserve(geo.size());
  for (const auto& e : geo) {
    VertexIndex du = *grid.index_of(e.u), dv = *grid.index_of(e.v);
    dense.push_back({du, dv});
    std::optional<PortIncidence> port;
    for (auto [cell, mate] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      CellInfo info = border.info(cell);
      if (info.kind == CellKind::Port) {
        VertexIndex pv = *grid.index_of(canonical_id(border, cell));
        port = PortIncidence{info.seg, info.idx, pv, *grid.index_of(canonical_id(border, mate))};
      }
    }
    grid.ports_.push_back(port);
  }
  grid.edges_ = std::move(geo);
  grid.graph_ = Graph(static_cast<int>(grid.vertices_.size()), std::move(dense));
  return grid;
}

std::optional<VertexIndex> GenusGrid::index_of(VertexId id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

Position GenusGrid::canonical_position(GridCell c) const {
  CellInfo info = border_.info(c);
  Position p = c;
  if (info.kind == CellKind::Port) p = Port{{info.seg.index, false}, info.idx};
  return p;
}

std::vector<GenusGrid::PositionEdge> GenusGrid::canonical_edges() const {
  std::vector<PositionEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(canonical_position(e.a), canonical_position(e.b));
  return out;
}

GenusGrid GenusGrid::without_edges(const std::vector<bool>& removed) const {
  std::vector<std::pair<GridCell, GridCell>> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i >= removed.size() || !removed[i]) kept.emplace_back(edges_[i].a, edges_[i].b);
  return build_from_cells(layout(), kept);
}

// ---------------------------------------------------------------- generator

std::vector<std::pair<GridCell, GridCell>> legal_edges(const BorderMap& border) {
  std::vector<std::pair<GridCell, GridCell>> out;
  const int n = border.layout().side();
  auto usable = [&](GridCell c) {
    CellInfo info = border.info(c);
    return info.kind != CellKind::PolygonCorner;
  };
  for (int y = 1; y <= n; ++y) {
    for (int x = 1; x <= n; ++x) {
      GridCell a{x, y};
      for (GridCell b : {GridCell{x + 1, y}, GridCell{x, y + 1}}) {
        if (!border.in_bounds(b)) continue;
        if (border.on_border(a) && border.on_border(b)) continue;
        if (!usable(a) || !usable(b)) continue;
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

namespace {

// Fisher-Yates with the raw engine output so that instances are identical
// across standard library implementations.
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

GenusGrid gen_instance(const SegmentLayout& layout, std::uint64_t seed, double density, bool ensure_pm) {
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(ErrorKind::InfeasibleDensity, "density must lie in [0, 1]");
  BorderMap border(layout);
  std::mt19937_64 rng(seed);
  auto legal = legal_edges(border);
  seeded_shuffle(legal, rng);

  auto take = [&](std::size_t available) {
    return static_cast<std::size_t>(std::llround(density * static_cast<double>(available)));
  };

  std::vector<std::pair<GridCell, GridCell>> chosen;
  if (!ensure_pm) {
    chosen.assign(legal.begin(), legal.begin() + static_cast<long>(take(legal.size())));
    return GenusGrid::build_from_cells(layout, chosen);
  }

  std::set<VertexId> covered;
  std::vector<std::pair<GridCell, GridCell>> extra;
  for (const auto& [a, b] : legal) {
    VertexId u = canonical_id(border, a), v = canonical_id(border, b);
    if (!covered.contains(u) && !covered.contains(v)) {
      covered.insert({u, v});
      chosen.emplace_back(a, b);
    } else {
      extra.emplace_back(a, b);
    }
  }
  std::erase_if(extra, [&](const auto& e) {
    return !covered.contains(canonical_id(border, e.first)) || !covered.contains(canonical_id(border, e.second));
  });
  chosen.insert(chosen.end(), extra.begin(), extra.begin() + static_cast<long>(take(extra.size())));
  return GenusGrid::build_from_cells(layout, chosen);
}

}  // namespace genusgrid
