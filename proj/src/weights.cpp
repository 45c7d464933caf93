#include "genusgrid/weights.hpp"

#include <algorithm>

namespace genusgrid {

std::string to_string(const ElementaryWeight& w) {
  switch (w.kind) {
    case WeightKind::SegIndicator: return "w_seg(" + std::to_string(w.segment) + ")";
    case WeightKind::SegAlternating: return "w_alt(" + std::to_string(w.segment) + ")";
    case WeightKind::PlanarInterior: return "w_planar";
  }
  return "?";
}

namespace {

const PortIncidence* unprimed_port(const GenusGrid& grid, int i, EdgeIndex e) {
  const auto& port = grid.port(e);
  if (!port || port->seg.primed || port->seg.index != i) return nullptr;
  return &*port;
}

}  // namespace

std::int64_t w_seg(const GenusGrid& grid, int i, EdgeIndex e) { return unprimed_port(grid, i, e) ? 1 : 0; }

std::int64_t w_alt(const GenusGrid& grid, int i, EdgeIndex e) {
  const auto* port = unprimed_port(grid, i, e);
  if (!port) return 0;
  return port->idx % 2 != 0 ? port->idx : -port->idx;
}

std::int64_t w_planar(const GenusGrid& grid, EdgeIndex e) {
  const GridEdge& geo = grid.geometry(e);
  const BorderMap& border = grid.border();
  if (border.on_border(geo.a) || border.on_border(geo.b)) return 0;
  if (geo.a.y != geo.b.y) return 0;
  // interior rows and slots are numbered from 1
  const std::int64_t row = geo.a.y - 1;
  const std::int64_t slot = std::min(geo.a.x, geo.b.x) - 1;
  const std::int64_t magnitude = row + slot - 1;
  return (row + slot) % 2 == 0 ? magnitude : -magnitude;
}

std::int64_t evaluate(const ElementaryWeight& w, const GenusGrid& grid, EdgeIndex e) {
  switch (w.kind) {
    case WeightKind::SegIndicator: return w_seg(grid, w.segment, e);
    case WeightKind::SegAlternating: return w_alt(grid, w.segment, e);
    case WeightKind::PlanarInterior: return w_planar(grid, e);
  }
  return 0;
}

std::vector<ElementaryWeight> elementary_order(int g) {
  std::vector<ElementaryWeight> order;
  for (int i = 1; i <= 2 * g; ++i) order.push_back({WeightKind::SegIndicator, i});
  for (int i = 1; i <= 2 * g; ++i) order.push_back({WeightKind::SegAlternating, i});
  order.push_back({WeightKind::PlanarInterior, 0});
  return order;
}

CombinedWeight combine(const GenusGrid& grid) {
  CombinedWeight w;
  const auto& layout = grid.layout();
  const std::int64_t positions = static_cast<std::int64_t>(layout.side()) * layout.side();
  w.base = BigInt(positions) * positions * positions * positions;
  w.order = elementary_order(layout.g);
  const int f = w.num_functions();
  w.table.resize(f, grid.num_edges());
  for (EdgeIndex e = 0; e < grid.num_edges(); ++e)
    for (int k = 0; k < f; ++k) w.table(k, e) = evaluate(w.order[static_cast<std::size_t>(k)], grid, e);

  // Digits must not carry: every per-function circulation is bounded by
  // positions * max|elem|.
  std::int64_t max_magnitude = 4 * layout.m;
  for (int len : layout.lengths) max_magnitude = std::max<std::int64_t>(max_magnitude, len);
  if (w.table.size() > 0) max_magnitude = std::max(max_magnitude, w.table.cwiseAbs().maxCoeff());
  if (w.base <= BigInt(2) * positions * max_magnitude)
    throw Error(ErrorKind::PreconditionViolated, "base too small for digit separation");

  w.values.assign(static_cast<std::size_t>(grid.num_edges()), BigInt(0));
  for (EdgeIndex e = 0; e < grid.num_edges(); ++e) {
    BigInt power = w.base;
    BigInt& value = w.values[static_cast<std::size_t>(e)];
    for (int k = 0; k < f; ++k) {
      value += power * w.table(k, e);
      power *= w.base;
    }
  }
  return w;
}

std::vector<std::int64_t> balanced_digits(const BigInt& value, const BigInt& base, int count) {
  std::vector<std::int64_t> digits;
  BigInt rest = value;
  const BigInt half = base / 2;
  for (int k = 0; k < count; ++k) {
    BigInt d = rest % base;  // sign follows rest
    if (d > half) d -= base;
    if (d <= -half) d += base;
    digits.push_back(static_cast<std::int64_t>(d));
    rest = (rest - d) / base;
  }
  if (rest != 0) throw Error(ErrorKind::PreconditionViolated, "value has more than " + std::to_string(count) + " digits");
  return digits;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> elementary_circulations(const CombinedWeight& w, const Cycle& cycle) {
  if (cycle.size() % 2 != 0) throw Error(ErrorKind::OddCycle, "cycle of odd length");
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> signs =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Zero(w.table.cols());
  for (std::size_t i = 0; i < cycle.size(); ++i) signs(cycle.edges[i]) += (i % 2 == 0) ? 1 : -1;
  return w.table * signs;
}

std::vector<std::int64_t> elementary_values(const CombinedWeight& w, int function) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(w.table.cols()));
  for (Eigen::Index e = 0; e < w.table.cols(); ++e) out[static_cast<std::size_t>(e)] = w.table(function, e);
  return out;
}

}  // namespace genusgrid
