#pragma once

#include "genusgrid/bigint.hpp"
#include "genusgrid/cycle.hpp"
#include "genusgrid/error.hpp"
#include "genusgrid/grid_surface.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace genusgrid {

enum class WeightKind { SegIndicator, SegAlternating, PlanarInterior };

/// One of the 4g+1 elementary weight functions. `segment` is 1..2g for the
/// two segment kinds and unused for PlanarInterior.
struct ElementaryWeight {
  WeightKind kind = WeightKind::PlanarInterior;
  int segment = 0;

  friend bool operator==(const ElementaryWeight&, const ElementaryWeight&) = default;
};

std::string to_string(const ElementaryWeight& w);

/// 1 iff the edge's port endpoint is on the unprimed segment S_i.
std::int64_t w_seg(const GenusGrid& grid, int i, EdgeIndex e);

/// +j / -j for an edge at Port(S_i, j), j odd / even; 0 otherwise.
std::int64_t w_alt(const GenusGrid& grid, int i, EdgeIndex e);

/// (-1)^(i+j) (i+j-1) for the j-th horizontal interior edge slot from the
/// left in interior row i from the bottom; 0 for vertical edges and edges
/// touching the border.
std::int64_t w_planar(const GenusGrid& grid, EdgeIndex e);

std::int64_t evaluate(const ElementaryWeight& w, const GenusGrid& grid, EdgeIndex e);

/// [w_seg(1..2g), w_alt(1..2g), w_planar]; function k is placed at B^(k+1).
std::vector<ElementaryWeight> elementary_order(int g);

using ElementaryTable = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// W(e) = sum_k elem_k(e) * B^(k+1) with B = n^4, n = number of grid
/// positions.
struct CombinedWeight {
  BigInt base;
  std::vector<ElementaryWeight> order;
  ElementaryTable table;  // (4g+1) x |E|, column per edge
  std::vector<BigInt> values;

  const BigInt& operator()(EdgeIndex e) const { return values[static_cast<std::size_t>(e)]; }
  int num_functions() const { return static_cast<int>(order.size()); }
};

CombinedWeight combine(const GenusGrid& grid);

/// Base-B expansion with digits in (-B/2, B/2]; returns digits for
/// B^0..B^(count-1). Throws PreconditionViolated if `value` does not fit.
std::vector<std::int64_t> balanced_digits(const BigInt& value, const BigInt& base, int count);

/// Alternating sum over the cycle in traversal order, first edge +.
/// Throws OddCycle on odd length.
template <class Scalar>
Scalar circulation(const Cycle& cycle, std::span<const Scalar> weights) {
  if (cycle.size() % 2 != 0) throw Error(ErrorKind::OddCycle, "cycle of odd length " + std::to_string(cycle.size()));
  Scalar sum = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Scalar& w = weights[static_cast<std::size_t>(cycle.edges[i])];
    if (i % 2 == 0) sum += w;
    else sum -= w;
  }
  return sum;
}

/// Sum of (-1)^pos(e) w(e) over `subset`, pos taken in the cycle's canonical
/// orientation. Throws EdgeNotOnCycle.
template <class Scalar>
Scalar circulation_restricted(const Cycle& cycle, std::span<const EdgeIndex> subset, std::span<const Scalar> weights) {
  Scalar sum = 0;
  for (EdgeIndex e : subset) {
    int pos = cycle.position(e);
    if (pos < 0) throw Error(ErrorKind::EdgeNotOnCycle, "edge " + std::to_string(e) + " is not on the cycle");
    const Scalar& w = weights[static_cast<std::size_t>(e)];
    if (pos % 2 == 0) sum += w;
    else sum -= w;
  }
  return sum;
}

/// Circulations of every elementary function at once: table * signs.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> elementary_circulations(const CombinedWeight& w, const Cycle& cycle);

/// Per-edge values of one elementary function.
std::vector<std::int64_t> elementary_values(const CombinedWeight& w, int function);

}  // namespace genusgrid
