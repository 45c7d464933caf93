#include "genusgrid/weights.hpp"

#include "genusgrid/cycles.hpp"

#include "error_kind.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace genusgrid;

namespace {

// g = 1, m = 3: S1 has ports 1..5, S2 ports 1..3.
const SegmentLayout kLayout{1, 3, {6, 4}, Corner::NW};

EdgeIndex port_edge(const SegmentLayout& layout, SegmentId seg, int idx, GenusGrid& out) {
  BorderMap border(layout);
  GridCell c = border.cell_of(Port{seg, idx});
  out = GenusGrid::build_from_cells(layout, {{c, *border.inward_neighbor(c)}});
  return 0;
}

GenusGrid single(const SegmentLayout& layout, GridCell a, GridCell b) {
  return GenusGrid::build_from_cells(layout, {{a, b}});
}

Cycle square() { return Cycle::canonical({0, 1, 2, 3}, {0, 1, 2, 3}); }

}  // namespace

TEST_CASE("w_seg examples") {
  GenusGrid grid = single(kLayout, {2, 2}, {3, 2});
  EdgeIndex e = port_edge(kLayout, {1, false}, 2, grid);
  CHECK(w_seg(grid, 1, e) == 1);
  CHECK(w_seg(grid, 2, e) == 0);
  e = port_edge(kLayout, {1, true}, 2, grid);
  CHECK(w_seg(grid, 1, e) == 0);
  GenusGrid interior = single(kLayout, {2, 2}, {3, 2});
  for (int i = 1; i <= 2; ++i) CHECK(w_seg(interior, i, 0) == 0);
}

TEST_CASE("w_alt examples") {
  GenusGrid grid = single(kLayout, {2, 2}, {3, 2});
  EdgeIndex e = port_edge(kLayout, {1, false}, 3, grid);
  CHECK(w_alt(grid, 1, e) == 3);
  e = port_edge(kLayout, {1, false}, 4, grid);
  CHECK(w_alt(grid, 1, e) == -4);
  e = port_edge(kLayout, {2, false}, 3, grid);
  CHECK(w_alt(grid, 1, e) == 0);
  CHECK(w_alt(grid, 2, e) == 3);
  e = port_edge(kLayout, {1, true}, 3, grid);
  CHECK(w_alt(grid, 1, e) == 0);
}

TEST_CASE("w_planar examples") {
  CHECK(w_planar(single(kLayout, {2, 2}, {3, 2}), 0) == 1);
  CHECK(w_planar(single(kLayout, {3, 2}, {4, 2}), 0) == -2);
  CHECK(w_planar(single(kLayout, {3, 3}, {4, 3}), 0) == 3);
  CHECK(w_planar(single(kLayout, {2, 3}, {3, 3}), 0) == -2);
  CHECK(w_planar(single(kLayout, {2, 2}, {2, 3}), 0) == 0);
  CHECK(w_planar(single(kLayout, {4, 4}, {4, 5}), 0) == 0);
}

TEST_CASE("combine examples") {
  CombinedWeight vertical = combine(single(kLayout, {3, 3}, {3, 4}));
  CHECK(vertical(0) == 0);

  const SegmentLayout small{1, 2, {2, 4}, Corner::NW};
  GenusGrid grid = single(small, {2, 2}, {3, 2});
  EdgeIndex e = port_edge(small, {1, false}, 1, grid);
  CombinedWeight w = combine(grid);
  const BigInt b = 65536;
  CHECK(w.base == b);
  CHECK(w(e) == b + b * b * b);
}

TEST_CASE("elementary table and W agree with geometry, digits round-trip") {
  for (int g : {1, 2})
    for (int m = 3; m <= 6; ++m)
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        GenusGrid grid = gen_instance(random_layout(g, m, seed), seed, 0.7, false);
        CombinedWeight w = combine(grid);
        REQUIRE(w.num_functions() == 4 * g + 1);
        CHECK(w.base == boost::multiprecision::pow(BigInt(2 * m), 8));
        for (EdgeIndex e = 0; e < grid.num_edges(); ++e) {
          auto row = oracle::elementary_row(grid, e);
          for (int k = 0; k < w.num_functions(); ++k) CHECK(w.table(k, e) == row[static_cast<std::size_t>(k)]);
          CHECK(w(e) == oracle::combined_weight(grid, e));
          auto digits = balanced_digits(w(e), w.base, w.num_functions() + 1);
          CHECK(digits[0] == 0);
          for (int k = 0; k < w.num_functions(); ++k) CHECK(digits[static_cast<std::size_t>(k) + 1] == row[static_cast<std::size_t>(k)]);
        }
      }
}

TEST_CASE("balanced digits") {
  const BigInt base = 10;
  CHECK(balanced_digits(BigInt(0), base, 3) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(balanced_digits(BigInt(-7), base, 2) == std::vector<std::int64_t>{3, -1});
  CHECK(balanced_digits(BigInt(46), base, 2) == std::vector<std::int64_t>{-4, 5});
  CHECK(error_kind([&] { balanced_digits(BigInt(1000), base, 2); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("circulation examples") {
  Cycle c = square();
  REQUIRE(c.edges == std::vector<EdgeIndex>{0, 1, 2, 3});
  std::vector<BigInt> equal(4, 17);
  CHECK(circulation<BigInt>(c, equal) == 0);
  std::vector<BigInt> abcd{3, 10, 4, 100};
  BigInt circ = circulation<BigInt>(c, abcd);
  CHECK(abs_value(circ) == abs_value(BigInt(-3 + 10 - 4 + 100)));
  std::vector<BigInt> shifted;
  for (const BigInt& x : abcd) shifted.push_back(x + 12345);
  CHECK(abs_value(circulation<BigInt>(c, shifted)) == abs_value(circ));

  Cycle tri = Cycle::canonical({0, 1, 2}, {0, 1, 2});
  CHECK(error_kind([&] { circulation<BigInt>(tri, std::span<const BigInt>(abcd.data(), 3)); }) == ErrorKind::OddCycle);
}

TEST_CASE("circulation_restricted examples") {
  Cycle c = square();
  std::vector<BigInt> w{5, 7, 11, 13};
  std::vector<EdgeIndex> all{0, 1, 2, 3}, none{}, even{0, 2}, odd{1, 3}, first{0}, second{1};
  CHECK(circulation_restricted<BigInt>(c, all, w) == circulation<BigInt>(c, w));
  CHECK(circulation_restricted<BigInt>(c, none, w) == 0);
  // first edge of the canonical traversal carries +
  CHECK(circulation_restricted<BigInt>(c, first, w) == 5);
  CHECK(circulation_restricted<BigInt>(c, second, w) == -7);
  CHECK(circulation_restricted<BigInt>(c, even, w) + circulation_restricted<BigInt>(c, odd, w) ==
        circulation<BigInt>(c, w));
  std::vector<EdgeIndex> foreign{9};
  CHECK(error_kind([&] { circulation_restricted<BigInt>(c, foreign, w); }) == ErrorKind::EdgeNotOnCycle);
}

TEST_CASE("canonical cycle orientation") {
  // same cycle given from another start and direction
  Cycle a = Cycle::canonical({2, 1, 0, 3}, {1, 0, 3, 2});
  Cycle b = square();
  CHECK(a.edges == b.edges);
  CHECK(a.vertices == b.vertices);
  CHECK(b.position(2) == 2);
  CHECK(b.position(7) == -1);
}

TEST_CASE("elementary circulations match per-function sums") {
  GenusGrid grid = gen_instance(random_layout(2, 4, 1), 1, 0.8, false);
  CombinedWeight w = combine(grid);
  auto cycles = enumerate_simple_cycles(grid.graph(), {1000000, 8});
  REQUIRE_FALSE(cycles.empty());
  for (const Cycle& c : cycles) {
    auto circ = elementary_circulations(w, c);
    BigInt recombined = 0, power = w.base;
    for (int k = 0; k < w.num_functions(); ++k) {
      auto values = elementary_values(w, k);
      CHECK(circ(k) == circulation<std::int64_t>(c, values));
      recombined += circ(k) * power;
      power *= w.base;
    }
    CHECK(recombined == circulation<BigInt>(c, w.values));
  }
}
