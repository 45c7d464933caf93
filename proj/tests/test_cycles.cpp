#include "genusgrid/cycles.hpp"

#include "error_kind.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>

using namespace genusgrid;

namespace {

const SegmentLayout kLayout{1, 3, {6, 4}, Corner::NW};

std::set<std::vector<EdgeIndex>> as_edge_sets(const std::vector<Cycle>& cycles) {
  std::set<std::vector<EdgeIndex>> out;
  for (const Cycle& c : cycles) {
    auto e = c.edges;
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

int cyclomatic(const Graph& g) {
  // |E| - |V| + components
  std::vector<int> root(static_cast<std::size_t>(g.num_vertices()));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
    return x;
  };
  int comps = g.num_vertices();
  for (const Edge& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) root[static_cast<std::size_t>(a)] = b, --comps;
  }
  return g.num_edges() - g.num_vertices() + comps;
}

// Small instances whose cycle space the oracle can enumerate.
std::vector<GenusGrid> small_instances() {
  std::vector<GenusGrid> out;
  for (std::uint64_t seed = 0; out.size() < 40 && seed < 400; ++seed) {
    const int g = 1 + static_cast<int>(seed % 2);
    const int m = 3 + static_cast<int>(seed % 3);
    const double density = 0.3 + 0.05 * static_cast<double>(seed % 7);
    GenusGrid grid = gen_instance(random_layout(g, m, seed), seed, density, seed % 3 == 0);
    const int beta = cyclomatic(grid.graph());
    if (beta >= 2 && beta <= 18) out.push_back(std::move(grid));
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_simple_cycles examples") {
  GenusGrid square = GenusGrid::build_from_cells(kLayout, {{{2, 2}, {3, 2}}, {{3, 2}, {3, 3}}, {{3, 3}, {2, 3}}, {{2, 3}, {2, 2}}});
  CHECK(enumerate_simple_cycles(square.graph()).size() == 1);

  GenusGrid ladder = GenusGrid::build_from_cells(
      kLayout, {{{2, 2}, {3, 2}}, {{3, 2}, {4, 2}}, {{2, 3}, {3, 3}}, {{3, 3}, {4, 3}}, {{2, 2}, {2, 3}}, {{3, 2}, {3, 3}}, {{4, 2}, {4, 3}}});
  auto cycles = enumerate_simple_cycles(ladder.graph());
  CHECK(cycles.size() == 3);
  CHECK(as_edge_sets(cycles) == oracle::cycle_space_cycles(ladder.graph()));

  CHECK(enumerate_simple_cycles(Graph()).empty());
  CHECK(enumerate_simple_cycles(GenusGrid::build(kLayout, {}).graph()).empty());
}

TEST_CASE("parallel edges form 2-cycles") {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 1}});
  auto cycles = enumerate_simple_cycles(g);
  CHECK(as_edge_sets(cycles) == oracle::cycle_space_cycles(g));
  CHECK(cycles.size() == 4);
}

TEST_CASE("backtracking enumeration equals the cycle-space oracle") {
  auto instances = small_instances();
  REQUIRE(instances.size() >= 20);
  for (const GenusGrid& grid : instances) {
    auto cycles = enumerate_simple_cycles(grid.graph());
    auto expected = oracle::cycle_space_cycles(grid.graph());
    CHECK(cycles.size() == expected.size());
    CHECK(as_edge_sets(cycles) == expected);
    for (const Cycle& c : cycles) {
      auto sorted = c.edges;
      std::sort(sorted.begin(), sorted.end());
      auto walk = oracle::orient(grid.graph(), sorted);
      CHECK(walk.edges == c.edges);
      CHECK(walk.vertices == c.vertices);
    }
  }
}

TEST_CASE("enumeration limits") {
  GenusGrid grid = gen_instance(random_layout(1, 3, 2), 2, 1.0, false);
  CHECK(error_kind([&] { enumerate_simple_cycles(grid.graph(), {10, std::nullopt}); }) == ErrorKind::BudgetExceeded);
  struct Counter {
    std::uint64_t n = 0;
    void on_push(EdgeIndex, VertexIndex, VertexIndex, std::size_t) {}
    void on_pop(EdgeIndex, std::size_t) {}
    bool on_cycle(std::span<const VertexIndex>, std::span<const EdgeIndex>, EdgeIndex) {
      ++n;
      return true;
    }
  } counter;
  CHECK(for_each_simple_cycle(grid.graph(), counter, {10, std::nullopt}) == EnumerationStatus::BudgetExceeded);
  CHECK(counter.n == 10);

  auto short_ones = enumerate_simple_cycles(grid.graph(), {1000000, 6});
  REQUIRE_FALSE(short_ones.empty());
  for (const Cycle& c : short_ones) CHECK(c.size() <= 6);
  CHECK(std::count_if(short_ones.begin(), short_ones.end(), [](const Cycle& c) { return c.size() == 4; }) > 0);
}

TEST_CASE("cycle cap environment override") {
  ::setenv("GENUS_ISO_MAX_CYCLES", "1234", 1);
  CHECK(default_max_cycles() == 1234);
  CHECK(EnumerationLimits{}.max_cycles == 1234);
  ::unsetenv("GENUS_ISO_MAX_CYCLES");
  CHECK(default_max_cycles() == 1000000);
}

TEST_CASE("alternation and gap sums") {
  CHECK(alternates({{2, true, -1}, {5, false, -1}}));
  CHECK_FALSE(alternates({{2, true, -1}, {5, true, -1}}));
  CHECK(alternates({}));
  CHECK(crossing_gap_sum({{2, true, -1}, {5, false, -1}}) == 3);
  CHECK(crossing_gap_sum({{1, true, -1}, {2, false, -1}, {3, true, -1}, {6, false, -1}}) == 4);
  CHECK(crossing_gap_sum({}) == 0);
}

TEST_CASE("classify, alternation and the weight lemma on enumerated cycles") {
  std::uint64_t odd_seen = 0, eligible_seen = 0, interior_seen = 0;
  for (int g : {1, 2})
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      GenusGrid grid = gen_instance(random_layout(g, 4, seed), seed, 0.7, false);
      CombinedWeight w = combine(grid);
      auto table = oracle::port_table(grid.layout());
      for (const Cycle& c : enumerate_simple_cycles(grid.graph(), {1000000, 14})) {
        Classification cls = classify(grid, c);
        // crossing counts from geometry
        std::vector<int> count(static_cast<std::size_t>(2 * g), 0);
        for (EdgeIndex e : c.edges)
          for (GridCell cell : {grid.geometry(e).a, grid.geometry(e).b})
            if (auto it = table.find({cell.x, cell.y}); it != table.end() && !it->second.primed)
              ++count[static_cast<std::size_t>(it->second.segment - 1)];
        CHECK(cls.crossings == count);
        const bool interior = std::all_of(count.begin(), count.end(), [](int n) { return n == 0; });
        CHECK((cls.kind == CycleClass::Interior) == interior);
        interior_seen += interior;

        auto circ = elementary_circulations(w, c);
        bool odd = false;
        for (int i = 0; i < 2 * g; ++i)
          if (cls.parity[static_cast<std::size_t>(i)] == 1) {
            odd = true;
            CHECK(circ(i) != 0);
          }
        odd_seen += odd;
        if (odd) {
          CHECK(error_kind([&] { check_alternation(grid, c); }) == ErrorKind::PreconditionOddCrossing);
          continue;
        }
        AlternationResult alt = check_alternation(grid, c);
        CHECK(alt.pass());
        auto profile = crossing_profile(grid, c);
        for (int i = 1; i <= 2 * g; ++i) {
          const auto& along = profile[static_cast<std::size_t>(i - 1)];
          if (!alternates(along)) continue;
          WeightLemmaWitness wl = verify_weight_lemma(grid, w, c, i);
          CHECK(wl.holds());
          CHECK(wl.formula == crossing_gap_sum(along));
          if (!along.empty()) {
            ++eligible_seen;
            CHECK(wl.restricted != 0);
          }
        }
      }
    }
  CHECK(odd_seen > 0);
  CHECK(eligible_seen > 0);
  CHECK(interior_seen > 0);
}

TEST_CASE("verify_isolation examples") {
  GenusGrid square = GenusGrid::build_from_cells(kLayout, {{{2, 2}, {3, 2}}, {{3, 2}, {3, 3}}, {{3, 3}, {2, 3}}, {{2, 3}, {2, 2}}});
  IsolationReport r = verify_isolation(square);
  CHECK(r.cycles_checked == 1);
  CHECK(r.passed());
  CHECK(r.witnesses_by_kind[2] == 1);
  CHECK(*certifying_function(combine(square), enumerate_simple_cycles(square.graph()).front()) == 4);

  IsolationReport empty = verify_isolation(GenusGrid::build(kLayout, {}));
  CHECK(empty.cycles_checked == 0);
  CHECK(empty.passed());
  CHECK(empty.complete);

  GenusGrid dense = gen_instance(random_layout(1, 3, 0), 0, 1.0, false);
  CHECK(error_kind([&] { verify_isolation(dense, {100, std::nullopt}); }) == ErrorKind::BudgetExceeded);
  IsolationReport partial = check_isolation(dense, combine(dense), {100, std::nullopt});
  CHECK_FALSE(partial.complete);
  CHECK(partial.cycles_checked == 100);
}

TEST_CASE("single-cycle instances are certified by the expected function family") {
  int odd_cases = 0, even_cases = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GenusGrid grid = gen_instance(random_layout(1 + seed % 2, 4, seed), seed, 0.6, false);
    for (const Cycle& c : enumerate_simple_cycles(grid.graph(), {1000000, 12})) {
      Classification cls = classify(grid, c);
      if (cls.kind == CycleClass::Interior) continue;
      std::vector<bool> removed(static_cast<std::size_t>(grid.num_edges()), true);
      for (EdgeIndex e : c.edges) removed[static_cast<std::size_t>(e)] = false;
      GenusGrid only = grid.without_edges(removed);
      IsolationReport r = verify_isolation(only);
      REQUIRE(r.cycles_checked == 1);
      CHECK(r.passed());
      const bool odd = std::any_of(cls.parity.begin(), cls.parity.end(), [](int p) { return p == 1; });
      if (odd) {
        ++odd_cases;
        CHECK(r.witnesses_by_kind[0] == 1);
      } else {
        ++even_cases;
        CHECK(r.witnesses_by_kind[2] == 0);
        CHECK(r.weight_lemma_eligible > 0);
      }
    }
  }
  CHECK(odd_cases > 0);
  CHECK(even_cases > 0);
}

TEST_CASE("fast isolation report equals the slow per-cycle recomputation") {
  for (const GenusGrid& grid : small_instances()) {
    IsolationReport fast = verify_isolation(grid);
    oracle::SlowIsolation slow = oracle::slow_isolation(grid);
    CHECK(fast.cycles_checked == slow.cycles);
    CHECK(fast.failure_count == slow.zero_circulation + slow.odd_cycles);
    CHECK(fast.alternation_eligible == slow.alternation_eligible);
    CHECK(fast.alternation_failures == slow.alternation_failures);
    CHECK(fast.weight_lemma_eligible == slow.weight_lemma_eligible);
    CHECK(fast.weight_lemma_mismatches == slow.weight_lemma_mismatches);
    CHECK(fast.disjunction_failures == slow.disjunction_failures);
    CHECK(fast.witnesses_by_kind == slow.witnesses_by_kind);
    CHECK(fast.digit_violations == 0);
    CHECK(fast.parity_violations == 0);
    if (slow.min_abs_circulation >= 0) CHECK(fast.min_abs_circulation == slow.min_abs_circulation);
    CHECK(fast.passed());
    CHECK(fast.lemmas_hold());
  }
}

TEST_CASE("zero weights are reported as failures") {
  GenusGrid grid = gen_instance(random_layout(1, 3, 5), 5, 1.0, false);
  CombinedWeight w = combine(grid);
  w.table.setZero();
  std::fill(w.values.begin(), w.values.end(), BigInt(0));
  IsolationReport r = check_isolation(grid, w);
  REQUIRE(r.cycles_checked > 16);
  CHECK(r.failure_count == r.cycles_checked);
  CHECK(r.failures.size() == 16);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.front().reason == "circ_W = 0");

  CHECK(find_zero_circulation(grid.graph(), w.values).has_value());
  CHECK_FALSE(find_zero_circulation(grid.graph(), combine(grid).values).has_value());
}
