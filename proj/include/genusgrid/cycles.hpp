#pragma once

#include "genusgrid/bigint.hpp"
#include "genusgrid/cycle.hpp"
#include "genusgrid/error.hpp"
#include "genusgrid/graph.hpp"
#include "genusgrid/grid_surface.hpp"
#include "genusgrid/weights.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genusgrid {

/// Cycle cap from GENUS_ISO_MAX_CYCLES, else 10^6.
std::uint64_t default_max_cycles();

struct EnumerationLimits {
  std::uint64_t max_cycles = default_max_cycles();
  std::optional<int> max_len;  // cycles longer than this are skipped
};

enum class EnumerationStatus { Complete, BudgetExceeded };

/// Backtracking over simple paths whose vertices all exceed the start
/// vertex. Each simple cycle is reported once, from its minimum vertex, in
/// the direction whose second vertex is smaller than its last.
///
/// Visitor:
///   void on_push(EdgeIndex e, VertexIndex from, VertexIndex to, std::size_t depth);
///   void on_pop(EdgeIndex e, std::size_t depth);
///   bool on_cycle(std::span<const VertexIndex> path, std::span<const EdgeIndex> edges, EdgeIndex closing);
/// `depth` is the number of path edges before the push. `path` is v0..vk,
/// `edges` e0..e(k-1), and `closing` runs from vk back to v0. Returning
/// false from on_cycle stops the search.
///
/// A path is only extended into vertices from which some admissible closing
/// neighbour of the start is still reachable off the path, so every branch
/// ends in at least one cycle. The search also stops with BudgetExceeded
/// after `max_cycles` cycles or 256 * max_cycles + 2^24 path extensions.
template <class Visitor>
EnumerationStatus for_each_simple_cycle(const Graph& g, Visitor& visitor, const EnumerationLimits& limits = {}) {
  struct Search {
    const Graph& g;
    Visitor& visitor;
    const EnumerationLimits& limits;
    std::uint64_t step_cap;
    std::vector<char> on_path;
    std::vector<VertexIndex> path;
    std::vector<EdgeIndex> edges;
    std::uint64_t found = 0;
    std::uint64_t steps = 0;
    VertexIndex start = 0;
    bool stopped = false;
    bool exhausted = false;
    std::vector<std::uint32_t> seen;    // BFS stamps
    std::vector<std::uint32_t> closer;  // == start + 1 marks neighbours of start
    std::vector<VertexIndex> queue;
    std::uint32_t stamp = 0;

    // Some neighbour u > first of the start is reachable from w through
    // vertices off the path and above the start.
    bool can_close(VertexIndex w, VertexIndex first) {
      const auto mark = static_cast<std::uint32_t>(start) + 1;
      if (closer[static_cast<std::size_t>(w)] == mark) return true;
      ++stamp;
      queue.clear();
      queue.push_back(w);
      seen[static_cast<std::size_t>(w)] = stamp;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& inc : g.incident(queue[head])) {
          const VertexIndex u = inc.neighbor;
          const auto ui = static_cast<std::size_t>(u);
          if (u <= start || on_path[ui] || seen[ui] == stamp) continue;
          if (closer[ui] == mark && u > first) return true;
          seen[ui] = stamp;
          queue.push_back(u);
        }
      }
      return false;
    }

    void emit(EdgeIndex closing) {
      if (found >= limits.max_cycles) {
        stopped = exhausted = true;
        return;
      }
      ++found;
      if (!visitor.on_cycle(std::span<const VertexIndex>(path), std::span<const EdgeIndex>(edges), closing))
        stopped = true;
    }

    void extend(VertexIndex v) {
      const std::size_t k = edges.size();
      for (const auto& inc : g.incident(v)) {
        if (stopped) return;
        const VertexIndex w = inc.neighbor;
        if (w == start) {
          if (k == 0) continue;
          if (limits.max_len && static_cast<int>(k) + 1 > *limits.max_len) continue;
          if (k == 1) {
            if (inc.edge > edges[0]) emit(inc.edge);  // parallel pair
          } else if (path[1] < path.back()) {
            emit(inc.edge);
          }
          continue;
        }
        if (w < start || on_path[static_cast<std::size_t>(w)]) continue;
        if (limits.max_len && static_cast<int>(k) + 2 > *limits.max_len) continue;
        if (!can_close(w, k == 0 ? w : path[1])) continue;
        if (++steps > step_cap) {
          stopped = exhausted = true;
          return;
        }
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        edges.push_back(inc.edge);
        visitor.on_push(inc.edge, v, w, k);
        extend(w);
        visitor.on_pop(inc.edge, k);
        edges.pop_back();
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
      }
    }
  };

  const auto n = static_cast<std::size_t>(g.num_vertices());
  Search search{g, visitor, limits, limits.max_cycles * 256 + (std::uint64_t{1} << 24), std::vector<char>(n, 0),
                {}, {}, 0, 0, 0, false, false, std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0), {}, 0};
  for (VertexIndex s = 0; s < g.num_vertices() && !search.stopped; ++s) {
    search.start = s;
    for (const auto& inc : g.incident(s)) search.closer[static_cast<std::size_t>(inc.neighbor)] = static_cast<std::uint32_t>(s) + 1;
    search.on_path[static_cast<std::size_t>(s)] = 1;
    search.path.assign(1, s);
    search.extend(s);
    search.on_path[static_cast<std::size_t>(s)] = 0;
  }
  return search.exhausted ? EnumerationStatus::BudgetExceeded : EnumerationStatus::Complete;
}

/// Every simple cycle in canonical orientation. Throws BudgetExceeded.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, const EnumerationLimits& limits = {});

/// First cycle whose circulation under `weights` vanishes, if any. Throws
/// BudgetExceeded when the search is cut short without finding one.
std::optional<Cycle> find_zero_circulation(const Graph& g, std::span<const BigInt> weights,
                                           const EnumerationLimits& limits = {});

// ------------------------------------------------------------ crossings

/// One edge of the cycle on the unprimed side of a segment. `out` means the
/// edge is traversed from the interior vertex to the port vertex.
struct Crossing {
  int idx = 0;
  bool out = false;
  EdgeIndex edge = -1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Per segment S_1..S_2g (vector index i-1), crossings sorted by port index.
using CrossingProfile = std::vector<std::vector<Crossing>>;

CrossingProfile crossing_profile(const GenusGrid& grid, const Cycle& cycle);

enum class CycleClass { Interior, Crossing };

struct Classification {
  CycleClass kind = CycleClass::Interior;
  std::vector<int> crossings;  // |E^C_i| per segment
  std::vector<int> parity;     // |E^C_i| mod 2
};

Classification classify(const GenusGrid& grid, const Cycle& cycle);

/// True iff directions alternate out/in along the segment.
bool alternates(const std::vector<Crossing>& along_segment);

struct AlternationResult {
  std::vector<bool> segment_pass;  // per segment; vacuous for untouched ones

  bool pass() const {
    for (bool b : segment_pass)
      if (!b) return false;
    return true;
  }
};

/// Throws PreconditionOddCrossing if some segment is crossed an odd number
/// of times.
AlternationResult check_alternation(const GenusGrid& grid, const Cycle& cycle);

/// Sum over k of (i_2k - i_2k-1) for sorted crossing indices.
std::int64_t crossing_gap_sum(const std::vector<Crossing>& along_segment);

struct WeightLemmaWitness {
  std::int64_t restricted = 0;  // circulation of E^C_i under w_alt(i)
  std::int64_t formula = 0;     // sum of (i_2k - i_2k-1)

  bool holds() const { return (restricted < 0 ? -restricted : restricted) == (formula < 0 ? -formula : formula); }
};

/// Throws PreconditionViolated unless the crossings on `segment` are even in
/// number and alternate.
WeightLemmaWitness verify_weight_lemma(const GenusGrid& grid, const CombinedWeight& w, const Cycle& cycle,
                                       int segment = 1);

/// First elementary function (in combination order) with nonzero
/// circulation on the cycle.
std::optional<int> certifying_function(const CombinedWeight& w, const Cycle& cycle);

// ------------------------------------------------------------ isolation

struct IsolationFailure {
  std::vector<VertexId> cycle;  // canonical vertex ids along the cycle
  std::string reason;
};

struct IsolationReport {
  int g = 0;
  int m = 0;
  int num_vertices = 0;
  int num_edges = 0;
  std::uint64_t cycles_checked = 0;
  bool complete = true;
  std::optional<BigInt> min_abs_circulation;

  // Certifying function per cycle: first elementary function with nonzero
  // circulation.
  std::array<std::uint64_t, 3> witnesses_by_kind{};  // SegIndicator, SegAlternating, PlanarInterior
  std::vector<std::uint64_t> witnesses_by_function;

  // Lemma-level checks.
  std::uint64_t digit_violations = 0;
  std::uint64_t parity_violations = 0;
  std::uint64_t alternation_eligible = 0;
  std::uint64_t alternation_failures = 0;
  std::uint64_t weight_lemma_eligible = 0;
  std::uint64_t weight_lemma_mismatches = 0;
  std::uint64_t disjunction_failures = 0;

  std::uint64_t failure_count = 0;          // cycles with circ_W = 0 or odd length
  std::vector<IsolationFailure> failures;   // first few of them

  bool passed() const { return failure_count == 0; }
  bool lemmas_hold() const {
    return digit_violations == 0 && parity_violations == 0 && alternation_failures == 0 &&
           weight_lemma_mismatches == 0 && disjunction_failures == 0;
  }
};

/// Checks circ_W(C) != 0 for every simple cycle, together with digit
/// separation, segment parity, alternation, the crossing-gap formula and the
/// three-way certificate disjunction. Stops at the cycle cap and marks the
/// report incomplete.
IsolationReport check_isolation(const GenusGrid& grid, const CombinedWeight& w, const EnumerationLimits& limits = {});

/// As check_isolation but throws BudgetExceeded when incomplete.
IsolationReport verify_isolation(const GenusGrid& grid, const CombinedWeight& w, const EnumerationLimits& limits = {});
IsolationReport verify_isolation(const GenusGrid& grid, const EnumerationLimits& limits = {});

}  // namespace genusgrid
