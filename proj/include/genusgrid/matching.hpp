#pragma once

#include "genusgrid/bigint.hpp"
#include "genusgrid/cycles.hpp"
#include "genusgrid/graph.hpp"
#include "genusgrid/grid_surface.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace genusgrid {

struct ShiftedWeights {
  std::vector<BigInt> values;  // W'(e) = W(e) - offset >= 0
  BigInt offset;               // min_e W(e); 0 for no edges
};

ShiftedWeights shift_nonnegative(std::span<const BigInt> weights);

/// sum over perfect matchings M of sign(M) x^{W'(M)}, as ascending
/// (exponent, coefficient) pairs with nonzero coefficients.
struct WeightEnumerator {
  std::vector<std::pair<BigInt, BigInt>> terms;

  bool is_zero() const { return terms.empty(); }
  std::optional<BigInt> min_exponent() const {
    if (terms.empty()) return std::nullopt;
    return terms.front().first;
  }
};

/// Determinant of the biadjacency matrix with entries x^{W'(e)} (parallel
/// edges add). Rows are the colour-0 vertices of a BFS 2-colouring.
/// Throws UnbalancedClasses, or PreconditionViolated for a non-bipartite
/// graph or a negative weight.
WeightEnumerator weight_enumerator(const Graph& g, std::span<const BigInt> shifted);

/// True iff the enumerator is nonzero. A graph without vertices has the
/// empty perfect matching. Exact when the weights give a unique minimum;
/// otherwise signed terms may cancel.
bool has_pm(const Graph& g, std::span<const BigInt> weights);

/// Weight-free decision by augmenting paths.
bool has_pm(const Graph& g);

/// w_G: minimal exponent of the enumerator, in shifted units.
std::optional<BigInt> min_pm_weight(const Graph& g, std::span<const BigInt> shifted);

struct Matching {
  std::vector<EdgeIndex> edges;  // ascending
  BigInt weight;                 // under the unshifted weights

  friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_perfect(const Graph& g, std::span<const EdgeIndex> edges);

/// Maximum matching of a bipartite graph by augmenting paths (weights
/// ignored). Throws PreconditionViolated for a non-bipartite graph.
std::vector<EdgeIndex> maximum_matching(const Graph& g);

/// Edges e with w_{G-e} > w_G or no perfect matching in G - e. Throws
/// NotPerfect if they do not form a perfect matching.
std::optional<Matching> construct_pm(const Graph& g, std::span<const BigInt> weights);

/// Constructs a matching, then deletes each matched edge in turn and
/// rechecks existence. False when there is no perfect matching.
bool is_unique_pm(const Graph& g, std::span<const BigInt> weights);

/// Brute force over all perfect matchings, in lexicographic edge order.
/// Throws BudgetExceeded past `limit` matchings.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::span<const BigInt> weights,
                                                  std::uint64_t limit = 1'000'000);

enum class LemmaVerdict { Pass, Fail, NotApplicable };

const char* to_string(LemmaVerdict v);

/// Nonzero circulations on every cycle imply a unique minimum-weight perfect
/// matching. Pass when the consequent holds (no perfect matching counts),
/// NotApplicable when it fails and some cycle has zero circulation, Fail
/// otherwise.
LemmaVerdict verify_uniquepm_lemma(const Graph& g, std::span<const BigInt> weights,
                                   const EnumerationLimits& limits = {});

// GenusGrid entry points, all under W = combine(G).

WeightEnumerator weight_enumerator(const GenusGrid& grid);
bool has_pm(const GenusGrid& grid);
std::optional<BigInt> min_pm_weight(const GenusGrid& grid);
std::optional<Matching> construct_pm(const GenusGrid& grid);
bool is_unique_pm(const GenusGrid& grid);

}  // namespace genusgrid
