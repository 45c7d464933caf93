#include "genusgrid/matching.hpp"

#include "genusgrid/determinant.hpp"
#include "genusgrid/polynomial.hpp"
#include "genusgrid/weights.hpp"

#include <algorithm>
#include <variant>

namespace genusgrid {

ShiftedWeights shift_nonnegative(std::span<const BigInt> weights) {
  ShiftedWeights s;
  if (weights.empty()) return s;
  s.offset = *std::min_element(weights.begin(), weights.end());
  s.values.reserve(weights.size());
  for (const BigInt& w : weights) s.values.push_back(w - s.offset);
  return s;
}

namespace {

struct Sides {
  std::vector<int> slot;  // row or column of each vertex
  std::vector<int> color;
  int rows = 0;
  int cols = 0;
};

Sides split(const Graph& g) {
  auto check = verify_bipartite(g);
  if (std::holds_alternative<OddCycle>(check))
    throw Error(ErrorKind::PreconditionViolated, "graph is not bipartite");
  Sides s;
  s.color = std::get<TwoColoring>(check).color;
  for (int c : s.color) s.slot.push_back(c == 0 ? s.rows++ : s.cols++);
  return s;
}

template <class E>
WeightEnumerator enumerate_with(const Graph& g, const Sides& sides, std::span<const BigInt> shifted) {
  using Poly = SparsePolynomial<E, BigInt>;
  Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic> m(sides.rows, sides.cols);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (sides.color[static_cast<std::size_t>(u)] != 0) std::swap(u, v);
    auto& entry = m(sides.slot[static_cast<std::size_t>(u)], sides.slot[static_cast<std::size_t>(v)]);
    entry += Poly::monomial(static_cast<E>(shifted[static_cast<std::size_t>(e)]), BigInt(1));
  }
  Poly det = bareiss_determinant<Poly>(std::move(m));
  WeightEnumerator out;
  for (const auto& [exponent, coefficient] : det.terms()) out.terms.emplace_back(static_cast<BigInt>(exponent), coefficient);
  return out;
}

}  // namespace

WeightEnumerator weight_enumerator(const Graph& g, std::span<const BigInt> shifted) {
  Sides sides = split(g);
  if (sides.rows != sides.cols)
    throw Error(ErrorKind::UnbalancedClasses,
                "colour classes of size " + std::to_string(sides.rows) + " and " + std::to_string(sides.cols));
  BigInt largest = 0;
  for (const BigInt& w : shifted) {
    if (w < 0) throw Error(ErrorKind::PreconditionViolated, "negative exponent weight");
    largest = std::max(largest, w);
  }
  // Exponents reach rows * max W'; sums of two stay below 2^500 for the
  // fixed-width path.
  if (largest == 0 || boost::multiprecision::msb(largest * std::max(1, sides.rows)) < 498)
    return enumerate_with<CheckedInt512>(g, sides, shifted);
  return enumerate_with<BigInt>(g, sides, shifted);
}

bool has_pm(const Graph& g, std::span<const BigInt> weights) {
  if (g.num_vertices() == 0) return true;
  auto s = shift_nonnegative(weights);
  try {
    return !weight_enumerator(g, s.values).is_zero();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnbalancedClasses) return false;
    throw;
  }
}

std::optional<BigInt> min_pm_weight(const Graph& g, std::span<const BigInt> shifted) {
  try {
    return weight_enumerator(g, shifted).min_exponent();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnbalancedClasses) return std::nullopt;
    throw;
  }
}

bool is_perfect(const Graph& g, std::span<const EdgeIndex> edges) {
  std::vector<int> covered(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeIndex e : edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) return false;
    ++covered[static_cast<std::size_t>(ed.u)];
    ++covered[static_cast<std::size_t>(ed.v)];
  }
  return std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; });
}

std::vector<EdgeIndex> maximum_matching(const Graph& g) {
  Sides sides = split(g);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<EdgeIndex> match_edge(n, -1);
  std::vector<int> seen(n, -1);

  auto augment = [&](auto&& self, VertexIndex u, int round) -> bool {
    for (const auto& inc : g.incident(u)) {
      const auto w = static_cast<std::size_t>(inc.neighbor);
      if (seen[w] == round) continue;
      seen[w] = round;
      const EdgeIndex current = match_edge[w];
      if (current < 0 || self(self, g.edge(current).other(inc.neighbor), round)) {
        match_edge[w] = inc.edge;
        match_edge[static_cast<std::size_t>(u)] = inc.edge;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u)
    if (sides.color[u] == 0) augment(augment, static_cast<VertexIndex>(u), static_cast<int>(u));

  std::vector<EdgeIndex> out;
  for (std::size_t w = 0; w < n; ++w)
    if (sides.color[w] == 1 && match_edge[w] >= 0) out.push_back(match_edge[w]);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_pm(const Graph& g) { return 2 * maximum_matching(g).size() == static_cast<std::size_t>(g.num_vertices()); }

namespace {

std::vector<BigInt> drop(std::span<const BigInt> values, EdgeIndex removed) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (static_cast<EdgeIndex>(i) != removed) out.push_back(values[i]);
  return out;
}

Graph without(const Graph& g, EdgeIndex e) {
  std::vector<bool> removed(static_cast<std::size_t>(g.num_edges()), false);
  removed[static_cast<std::size_t>(e)] = true;
  return g.without_edges(removed);
}

}  // namespace

std::optional<Matching> construct_pm(const Graph& g, std::span<const BigInt> weights) {
  if (g.num_vertices() == 0) return Matching{};
  auto shifted = shift_nonnegative(weights);
  auto w_g = min_pm_weight(g, shifted.values);
  if (!w_g) return std::nullopt;

  Matching m;
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    auto w_minus = min_pm_weight(without(g, e), drop(shifted.values, e));
    if (!w_minus || *w_minus > *w_g) {
      m.edges.push_back(e);
      m.weight += weights[static_cast<std::size_t>(e)];
    }
  }
  if (!is_perfect(g, m.edges))
    throw Error(ErrorKind::NotPerfect, "selected " + std::to_string(m.edges.size()) + " edges do not form a perfect matching");
  return m;
}

bool is_unique_pm(const Graph& g, std::span<const BigInt> weights) {
  auto m = construct_pm(g, weights);
  if (!m) return false;
  for (EdgeIndex e : m->edges) {
    auto rest = drop(weights, e);
    if (has_pm(without(g, e), rest)) return false;
  }
  return true;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::span<const BigInt> weights,
                                                  std::uint64_t limit) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> covered(n, 0);
  std::vector<EdgeIndex> chosen;
  std::vector<Matching> out;

  auto search = [&](auto&& self) -> void {
    std::size_t v = 0;
    while (v < n && covered[v]) ++v;
    if (v == n) {
      if (out.size() >= limit) throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(limit) + " perfect matchings");
      Matching m;
      m.edges = chosen;
      std::sort(m.edges.begin(), m.edges.end());
      for (EdgeIndex e : m.edges) m.weight += weights[static_cast<std::size_t>(e)];
      out.push_back(std::move(m));
      return;
    }
    for (const auto& inc : g.incident(static_cast<VertexIndex>(v))) {
      const auto w = static_cast<std::size_t>(inc.neighbor);
      if (w == v || covered[w]) continue;
      covered[v] = covered[w] = 1;
      chosen.push_back(inc.edge);
      self(self);
      chosen.pop_back();
      covered[v] = covered[w] = 0;
    }
  };
  search(search);
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return out;
}

const char* to_string(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::Pass: return "pass";
    case LemmaVerdict::Fail: return "fail";
    case LemmaVerdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

LemmaVerdict verify_uniquepm_lemma(const Graph& g, std::span<const BigInt> weights, const EnumerationLimits& limits) {
  auto matchings = enumerate_perfect_matchings(g, weights);
  bool unique_min = true;
  if (!matchings.empty()) {
    auto best = std::min_element(matchings.begin(), matchings.end(),
                                 [](const Matching& a, const Matching& b) { return a.weight < b.weight; });
    unique_min = std::count_if(matchings.begin(), matchings.end(),
                               [&](const Matching& m) { return m.weight == best->weight; }) == 1;
  }
  if (unique_min) return LemmaVerdict::Pass;
  if (find_zero_circulation(g, weights, limits)) return LemmaVerdict::NotApplicable;
  return LemmaVerdict::Fail;
}

WeightEnumerator weight_enumerator(const GenusGrid& grid) {
  auto w = combine(grid);
  return weight_enumerator(grid.graph(), shift_nonnegative(w.values).values);
}

bool has_pm(const GenusGrid& grid) { return has_pm(grid.graph(), combine(grid).values); }

std::optional<BigInt> min_pm_weight(const GenusGrid& grid) {
  auto w = combine(grid);
  return min_pm_weight(grid.graph(), shift_nonnegative(w.values).values);
}

std::optional<Matching> construct_pm(const GenusGrid& grid) { return construct_pm(grid.graph(), combine(grid).values); }

bool is_unique_pm(const GenusGrid& grid) { return is_unique_pm(grid.graph(), combine(grid).values); }

}  // namespace genusgrid
