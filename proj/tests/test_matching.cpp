#include "genusgrid/matching.hpp"

#include "genusgrid/weights.hpp"

#include "error_kind.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace genusgrid;

namespace {

Graph k2() { return Graph(2, {{0, 1}}); }
// edges 0..3 around the square 0-1-2-3
Graph square() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
// connected, balanced 3 + 3, but rows 0 and 2 share their only neighbour
Graph hall_violator() { return Graph(6, {{0, 1}, {2, 1}, {4, 1}, {4, 3}, {4, 5}}); }
Graph hexagon() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}); }

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

BigInt weight_of(const std::vector<EdgeIndex>& m, const std::vector<BigInt>& w) {
  BigInt s = 0;
  for (EdgeIndex e : m) s += w[static_cast<std::size_t>(e)];
  return s;
}

struct BruteMin {
  std::size_t count = 0;
  std::size_t at_min = 0;
  std::optional<BigInt> min;
  std::vector<EdgeIndex> argmin;
};

BruteMin brute_min(const Graph& g, const std::vector<BigInt>& w) {
  BruteMin r;
  auto all = oracle::perfect_matchings(g);
  r.count = all.size();
  for (const auto& m : all) {
    BigInt s = weight_of(m, w);
    if (!r.min || s < *r.min) r.min = s, r.argmin = m, r.at_min = 0;
    if (s == *r.min) ++r.at_min;
  }
  return r;
}

std::vector<GenusGrid> pm_instances(int count) {
  std::vector<GenusGrid> out;
  for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    const int g = 1 + static_cast<int>(seed % 2);
    const int m = 3 + static_cast<int>(seed % 2);
    GenusGrid grid = gen_instance(random_layout(g, m, seed), seed, 0.3 + 0.1 * static_cast<double>(seed % 5), true);
    if (grid.num_vertices() <= 24) out.push_back(std::move(grid));
  }
  return out;
}

}  // namespace

TEST_CASE("shift_nonnegative examples") {
  auto zero = shift_nonnegative(big({0, 0, 0}));
  CHECK(zero.values == big({0, 0, 0}));
  CHECK(zero.offset == 0);
  auto s = shift_nonnegative(big({-3, 1}));
  CHECK(s.values == big({0, 4}));
  CHECK(s.offset == -3);
  CHECK(shift_nonnegative({}).offset == 0);
}

TEST_CASE("shifting keeps the minimum-weight matching") {
  for (const GenusGrid& grid : pm_instances(50)) {
    auto w = combine(grid).values;
    auto s = shift_nonnegative(w);
    auto before = brute_min(grid.graph(), w);
    auto after = brute_min(grid.graph(), s.values);
    CHECK(before.argmin == after.argmin);
    CHECK(*before.min == *after.min + s.offset * (grid.num_vertices() / 2));
  }
}

TEST_CASE("weight_enumerator examples") {
  auto e = weight_enumerator(k2(), big({0}));
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].first == 0);
  CHECK(abs_value(e.terms[0].second) == 1);

  auto sq = weight_enumerator(square(), big({0, 1, 2, 3}));
  REQUIRE(sq.terms.size() == 2);
  CHECK(sq.terms[0].first == 2);
  CHECK(sq.terms[1].first == 4);
  CHECK(abs_value(sq.terms[0].second) == 1);
  CHECK(abs_value(sq.terms[1].second) == 1);

  CHECK(weight_enumerator(hall_violator(), big({0, 0, 0, 0, 0})).is_zero());
  CHECK(oracle::perfect_matchings(hall_violator()).empty());

  CHECK(error_kind([] { weight_enumerator(Graph(3, {{0, 1}, {1, 2}}), big({0, 0})); }) == ErrorKind::UnbalancedClasses);
  CHECK(error_kind([] { weight_enumerator(Graph(3, {{0, 1}, {1, 2}, {2, 0}}), big({0, 0, 0})); }) ==
        ErrorKind::PreconditionViolated);
  CHECK(error_kind([] { weight_enumerator(k2(), big({-1})); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("weight_enumerator equals the signed matching polynomial") {
  for (const GenusGrid& grid : pm_instances(60)) {
    auto w = shift_nonnegative(combine(grid).values).values;
    auto enumerator = weight_enumerator(grid.graph(), w);
    auto expected = oracle::signed_matching_polynomial(grid.graph(), w);
    REQUIRE(enumerator.terms.size() == expected.size());
    // colour classes may be swapped per component: one global sign
    int global = 0;
    auto it = expected.begin();
    for (const auto& [exp, coef] : enumerator.terms) {
      CHECK(exp == it->first);
      int sign = coef == it->second ? 1 : coef == -it->second ? -1 : 0;
      CHECK(sign != 0);
      if (global == 0) global = sign;
      CHECK(sign == global);
      ++it;
    }
    // W isolates: the lowest term comes from one matching
    REQUIRE_FALSE(enumerator.is_zero());
    CHECK(abs_value(enumerator.terms.front().second) == 1);
  }
}

TEST_CASE("has_pm examples") {
  GenusGrid skeleton = gen_instance(random_layout(1, 3, 7), 7, 0.0, true);
  CHECK(has_pm(skeleton));
  std::vector<bool> removed(static_cast<std::size_t>(skeleton.num_edges()), false);
  removed[0] = true;
  Graph broken = skeleton.graph().without_edges(removed);
  CHECK_FALSE(has_pm(broken, std::vector<BigInt>(static_cast<std::size_t>(broken.num_edges()), 0)));
  CHECK(oracle::perfect_matchings(broken).empty());
  CHECK(has_pm(Graph(), {}));
  CHECK_FALSE(has_pm(Graph(3, {{0, 1}, {1, 2}}), big({0, 0})));
}

TEST_CASE("min_pm_weight examples") {
  CHECK(*min_pm_weight(k2(), big({0})) == 0);
  CHECK(*min_pm_weight(square(), big({0, 1, 2, 3})) == 2);
  CHECK_FALSE(min_pm_weight(hall_violator(), big({0, 0, 0, 0, 0})).has_value());
}

TEST_CASE("construct_pm examples") {
  GenusGrid skeleton = gen_instance(random_layout(1, 3, 7), 7, 0.0, true);
  auto planted = construct_pm(skeleton);
  REQUIRE(planted);
  CHECK(static_cast<int>(planted->edges.size()) == skeleton.num_edges());

  auto m = construct_pm(square(), big({0, 1, 2, 3}));
  REQUIRE(m);
  CHECK(m->edges == std::vector<EdgeIndex>{0, 2});
  CHECK(m->weight == 2);
  CHECK_FALSE(construct_pm(hall_violator(), big({0, 0, 0, 0, 0})));
  // equal weights leave no unique minimum: no edge raises w_{G-e}
  CHECK(error_kind([] { construct_pm(hexagon(), big({1, 1, 1, 1, 1, 1})); }) == ErrorKind::NotPerfect);
  // on the square the two matchings cancel in the determinant
  CHECK_FALSE(construct_pm(square(), big({1, 1, 1, 1})));
}

TEST_CASE("construct_pm equals the brute-force minimum") {
  for (const GenusGrid& grid : pm_instances(40)) {
    auto w = combine(grid).values;
    auto brute = brute_min(grid.graph(), w);
    REQUIRE(brute.count > 0);
    CHECK(brute.at_min == 1);
    auto m = construct_pm(grid);
    REQUIRE(m);
    CHECK(m->edges == brute.argmin);
    CHECK(m->weight == *brute.min);
    CHECK(is_perfect(grid.graph(), m->edges));
    CHECK(*min_pm_weight(grid) + shift_nonnegative(w).offset * (grid.num_vertices() / 2) == m->weight);
  }
}

TEST_CASE("is_unique_pm examples") {
  GenusGrid skeleton = gen_instance(random_layout(1, 3, 7), 7, 0.0, true);
  CHECK(is_unique_pm(skeleton));
  CHECK_FALSE(is_unique_pm(square(), big({0, 1, 2, 3})));
  CHECK_FALSE(is_unique_pm(hall_violator(), big({0, 0, 0, 0, 0})));
  for (const GenusGrid& grid : pm_instances(40))
    CHECK(is_unique_pm(grid) == (oracle::perfect_matchings(grid.graph()).size() == 1));
}

TEST_CASE("verify_uniquepm_lemma examples") {
  for (const GenusGrid& grid : pm_instances(30)) CHECK(verify_uniquepm_lemma(grid.graph(), combine(grid).values) == LemmaVerdict::Pass);
  CHECK(verify_uniquepm_lemma(square(), big({0, 0, 0, 0})) == LemmaVerdict::NotApplicable);
  GenusGrid skeleton = gen_instance(random_layout(1, 3, 7), 7, 0.0, true);
  CHECK(verify_uniquepm_lemma(skeleton.graph(), std::vector<BigInt>(static_cast<std::size_t>(skeleton.num_edges()), 0)) ==
        LemmaVerdict::Pass);
  CHECK(std::string(to_string(LemmaVerdict::NotApplicable)) == "not_applicable");
}

TEST_CASE("perfect matching enumeration equals the oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    LabeledGraph lg = oracle::random_labeled_graph(rng, 14, CoverCase::Klein);
    // distinct powers of two isolate every matching
    std::vector<BigInt> w;
    for (EdgeIndex e = 0; e < lg.graph.num_edges(); ++e) w.push_back(BigInt(1) << e);
    auto mine = enumerate_perfect_matchings(lg.graph, w);
    auto expected = oracle::perfect_matchings(lg.graph);
    REQUIRE(mine.size() == expected.size());
    for (std::size_t i = 0; i < mine.size(); ++i) CHECK(mine[i].edges == expected[i]);
    CHECK(has_pm(lg.graph, w) == !expected.empty());
    CHECK(has_pm(lg.graph) == !expected.empty());
    auto max = maximum_matching(lg.graph);
    CHECK((2 * max.size() == static_cast<std::size_t>(lg.graph.num_vertices())) == !expected.empty());
  }
  CHECK(error_kind([] { enumerate_perfect_matchings(square(), big({0, 0, 0, 0}), 1); }) == ErrorKind::BudgetExceeded);
}
