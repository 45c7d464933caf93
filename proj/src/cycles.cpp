#include "genusgrid/cycles.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace genusgrid {

// ------------------------------------------------------------------ Cycle

Cycle Cycle::canonical(std::vector<VertexIndex> vertices, std::vector<EdgeIndex> edges) {
  const std::size_t k = edges.size();
  if (k == 0 || vertices.size() != k) return {std::move(vertices), std::move(edges)};
  const std::size_t p = static_cast<std::size_t>(std::min_element(edges.begin(), edges.end()) - edges.begin());
  const EdgeIndex next = edges[(p + 1) % k];
  const EdgeIndex prev = edges[(p + k - 1) % k];
  Cycle c;
  c.vertices.resize(k);
  c.edges.resize(k);
  if (next <= prev) {
    for (std::size_t i = 0; i < k; ++i) {
      c.vertices[i] = vertices[(p + i) % k];
      c.edges[i] = edges[(p + i) % k];
    }
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      c.vertices[i] = vertices[(p + 1 + k - i) % k];
      c.edges[i] = edges[(p + k - i) % k];
    }
  }
  return c;
}

int Cycle::position(EdgeIndex e) const {
  auto it = std::find(edges.begin(), edges.end(), e);
  return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
}

// ------------------------------------------------------------ enumeration

std::uint64_t default_max_cycles() {
  constexpr std::uint64_t fallback = 1'000'000;
  const char* env = std::getenv("GENUS_ISO_MAX_CYCLES");
  if (!env) return fallback;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *ptr != '\0' || v == 0) return fallback;
  return v;
}

namespace {

struct Collector {
  std::vector<Cycle> cycles;

  void on_push(EdgeIndex, VertexIndex, VertexIndex, std::size_t) {}
  void on_pop(EdgeIndex, std::size_t) {}
  bool on_cycle(std::span<const VertexIndex> path, std::span<const EdgeIndex> edges, EdgeIndex closing) {
    std::vector<EdgeIndex> es(edges.begin(), edges.end());
    es.push_back(closing);
    cycles.push_back(Cycle::canonical({path.begin(), path.end()}, std::move(es)));
    return true;
  }
};

struct ZeroFinder {
  std::span<const BigInt> weights;
  std::vector<BigInt> sums;
  std::optional<Cycle> hit;

  void on_push(EdgeIndex e, VertexIndex, VertexIndex, std::size_t depth) {
    const BigInt& w = weights[static_cast<std::size_t>(e)];
    if (depth % 2 == 0)
      sums[depth + 1] = sums[depth] + w;
    else
      sums[depth + 1] = sums[depth] - w;
  }
  void on_pop(EdgeIndex, std::size_t) {}
  bool on_cycle(std::span<const VertexIndex> path, std::span<const EdgeIndex> edges, EdgeIndex closing) {
    const std::size_t k = edges.size();
    if (k % 2 == 0) return true;  // odd cycles have no alternating sum
    const BigInt& w = weights[static_cast<std::size_t>(closing)];
    if (sums[k] - w != 0) return true;
    std::vector<EdgeIndex> es(edges.begin(), edges.end());
    es.push_back(closing);
    hit = Cycle::canonical({path.begin(), path.end()}, std::move(es));
    return false;
  }
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, const EnumerationLimits& limits) {
  Collector c;
  if (for_each_simple_cycle(g, c, limits) == EnumerationStatus::BudgetExceeded)
    throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(limits.max_cycles) + " cycles");
  return std::move(c.cycles);
}

std::optional<Cycle> find_zero_circulation(const Graph& g, std::span<const BigInt> weights,
                                           const EnumerationLimits& limits) {
  ZeroFinder f{weights, std::vector<BigInt>(static_cast<std::size_t>(g.num_vertices()) + 1), std::nullopt};
  auto status = for_each_simple_cycle(g, f, limits);
  if (f.hit) return f.hit;
  if (status == EnumerationStatus::BudgetExceeded)
    throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(limits.max_cycles) + " cycles");
  return std::nullopt;
}

// -------------------------------------------------------------- crossings

CrossingProfile crossing_profile(const GenusGrid& grid, const Cycle& cycle) {
  CrossingProfile profile(static_cast<std::size_t>(grid.layout().num_segments()));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& port = grid.port(cycle.edges[i]);
    if (!port || port->seg.primed) continue;
    profile[static_cast<std::size_t>(port->seg.index - 1)].push_back(
        {port->idx, cycle.head(i) == port->port_vertex, cycle.edges[i]});
  }
  for (auto& along : profile)
    std::sort(along.begin(), along.end(), [](const Crossing& a, const Crossing& b) { return a.idx < b.idx; });
  return profile;
}

Classification classify(const GenusGrid& grid, const Cycle& cycle) {
  Classification c;
  for (const auto& along : crossing_profile(grid, cycle)) {
    int n = static_cast<int>(along.size());
    c.crossings.push_back(n);
    c.parity.push_back(n % 2);
    if (n > 0) c.kind = CycleClass::Crossing;
  }
  return c;
}

bool alternates(const std::vector<Crossing>& along_segment) {
  for (std::size_t i = 1; i < along_segment.size(); ++i)
    if (along_segment[i].out == along_segment[i - 1].out) return false;
  return true;
}

AlternationResult check_alternation(const GenusGrid& grid, const Cycle& cycle) {
  auto profile = crossing_profile(grid, cycle);
  AlternationResult r;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].size() % 2 != 0)
      throw Error(ErrorKind::PreconditionOddCrossing, "segment S" + std::to_string(i + 1) + " is crossed " +
                                                          std::to_string(profile[i].size()) + " times");
    r.segment_pass.push_back(alternates(profile[i]));
  }
  return r;
}

std::int64_t crossing_gap_sum(const std::vector<Crossing>& along_segment) {
  std::int64_t sum = 0;
  for (std::size_t k = 1; k < along_segment.size(); k += 2) sum += along_segment[k].idx - along_segment[k - 1].idx;
  return sum;
}

WeightLemmaWitness verify_weight_lemma(const GenusGrid& grid, const CombinedWeight& w, const Cycle& cycle,
                                       int segment) {
  const int g = grid.layout().g;
  if (segment < 1 || segment > 2 * g) throw Error(ErrorKind::PreconditionViolated, "no such segment");
  auto along = crossing_profile(grid, cycle)[static_cast<std::size_t>(segment - 1)];
  if (along.size() % 2 != 0) throw Error(ErrorKind::PreconditionViolated, "odd number of crossings");
  if (!alternates(along)) throw Error(ErrorKind::PreconditionViolated, "crossings do not alternate");

  std::vector<EdgeIndex> subset;
  for (const auto& c : along) subset.push_back(c.edge);
  auto values = elementary_values(w, 2 * g + segment - 1);
  WeightLemmaWitness witness;
  witness.restricted = circulation_restricted<std::int64_t>(cycle, subset, values);
  witness.formula = crossing_gap_sum(along);
  return witness;
}

std::optional<int> certifying_function(const CombinedWeight& w, const Cycle& cycle) {
  auto c = elementary_circulations(w, cycle);
  for (Eigen::Index k = 0; k < c.size(); ++k)
    if (c(k) != 0) return static_cast<int>(k);
  return std::nullopt;
}

// -------------------------------------------------------------- isolation

namespace {

using Column = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

struct PortStep {
  int segment;  // unprimed segment index, 1-based
  int idx;
  bool out;
};

// Incremental per-depth prefix sums of the 4g+1 elementary circulations and
// of circ_W, so a closed cycle costs O(4g+1) plus its crossings.
template <class Acc>
class IsolationVisitor {
 public:
  IsolationVisitor(const GenusGrid& grid, const CombinedWeight& w, IsolationReport& report)
      : grid_(grid), w_(w), report_(report), f_(w.num_functions()), segs_(grid.layout().num_segments()) {
    const auto depth = static_cast<Eigen::Index>(grid.num_vertices()) + 1;
    sums_ = ElementaryTable::Zero(f_, depth);
    wsum_.assign(static_cast<std::size_t>(depth), Acc(0));
    for (const BigInt& v : w.values) wvals_.push_back(static_cast<Acc>(v));
    base_ = static_cast<Acc>(w.base);
    if (w.base < BigInt(std::numeric_limits<std::int64_t>::max()))
      half_base_ = static_cast<std::int64_t>(w.base / 2);
    along_.resize(static_cast<std::size_t>(segs_));
    circ_.resize(f_);
  }

  void on_push(EdgeIndex e, VertexIndex, VertexIndex to, std::size_t depth) {
    const auto d = static_cast<Eigen::Index>(depth);
    if (depth % 2 == 0) {
      sums_.col(d + 1) = sums_.col(d) + w_.table.col(e);
      wsum_[depth + 1] = wsum_[depth] + wvals_[static_cast<std::size_t>(e)];
    } else {
      sums_.col(d + 1) = sums_.col(d) - w_.table.col(e);
      wsum_[depth + 1] = wsum_[depth] - wvals_[static_cast<std::size_t>(e)];
    }
    const auto& port = grid_.port(e);
    if (port && !port->seg.primed) ports_.push_back({port->seg.index, port->idx, to == port->port_vertex});
  }

  void on_pop(EdgeIndex e, std::size_t) {
    const auto& port = grid_.port(e);
    if (port && !port->seg.primed) ports_.pop_back();
  }

  bool on_cycle(std::span<const VertexIndex> path, std::span<const EdgeIndex> edges, EdgeIndex closing) {
    const std::size_t k = edges.size();
    ++report_.cycles_checked;
    if (k % 2 == 0) {
      fail(path, "odd cycle");
      return true;
    }
    const auto d = static_cast<Eigen::Index>(k);
    circ_ = sums_.col(d) - w_.table.col(closing);
    const Acc circ_w = wsum_[k] - wvals_[static_cast<std::size_t>(closing)];

    if (circ_w == 0) fail(path, "circ_W = 0");
    const Acc magnitude = circ_w < 0 ? Acc(-circ_w) : circ_w;
    if (!have_min_ || magnitude < min_) {
      min_ = magnitude;
      have_min_ = true;
    }

    check_digits(circ_w);
    record_witness();
    check_crossings(path, closing);
    return true;
  }

  void finish() {
    if (have_min_) report_.min_abs_circulation = static_cast<BigInt>(min_);
  }

 private:
  void fail(std::span<const VertexIndex> path, const char* reason) {
    ++report_.failure_count;
    if (report_.failures.size() >= 16) return;
    IsolationFailure f;
    for (VertexIndex v : path) f.cycle.push_back(grid_.vertex_id(v));
    f.reason = reason;
    report_.failures.push_back(std::move(f));
  }

  void check_digits(const Acc& circ_w) {
    Acc horner = 0;
    for (Eigen::Index k = f_ - 1; k >= 0; --k) horner = horner * base_ + circ_(k);
    horner *= base_;
    bool ok = horner == circ_w;
    if (half_base_) {
      for (Eigen::Index k = 0; k < f_; ++k)
        if (circ_(k) >= *half_base_ || circ_(k) <= -*half_base_) ok = false;
    }
    if (ok && (circ_w != 0) != (circ_.array() != 0).any()) ok = false;
    if (!ok) ++report_.digit_violations;
  }

  void record_witness() {
    for (Eigen::Index k = 0; k < f_; ++k) {
      if (circ_(k) == 0) continue;
      ++report_.witnesses_by_function[static_cast<std::size_t>(k)];
      ++report_.witnesses_by_kind[static_cast<std::size_t>(w_.order[static_cast<std::size_t>(k)].kind)];
      return;
    }
  }

  void check_crossings(std::span<const VertexIndex> path, EdgeIndex closing) {
    for (auto& a : along_) a.clear();
    for (const auto& p : ports_) along_[static_cast<std::size_t>(p.segment - 1)].push_back({p.idx, p.out, -1});
    if (const auto& port = grid_.port(closing); port && !port->seg.primed)
      along_[static_cast<std::size_t>(port->seg.index - 1)].push_back(
          {port->idx, path.front() == port->port_vertex, closing});

    bool any_odd = false, any_certifying_alternation = false, interior = true, all_alternate = true;
    for (int i = 0; i < segs_; ++i) {
      auto& along = along_[static_cast<std::size_t>(i)];
      if (along.empty()) continue;
      interior = false;
      std::sort(along.begin(), along.end(), [](const Crossing& a, const Crossing& b) { return a.idx < b.idx; });
      const std::int64_t seg_circ = circ_(i);
      if ((seg_circ - static_cast<std::int64_t>(along.size())) % 2 != 0) ++report_.parity_violations;
      if (along.size() % 2 != 0) {
        any_odd = true;
        continue;
      }
      if (!alternates(along)) {
        all_alternate = false;
        continue;
      }
      any_certifying_alternation = true;
      ++report_.weight_lemma_eligible;
      std::int64_t restricted = circ_(segs_ + i);
      std::int64_t formula = crossing_gap_sum(along);
      if ((restricted < 0 ? -restricted : restricted) != formula) ++report_.weight_lemma_mismatches;
    }
    if (!any_odd && !interior) {
      ++report_.alternation_eligible;
      if (!all_alternate) ++report_.alternation_failures;
    }
    if (!(any_odd || any_certifying_alternation || interior)) ++report_.disjunction_failures;
  }

  const GenusGrid& grid_;
  const CombinedWeight& w_;
  IsolationReport& report_;
  Eigen::Index f_;
  int segs_;
  ElementaryTable sums_;
  std::vector<Acc> wsum_;
  std::vector<Acc> wvals_;
  Acc base_;
  std::optional<std::int64_t> half_base_;
  std::vector<PortStep> ports_;
  std::vector<std::vector<Crossing>> along_;
  Column circ_;
  Acc min_ = 0;
  bool have_min_ = false;
};

template <class Acc>
void run_isolation(const GenusGrid& grid, const CombinedWeight& w, const EnumerationLimits& limits,
                   IsolationReport& report) {
  IsolationVisitor<Acc> visitor(grid, w, report);
  report.complete = for_each_simple_cycle(grid.graph(), visitor, limits) == EnumerationStatus::Complete;
  visitor.finish();
}

}  // namespace

IsolationReport check_isolation(const GenusGrid& grid, const CombinedWeight& w, const EnumerationLimits& limits) {
  IsolationReport report;
  report.g = grid.layout().g;
  report.m = grid.layout().m;
  report.num_vertices = grid.num_vertices();
  report.num_edges = grid.num_edges();
  report.witnesses_by_function.assign(static_cast<std::size_t>(w.num_functions()), 0);

  // A circulation is bounded by |E| * max|W(e)|; pick the fixed-width
  // accumulator when that fits with room for the Horner check.
  BigInt bound = w.base;
  for (int k = 0; k <= w.num_functions(); ++k) bound *= w.base;
  bound *= std::max(1, grid.num_edges());
  if (boost::multiprecision::msb(bound) < 500)
    run_isolation<CheckedInt512>(grid, w, limits, report);
  else
    run_isolation<BigInt>(grid, w, limits, report);
  return report;
}

IsolationReport verify_isolation(const GenusGrid& grid, const CombinedWeight& w, const EnumerationLimits& limits) {
  IsolationReport report = check_isolation(grid, w, limits);
  if (!report.complete)
    throw Error(ErrorKind::BudgetExceeded, "cycle cap of " + std::to_string(limits.max_cycles) + " reached after " +
                                               std::to_string(report.cycles_checked) + " cycles");
  return report;
}

IsolationReport verify_isolation(const GenusGrid& grid, const EnumerationLimits& limits) {
  return verify_isolation(grid, combine(grid), limits);
}

}  // namespace genusgrid
