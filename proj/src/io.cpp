#include "genusgrid/io.hpp"

#include "genusgrid/bigint.hpp"

#include <fstream>

namespace genusgrid {

namespace {

Json position_json(const Position& p) {
  if (const auto* c = std::get_if<GridCell>(&p)) return {{"x", c->x}, {"y", c->y}};
  const auto& port = std::get<Port>(p);
  return {{"seg", to_string(port.seg)}, {"idx", port.idx}};
}

Position position_from(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "position must be an object");
  if (j.contains("seg")) return Port{segment_from_string(j.at("seg").get<std::string>()), j.at("idx").get<int>()};
  return GridCell{j.at("x").get<int>(), j.at("y").get<int>()};
}

// nlohmann reports missing keys and type mismatches with its own exception
// types; surface them as Parse.
template <class F>
auto parsing(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const GenusGrid& grid) {
  const auto& layout = grid.layout();
  Json edges = Json::array();
  for (const auto& [a, b] : grid.canonical_edges()) edges.push_back({position_json(a), position_json(b)});
  return {{"g", layout.g},
          {"m", layout.m},
          {"lengths", layout.lengths},
          {"origin_corner", to_string(layout.origin)},
          {"edges", std::move(edges)}};
}

GenusGrid grid_from_json(const Json& j) {
  auto [layout, edges] = parsing("instance", [&] {
    SegmentLayout layout;
    layout.g = j.at("g").get<int>();
    layout.m = j.at("m").get<int>();
    layout.lengths = j.at("lengths").get<std::vector<int>>();
    layout.origin = corner_from_string(j.value("origin_corner", std::string("NW")));
    std::vector<GenusGrid::PositionEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be a pair of positions");
      edges.emplace_back(position_from(e[0]), position_from(e[1]));
    }
    return std::pair{layout, edges};
  });
  return GenusGrid::build(layout, edges);
}

Json to_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.graph.edges()) edges.push_back({e.u, e.v});
  Json crossing = Json::array();
  for (std::size_t e = 0; e < g.crossing.size(); ++e)
    if (g.crossing[e]) crossing.push_back(e);
  return {{"case", to_string(g.kind)},
          {"num_vertices", g.graph.num_vertices()},
          {"edges", std::move(edges)},
          {"crossing", std::move(crossing)}};
}

LabeledGraph labeled_from_json(const Json& j) {
  return parsing("labeled graph", [&] {
    const int n = j.at("num_vertices").get<int>();
    if (n < 0) throw Error(ErrorKind::Parse, "negative vertex count");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto pair = e.get<std::array<int, 2>>();
      if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n)
        throw Error(ErrorKind::Parse, "edge endpoint out of range");
      edges.push_back({pair[0], pair[1]});
    }
    LabeledGraph g;
    g.crossing.assign(edges.size(), false);
    for (const auto& c : j.value("crossing", Json::array())) {
      auto e = c.get<std::size_t>();
      if (e >= edges.size()) throw Error(ErrorKind::Parse, "crossing edge out of range");
      g.crossing[e] = true;
    }
    g.kind = cover_case_from_string(j.value("case", std::string("klein")));
    g.graph = Graph(n, std::move(edges));
    return g;
  });
}

Json matching_to_json(const std::vector<EdgeIndex>& edges, const std::optional<BigInt>& weight) {
  Json j = {{"matching", edges}};
  if (weight) j["weight"] = to_decimal(*weight);
  return j;
}

std::vector<EdgeIndex> matching_from_json(const Json& j) {
  return parsing("matching", [&] {
    const Json& list = j.is_array() ? j : j.at("matching");
    return list.get<std::vector<EdgeIndex>>();
  });
}

Json to_json(const IsolationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"cycle", f.cycle}, {"reason", f.reason}});
  Json j = {
      {"g", r.g},
      {"m", r.m},
      {"num_vertices", r.num_vertices},
      {"num_edges", r.num_edges},
      {"cycles_checked", r.cycles_checked},
      {"complete", r.complete},
      {"passed", r.passed()},
      {"lemmas_hold", r.lemmas_hold()},
      {"min_abs_circulation", r.min_abs_circulation ? Json(to_decimal(*r.min_abs_circulation)) : Json(nullptr)},
      {"witnesses",
       {{"w_seg", r.witnesses_by_kind[0]}, {"w_alt", r.witnesses_by_kind[1]}, {"w_planar", r.witnesses_by_kind[2]}}},
      {"witnesses_by_function", r.witnesses_by_function},
      {"checks",
       {{"digit_violations", r.digit_violations},
        {"parity_violations", r.parity_violations},
        {"alternation_eligible", r.alternation_eligible},
        {"alternation_failures", r.alternation_failures},
        {"weight_lemma_eligible", r.weight_lemma_eligible},
        {"weight_lemma_mismatches", r.weight_lemma_mismatches},
        {"disjunction_failures", r.disjunction_failures}}},
      {"failure_count", r.failure_count},
      {"failures", std::move(failures)},
  };
  return j;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace genusgrid
