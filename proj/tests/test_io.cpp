#include "genusgrid/io.hpp"

#include "error_kind.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace genusgrid;

TEST_CASE("instance JSON round trip") {
  for (int g : {1, 2})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GenusGrid grid = gen_instance(random_layout(g, 4, seed), seed, 0.5, true);
      Json j = to_json(grid);
      CHECK(j["g"] == g);
      CHECK(j["m"] == 4);
      for (const auto& e : j["edges"])
        for (const auto& p : e)
          if (p.contains("seg")) CHECK(p["seg"].get<std::string>().find('p') == std::string::npos);
      GenusGrid back = grid_from_json(Json::parse(j.dump()));
      REQUIRE(back.num_edges() == grid.num_edges());
      CHECK(back.layout() == grid.layout());
      CHECK(back.vertex_ids() == grid.vertex_ids());
      for (EdgeIndex e = 0; e < grid.num_edges(); ++e) CHECK(back.graph().edge(e) == grid.graph().edge(e));
      CHECK(to_json(back) == j);
    }
}

TEST_CASE("primed ports canonicalise on load") {
  Json j = Json::parse(R"({"g":1,"m":3,"lengths":[6,4],"origin_corner":"NW",
    "edges":[[{"seg":"S1p","idx":2},{"x":0,"y":0}]]})");
  // fill in the interior neighbour of Port(S1', 2)
  SegmentLayout layout{1, 3, {6, 4}, Corner::NW};
  BorderMap border(layout);
  GridCell inner = *border.inward_neighbor(border.cell_of(Port{{1, true}, 2}));
  j["edges"][0][1] = {{"x", inner.x}, {"y", inner.y}};
  GenusGrid grid = grid_from_json(j);
  REQUIRE(grid.num_edges() == 1);
  Json out = to_json(grid);
  bool found = false;
  for (const auto& p : out["edges"][0])
    if (p.contains("seg")) {
      CHECK(p["seg"] == "S1");
      CHECK(p["idx"] == 2);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("malformed instances") {
  CHECK(error_kind([] { grid_from_json(Json::parse(R"({"g":1})")); }) == ErrorKind::Parse);
  CHECK(error_kind([] { grid_from_json(Json::parse(R"({"g":1,"m":2,"lengths":[2,4],"edges":[[{"x":2,"y":2}]]})")); }) ==
        ErrorKind::Parse);
  CHECK(error_kind([] { grid_from_json(Json::parse(R"({"g":"one","m":2,"lengths":[2,4],"edges":[]})")); }) ==
        ErrorKind::Parse);
  CHECK(error_kind([] { grid_from_json(Json::parse(R"({"g":1,"m":2,"lengths":[3,3],"edges":[]})")); }) ==
        ErrorKind::SegmentLengthOdd);
  CHECK(error_kind([] { read_json("/nonexistent/instance.json"); }) == ErrorKind::Parse);
}

TEST_CASE("labeled graph and matching JSON") {
  LabeledGraph g;
  g.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  g.crossing = {true, false, false, true};
  g.kind = CoverCase::Projective;
  Json j = to_json(g);
  CHECK(j["crossing"] == Json::array({0, 3}));
  LabeledGraph back = labeled_from_json(Json::parse(j.dump()));
  CHECK(back.graph.edges() == g.graph.edges());
  CHECK(back.crossing == g.crossing);
  CHECK(back.kind == g.kind);
  CHECK(error_kind([] { labeled_from_json(Json::parse(R"({"num_vertices":2,"edges":[[0,5]]})")); }) == ErrorKind::Parse);

  Json m = matching_to_json({0, 2}, BigInt(7));
  CHECK(m["weight"] == "7");
  CHECK(matching_from_json(m) == std::vector<EdgeIndex>{0, 2});
  CHECK(matching_from_json(Json::array({1, 3})) == std::vector<EdgeIndex>{1, 3});
}

TEST_CASE("report JSON and file round trip") {
  GenusGrid grid = gen_instance(random_layout(1, 3, 1), 1, 0.5, true);
  IsolationReport r = verify_isolation(grid);
  Json j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["cycles_checked"] == r.cycles_checked);
  CHECK(j["failures"].empty());

  auto path = std::filesystem::temp_directory_path() / "genusgrid_io_test.json";
  write_json(path, to_json(grid));
  CHECK(read_json(path) == to_json(grid));
  std::filesystem::remove(path);
}
