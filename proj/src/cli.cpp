#include "genusgrid/cli.hpp"

#include "genusgrid/io.hpp"
#include "genusgrid/schema.hpp"
#include "genusgrid/weights.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace genusgrid {

namespace {

struct RunConfig {
  // gen
  int g = 1;
  int m = 2;
  std::uint64_t seed = 0;
  double density = 0.5;
  bool ensure_pm = false;
  std::vector<int> lengths;
  std::string origin;
  std::string output;
  // verify / weights / match / double
  std::string instance;
  std::optional<std::uint64_t> max_cycles;
  bool construct = false;
  bool unique = false;
  bool project = false;
  std::string matching;
  // schema
  std::string word;
};

void emit(std::ostream& out, const RunConfig& cfg, const Json& j) {
  if (cfg.output.empty()) out << j.dump(2) << '\n';
  else write_json(cfg.output, j);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  SegmentLayout layout;
  if (cfg.lengths.empty()) {
    layout = random_layout(cfg.g, cfg.m, cfg.seed);
  } else {
    layout.g = cfg.g;
    layout.m = cfg.m;
    layout.lengths = cfg.lengths;
  }
  if (!cfg.origin.empty()) layout.origin = corner_from_string(cfg.origin);
  layout.validate();
  emit(out, cfg, to_json(gen_instance(layout, cfg.seed, cfg.density, cfg.ensure_pm)));
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  GenusGrid grid = grid_from_json(read_json(cfg.instance));
  EnumerationLimits limits;
  if (cfg.max_cycles) limits.max_cycles = *cfg.max_cycles;
  IsolationReport report = check_isolation(grid, combine(grid), limits);
  emit(out, cfg, to_json(report));
  if (!report.passed() || !report.lemmas_hold()) return kExitProperty;
  if (!report.complete) return kExitBudget;
  return kExitOk;
}

int cmd_weights_dump(const RunConfig& cfg, std::ostream& out) {
  GenusGrid grid = grid_from_json(read_json(cfg.instance));
  CombinedWeight w = combine(grid);
  out << "edge";
  for (const auto& f : w.order) out << ',' << to_string(f);
  out << ",W\n";
  for (EdgeIndex e = 0; e < grid.num_edges(); ++e) {
    out << e;
    for (int k = 0; k < w.num_functions(); ++k) out << ',' << w.table(k, e);
    out << ',' << to_decimal(w(e)) << '\n';
  }
  return kExitOk;
}

int cmd_match(const RunConfig& cfg, std::ostream& out) {
  GenusGrid grid = grid_from_json(read_json(cfg.instance));
  const Graph& g = grid.graph();
  CombinedWeight w = combine(grid);
  ShiftedWeights shifted = shift_nonnegative(w.values);
  std::optional<BigInt> min_shifted = g.num_vertices() == 0 ? BigInt(0) : min_pm_weight(g, shifted.values);

  Json j = {{"has_pm", min_shifted.has_value()}, {"min_weight", nullptr}, {"matching", nullptr}, {"unique", nullptr}};
  if (min_shifted) j["min_weight"] = to_decimal(*min_shifted + shifted.offset * (g.num_vertices() / 2));
  if (cfg.construct) {
    if (auto m = construct_pm(g, w.values)) j["matching"] = m->edges;
  }
  if (cfg.unique) j["unique"] = is_unique_pm(g, w.values);
  emit(out, cfg, j);
  return kExitOk;
}

int cmd_schema_normalize(const RunConfig& cfg, std::ostream& out) {
  SchemaWord word = SchemaWord::parse(cfg.word);
  Normalization n = normalize(word);
  SurfaceInvariants inv = invariants(n.word);
  auto form = is_normal_form(n.word);
  Json trace = Json::array();
  for (const auto& step : n.trace) trace.push_back({{"rule", step.rule}, {"word", step.word.str()}});
  Json j = {{"input", word.str()},
            {"normal_form", n.word.str()},
            {"form", form ? Json(*form) : Json(nullptr)},
            {"orientable", inv.orientable},
            {"euler_char", inv.euler_char},
            {"genus", inv.genus},
            {"trace", std::move(trace)}};
  emit(out, cfg, j);
  return form ? kExitOk : kExitProperty;
}

int cmd_double(const RunConfig& cfg, std::ostream& out) {
  LabeledGraph g = labeled_from_json(read_json(cfg.instance));
  if (!cfg.project) {
    emit(out, cfg, to_json(double_cover(g)));
    return kExitOk;
  }
  auto m2 = matching_from_json(read_json(cfg.matching));
  emit(out, cfg, matching_to_json(project_matching(g, m2)));
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded: return kExitBudget;
    case ErrorKind::NotPerfect:
    case ErrorKind::NotExact:
    case ErrorKind::OddCycle: return kExitProperty;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic perfect-matching isolation on genus-g grid graphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int()> action;

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--g", cfg.g, "Genus")->required()->check(CLI::Range(1, 64));
  gen->add_option("--m", cfg.m, "Grid half-side; the grid is 2m x 2m")->required()->check(CLI::Range(2, 1024));
  gen->add_option("--seed", cfg.seed, "PRNG seed");
  gen->add_option("--density", cfg.density, "Fraction of legal edges")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--ensure-pm", cfg.ensure_pm, "Plant a perfect matching first");
  gen->add_option("--lengths", cfg.lengths, "Segment lengths (default: seeded)");
  gen->add_option("--origin", cfg.origin, "Scan origin corner")->check(CLI::IsMember({"NW", "NE", "SE", "SW"}));
  gen->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  gen->callback([&] { action = [&] { return cmd_gen(cfg, out); }; });

  auto* verify = app.add_subcommand("verify", "Check circ_W(C) != 0 over all simple cycles");
  verify->add_option("--instance", cfg.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--max-cycles", cfg.max_cycles, "Enumeration cap")->check(CLI::PositiveNumber);
  verify->add_option("-o,--output", cfg.output, "Report file (default: stdout)");
  verify->callback([&] { action = [&] { return cmd_verify(cfg, out); }; });

  auto* weights = app.add_subcommand("weights", "Weight function utilities");
  weights->require_subcommand(1);
  auto* dump = weights->add_subcommand("dump", "Per-edge elementary and combined weights as CSV");
  dump->add_option("--instance", cfg.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  dump->callback([&] { action = [&] { return cmd_weights_dump(cfg, out); }; });

  auto* match = app.add_subcommand("match", "Perfect matching decision, construction and uniqueness");
  match->add_option("--instance", cfg.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  match->add_flag("--construct", cfg.construct, "Construct the minimum-weight perfect matching");
  match->add_flag("--unique", cfg.unique, "Decide whether the perfect matching is unique");
  match->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  match->callback([&] { action = [&] { return cmd_match(cfg, out); }; });

  auto* schema = app.add_subcommand("schema", "Polygonal schema utilities");
  schema->require_subcommand(1);
  auto* norm = schema->add_subcommand("normalize", "Rewrite a schema word to normal form");
  norm->add_option("--word", cfg.word, "Word such as \"a b a- b-\"")->required();
  norm->callback([&] { action = [&] { return cmd_schema_normalize(cfg, out); }; });

  auto* dbl = app.add_subcommand("double", "Orientable double cover of a labeled graph");
  dbl->add_option("--instance", cfg.instance, "Labeled graph JSON")->required()->check(CLI::ExistingFile);
  auto* proj = dbl->add_flag("--project", cfg.project, "Project a matching of the cover back");
  dbl->add_option("--matching", cfg.matching, "Matching JSON of the cover")->needs(proj)->check(CLI::ExistingFile);
  dbl->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
  dbl->callback([&] {
    if (cfg.project && cfg.matching.empty()) throw CLI::RequiredError("--matching");
    action = [&] { return cmd_double(cfg, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace genusgrid
