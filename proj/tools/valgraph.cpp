#include <CLI11.hpp>

#include <iostream>

#include "valgraph/report.hpp"

int main(int argc, char** argv) {
  using namespace valgraph;
  CLI::App app{"valgraph: V-graphs, ordered quotients and valuations on exact division-ring models"};
  AnalysisRequest req;
  int window = 0;
  long delta_bound = 0;
  std::string y, x;
  app.add_option("analysis", req.analysis, "graph | axioms | order | classify | theorems | eth | valuation | all")
      ->required()
      ->check(CLI::IsMember(analysis_names()));
  app.add_option("--spec", req.spec_path, "model spec file")->required();
  app.add_option("--out", req.out_dir, "output directory for report.json and DOT files")->required();
  auto* wopt = app.add_option("--window", window, "window radius")->check(CLI::Range(1, 64));
  auto* dopt = app.add_option("--delta-bound", delta_bound, "bound for congruence searches")->check(CLI::Range(0L, 64L));
  auto* yopt = app.add_option("--y", y, "coset representative y (model syntax or label:N)");
  auto* xopt = app.add_option("--x", x, "second representative x");
  app.add_flag("--timing", req.timing, "include wall-clock seconds per analysis");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  if (*wopt) req.window = window;
  if (*dopt) req.delta_bound = delta_bound;
  if (*yopt) req.y = y;
  if (*xopt) req.x = x;

  RunOutcome out = run_and_write(req);
  for (const auto& d : out.diagnostics) std::cerr << "valgraph: " << d << "\n";
  if (out.report.contains("summary"))
    for (const auto& [name, status] : out.report["summary"].items())
      std::cout << name << ": " << status.get<std::string>() << "\n";
  return out.exit_code;
}
