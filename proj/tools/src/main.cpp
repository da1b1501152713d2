#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shannon/cli/commands.hpp"

namespace {

using shannon::cli::Algorithm;

void add_source(CLI::App* cmd, shannon::cli::GraphSource& src, bool generator) {
  cmd->add_option("--in", src.path, "Graph file");
  cmd->add_option("--extremal", src.extremal, "Fat triangle with the given even max degree");
  if (generator) {
    cmd->add_option("-n", src.n, "Number of vertices");
    cmd->add_option("-d", src.max_degree, "Maximum degree");
    cmd->add_option("-m", src.max_mult, "Maximum multiplicity");
    cmd->add_option("-s", src.seed, "Generator seed");
  }
}

void add_run(CLI::App* cmd, shannon::cli::RunConfig& cfg, std::string& algorithm) {
  cmd->add_option("--algorithm", algorithm, "det, seq, dist or vizing")
      ->check(CLI::IsMember({"det", "seq", "dist", "vizing"}));
  cmd->add_option("--ell", cfg.ell, "Path cap parameter (seq, dist)");
  cmd->add_option("--budget", cfg.budget, "MSSA iteration budget per stage (dist)");
  cmd->add_option("--seed", cfg.seed, "Seed for every random choice");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge coloring of multigraphs with Shannon and Vizing chains"};
  app.require_subcommand(1);

  shannon::cli::GraphSource src;
  shannon::cli::RunConfig cfg;
  cfg.debug_invariants = shannon::cli::debug_invariants_from_env();
  std::string algorithm = "det";
  std::string out_path;
  std::string stats_path;
  std::string coloring_path;
  std::string bound;
  std::string grid;

  CLI::App* gen = app.add_subcommand("generate", "Write a random multigraph or the fat triangle");
  add_source(gen, src, true);
  gen->add_option("--out", out_path, "Output file, '-' for stdout");

  CLI::App* color = app.add_subcommand("color", "Color a graph and verify the result");
  add_source(color, src, true);
  add_run(color, cfg, algorithm);
  color->add_option("--out", out_path, "Coloring file, '-' for stdout");
  color->add_option("--stats", stats_path, "Stats file (JSON lines), '-' for stdout");

  CLI::App* ver = app.add_subcommand("verify", "Check a coloring against a graph");
  ver->add_option("--in", src.path, "Graph file")->required();
  ver->add_option("--coloring", coloring_path, "Coloring file")->required();
  ver->add_option("--bound", bound, "shannon, vizing or a number of colors");

  CLI::App* bench = app.add_subcommand("bench", "Run a scaling grid and print aggregated JSON");
  add_run(bench, cfg, algorithm);
  bench->add_option("--grid", grid, "e.g. \"n=256,512;d=4;mu=half;seeds=10\"")->required();
  bench->add_option("--out", out_path, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : shannon::cli::kExitConfig;
  }
  cfg.algorithm = *shannon::cli::parse_algorithm(algorithm);

  if (*gen) return shannon::cli::cmd_generate(src, out_path, std::cout, std::cerr);
  if (*color) return shannon::cli::cmd_color(src, cfg, out_path, stats_path, std::cout, std::cerr);
  if (*ver) return shannon::cli::cmd_verify(src.path, coloring_path, bound, std::cout, std::cerr);
  shannon::cli::BenchSpec spec;
  try {
    spec = shannon::cli::parse_grid(grid);
  } catch (const std::exception& ex) {
    std::cerr << "bench: " << ex.what() << '\n';
    return shannon::cli::kExitConfig;
  }
  return shannon::cli::cmd_bench(spec, cfg, out_path, std::cout, std::cerr);
}
