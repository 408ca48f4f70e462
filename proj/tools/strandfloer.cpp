#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "strandfloer/commands.hpp"
#include "strandfloer/verify.hpp"

using namespace strandfloer;

namespace {

void add_common(CLI::App* cmd, RunConfig& config, std::string& variant, std::string& circle,
                std::string& mode) {
  cmd->add_option("--genus,-g", config.genus, "Genus of the standard matching")->check(CLI::PositiveNumber);
  cmd->add_option("--k,-k", config.k, "Tuple size (0 <= k <= 2g)");
  cmd->add_option("--variant", variant, "full | half")->check(CLI::IsMember({"full", "half"}));
  cmd->add_option("--mode", mode,
                  "Grid model, half | wrapped. Selects the matching variant unless --variant is given; "
                  "grid dumps accept either mode with either variant")
      ->check(CLI::IsMember({"half", "wrapped"}));
  cmd->add_option("--circle", circle, "single | double, for the standard matching")
      ->check(CLI::IsMember({"single", "double"}));
  cmd->add_option("--matching", config.matching,
                  "Matching as inline JSON {\"g\",\"mode\",\"pairs\"} or a file containing it; "
                  "its genus overrides --genus");
  cmd->add_option("--out,-o", config.out, "Output file, - for stdout");
  cmd->add_option("--threads,-j", config.threads,
                  "Worker threads (default: STRANDFLOER_THREADS, else 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strands algebras over Z/2 and their cut-open Floer models"};
  app.require_subcommand(1);

  RunConfig config;
  std::string variant = "full";
  std::string circle = "single";
  std::string mode;

  auto* build = app.add_subcommand("build", "Enumerate the algebra and dump it as JSON");
  add_common(build, config, variant, circle, mode);
  build->add_flag("--no-product", config.no_product, "Omit the product table");

  auto* verify = app.add_subcommand("verify", "Run verification suites, JSON report");
  add_common(verify, config, variant, circle, mode);
  verify->add_option("--seed", config.seed, "Seed for sampled suites");
  verify->add_option("--samples", config.samples, "Sample size when a suite is too large");
  std::string suite_help = "Comma-separated suites (all, none";
  for (const auto& s : suite_names()) suite_help += ", " + s;
  suite_help += ")";
  verify->add_option("--suites", config.suites, suite_help)->delimiter(',');

  auto* exp = app.add_subcommand("export", "Quiver of the algebra in DOT");
  add_common(exp, config, variant, circle, mode);

  auto* bench = app.add_subcommand("bench", "Timing table (CSV) for every g <= --genus");
  add_common(bench, config, variant, circle, mode);

  auto* grid = app.add_subcommand("grid", "Dump the cut-open diagram as JSON");
  add_common(grid, config, variant, circle, mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  config.variant = variant_from_string(variant);
  config.circle_mode = circle_mode_from_string(circle);
  if (!mode.empty()) {
    config.mode = grid_mode_from_string(mode);
    const Variant implied = *config.mode == GridMode::half ? Variant::half : Variant::full;
    const CLI::App* active = app.get_subcommands().front();
    if (!*grid && active->count("--variant") > 0 && implied != config.variant) {
      std::cerr << "error: --mode " << mode << " does not match --variant " << variant << "\n";
      return kExitInvalidInput;
    }
    if (active->count("--variant") == 0) config.variant = implied;
  }

  if (*build) return cmd_build(config, std::cout, std::cerr);
  if (*verify) return cmd_verify(config, std::cout, std::cerr);
  if (*exp) return cmd_export(config, std::cout, std::cerr);
  if (*bench) return cmd_bench(config, std::cout, std::cerr);
  if (*grid) return cmd_grid(config, std::cout, std::cerr);
  return kExitInvalidInput;
}
