#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "strandfloer/circle.hpp"
#include "strandfloer/grid.hpp"
#include "strandfloer/strands.hpp"

namespace strandfloer {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInvalidInput = 2 };

struct RunConfig {
  int genus = 1;
  int k = 1;
  Variant variant = Variant::full;
  /// Grid mode for grid dumps; defaults to the one matching the variant.
  std::optional<GridMode> mode;
  /// Inline JSON or a file path; the standard matching when empty.
  std::string matching;
  /// Circle mode of the standard matching (an explicit matching carries its own).
  CircleMode circle_mode = CircleMode::single;
  std::string out = "-";
  int threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  /// Suites to run; empty selects none, "all" selects every suite.
  std::vector<std::string> suites{"all"};
  /// Skip the sparse product table in the build output.
  bool no_product = false;
};

/// Resolves the circle from the config; throws std::invalid_argument for a
/// matching that does not present a one-boundary surface of the given genus.
PointedMatchedCircle resolve_circle(const RunConfig& config);

/// Each command writes its payload to config.out ("-" for `out`) and
/// progress to `log`, and returns an ExitCode. Invalid input is reported on
/// `log` with kExitInvalidInput.
int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& log);
/// CSV rows for every g <= config.genus and k <= 2g, both variants.
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_grid(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace strandfloer
