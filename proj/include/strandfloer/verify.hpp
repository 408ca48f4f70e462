#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strandfloer/algebra.hpp"
#include "strandfloer/grid.hpp"

namespace strandfloer {

struct VerifyOptions {
  int threads = 1;
  std::uint64_t seed = 0;
  /// Sample size used when a suite is too large to run exhaustively.
  std::uint64_t samples = 100000;
  /// Pair and triple counts up to which loops run exhaustively.
  std::uint64_t exhaustive_pairs = 20'000'000;
  std::uint64_t exhaustive_triples = 50'000'000;
  /// Largest algebra on which the module suite builds projective modules.
  std::size_t yoneda_max_generators = 4000;
  int rigidity_ell_max = 3;
};

enum class SuiteStatus { pass, fail, skipped };
std::string to_string(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::uint64_t checked = 0;
  bool sampled = false;
  std::string detail;  // first counterexample, or the reason for skipping
  double seconds = 0;
};

/// d2, leibniz, assoc, closure, dictionary-diff, dictionary-prod, euler,
/// rigidity, yoneda, regression.
const std::vector<std::string>& suite_names();

/// Grid mode matching the variant: full -> wrapped, half -> half.
GridMode grid_mode_for(Variant v);

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const StrandsAlgebra& alg, const VerifyOptions& opt);

/// Number of composable triples (x, y, z) in the algebra.
std::uint64_t composable_triples(const StrandsAlgebra& alg);

/// The generator with chord (5,8) and dotted pair 2 on the standard genus-2
/// circle, and the expected two-chord boundary.
MatchedGenerator regression_input();
MatchedGenerator regression_expected();

}  // namespace strandfloer
