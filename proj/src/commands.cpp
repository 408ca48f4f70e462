#include "strandfloer/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "strandfloer/algebra.hpp"
#include "strandfloer/parallel.hpp"
#include "strandfloer/serialize.hpp"
#include "strandfloer/verify.hpp"

namespace strandfloer {

namespace {

// Product tables beyond this many composable pairs are left out of dumps.
constexpr std::uint64_t kProductDumpLimit = 5'000'000;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty() || config.out == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw InputError("cannot open '" + config.out + "' for writing");
  file << text;
  if (!file) throw InputError("failed writing '" + config.out + "'");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs a command body, mapping input errors to exit code 2 and anything
// unexpected to 1.
int guarded(std::ostream& log, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    log << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

Json meta_json(const RunConfig& config, const PointedMatchedCircle& pmc) {
  return Json{{"g", pmc.genus()},
              {"k", config.k},
              {"variant", to_string(config.variant)},
              {"matching", circle_to_json(pmc)}};
}

}  // namespace

PointedMatchedCircle resolve_circle(const RunConfig& config) {
  PointedMatchedCircle pmc = config.matching.empty()
                                 ? PointedMatchedCircle::standard(config.genus, config.circle_mode)
                                 : parse_matching(config.matching);
  const SurfaceInvariants inv = validate_surface(pmc);
  if (!inv.valid()) {
    throw std::invalid_argument("matching presents a surface with " +
                                std::to_string(inv.boundary_components) +
                                " boundary components (need 1)");
  }
  if (config.k < 0 || config.k > pmc.num_pairs()) {
    throw std::invalid_argument("k = " + std::to_string(config.k) + " outside 0.." +
                                std::to_string(pmc.num_pairs()));
  }
  return pmc;
}

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    const auto pmc = resolve_circle(config);
    const int threads = resolve_threads(config.threads);
    StrandsAlgebra alg(pmc, config.k, config.variant, threads);
    bool with_product = !config.no_product;
    if (with_product && alg.composable_pairs() > kProductDumpLimit) {
      log << "note: " << alg.composable_pairs() << " composable pairs; product table omitted\n";
      with_product = false;
    }
    if (with_product) alg.build_product_table(threads);
    emit(config, out, algebra_to_json(alg, with_product).dump(2) + "\n");
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    std::vector<std::string> suites;
    for (const auto& s : config.suites) {
      if (s.empty() || s == "none") continue;
      if (s == "all") {
        suites.insert(suites.end(), suite_names().begin(), suite_names().end());
      } else if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
        throw std::invalid_argument("unknown suite '" + s + "'");
      } else {
        suites.push_back(s);
      }
    }
    const auto pmc = resolve_circle(config);
    VerifyOptions opt;
    opt.threads = resolve_threads(config.threads);
    opt.seed = config.seed;
    opt.samples = config.samples;

    Json report;
    report["schema"] = kSchemaVersion;
    Json meta = meta_json(config, pmc);
    meta["seed"] = config.seed;
    meta["samples"] = config.samples;
    report["meta"] = meta;
    Json results = Json::array();
    bool passed = true;
    Json counterexample;

    if (!suites.empty()) {
      StrandsAlgebra alg(pmc, config.k, config.variant, opt.threads);
      if (alg.composable_pairs() <= opt.exhaustive_pairs) alg.build_product_table(opt.threads);
      for (const auto& name : suites) {
        const SuiteResult r = run_suite(name, alg, opt);
        log << name << ": " << to_string(r.status) << " (" << r.checked << " checks"
            << (r.sampled ? ", sampled" : "") << ", " << r.seconds << " s)\n";
        Json entry{{"name", r.name},
                   {"status", to_string(r.status)},
                   {"checked", r.checked},
                   {"sampled", r.sampled}};
        if (!r.detail.empty()) entry["detail"] = r.detail;
        results.push_back(std::move(entry));
        if (r.status == SuiteStatus::fail) {
          if (passed) counterexample = Json{{"suite", r.name}, {"detail", r.detail}};
          passed = false;
        }
      }
    }
    report["suites"] = results;
    report["passed"] = passed;
    if (!passed) report["counterexample"] = counterexample;
    emit(config, out, report.dump(2) + "\n");
    return passed ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    const auto pmc = resolve_circle(config);
    const StrandsAlgebra alg(pmc, config.k, config.variant, resolve_threads(config.threads));
    emit(config, out, algebra_to_dot(alg));
    return kExitOk;
  });
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    if (config.genus < 1) throw std::invalid_argument("genus must be at least 1");
    const int threads = resolve_threads(config.threads);
    std::ostringstream csv;
    csv << "g,k,variant,threads,generators,composable_pairs,enumerate_ms,build_ms,product_ms\n";
    for (int g = 1; g <= config.genus; ++g) {
      const auto pmc = PointedMatchedCircle::standard(g);
      for (int k = 0; k <= 2 * g; ++k) {
        for (Variant v : {Variant::full, Variant::half}) {
          auto t0 = std::chrono::steady_clock::now();
          const auto gens = enumerate_generators(pmc, k, v);
          const double enumerate_ms = ms_since(t0);
          t0 = std::chrono::steady_clock::now();
          StrandsAlgebra alg(pmc, k, v, threads);
          const double build_ms = ms_since(t0);
          std::string product_ms;
          if (alg.composable_pairs() <= kProductDumpLimit) {
            t0 = std::chrono::steady_clock::now();
            alg.build_product_table(threads);
            product_ms = std::to_string(ms_since(t0));
          }
          csv << g << ',' << k << ',' << to_string(v) << ',' << threads << ',' << gens.size() << ','
              << alg.composable_pairs() << ',' << enumerate_ms << ',' << build_ms << ','
              << product_ms << '\n';
          log << "bench g=" << g << " k=" << k << " " << to_string(v) << " done\n";
        }
      }
    }
    emit(config, out, csv.str());
    return kExitOk;
  });
}

int cmd_grid(const RunConfig& config, std::ostream& out, std::ostream& log) {
  return guarded(log, [&] {
    const auto pmc = resolve_circle(config);
    const GridSpec spec(pmc, config.mode.value_or(grid_mode_for(config.variant)));
    emit(config, out, grid_to_json(spec).dump(2) + "\n");
    return kExitOk;
  });
}

}  // namespace strandfloer
