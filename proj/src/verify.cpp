#include "strandfloer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "strandfloer/homalg.hpp"
#include "strandfloer/index.hpp"
#include "strandfloer/parallel.hpp"

namespace strandfloer {

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass:
      return "pass";
    case SuiteStatus::fail:
      return "fail";
    case SuiteStatus::skipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "d2",    "leibniz", "assoc",    "closure", "dictionary-diff", "dictionary-prod",
      "euler", "rigidity", "yoneda", "regression"};
  return names;
}

GridMode grid_mode_for(Variant v) { return v == Variant::full ? GridMode::wrapped : GridMode::half; }

std::uint64_t composable_triples(const StrandsAlgebra& alg) {
  const int n = alg.num_idempotents();
  std::vector<std::uint64_t> into(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) into[static_cast<std::size_t>(t)] += static_cast<std::uint64_t>(alg.dim(s, t));
  }
  std::uint64_t total = 0;
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      total += into[static_cast<std::size_t>(t)] * static_cast<std::uint64_t>(alg.dim(t, u)) *
               static_cast<std::uint64_t>(alg.row_dim(u));
    }
  }
  return total;
}

MatchedGenerator regression_input() {
  return make_generator(PointedMatchedCircle::standard(2), {{5, 8}}, {2});
}

MatchedGenerator regression_expected() {
  return make_generator(PointedMatchedCircle::standard(2), {{5, 6}, {6, 8}}, {});
}

namespace {

using Terms = std::vector<int>;

// Z/2 normal form of a list of generator indices.
Terms reduce(Terms v) {
  std::sort(v.begin(), v.end());
  Terms out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

void append(Terms& acc, const Terms& more) { acc.insert(acc.end(), more.begin(), more.end()); }
void append(Terms& acc, std::span<const int> more) { acc.insert(acc.end(), more.begin(), more.end()); }

std::string show(const StrandsAlgebra& alg, const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += (i ? " + " : "") + describe(alg.generator(terms[i]));
  }
  return out;
}

struct Slot {
  std::uint64_t checks = 0;
  std::string failure;
};

// Per-index results merged in index order, so the reported counterexample
// does not depend on scheduling.
struct Collector {
  std::vector<Slot> slots;
  explicit Collector(std::size_t n) : slots(n) {}

  void finish(SuiteResult& r) const {
    for (const Slot& s : slots) {
      r.checked += s.checks;
      if (r.status != SuiteStatus::fail && !s.failure.empty()) {
        r.status = SuiteStatus::fail;
        r.detail = s.failure;
      }
    }
  }
};

using PairCheck = std::function<std::string(int, int)>;
using TripleCheck = std::function<std::string(int, int, int)>;

int random_in_row(const StrandsAlgebra& alg, int idem, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(alg.row_begin(idem), alg.row_end(idem) - 1);
  return pick(rng);
}

void over_pairs(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r,
                const PairCheck& check) {
  const int n = static_cast<int>(alg.size());
  if (alg.composable_pairs() <= opt.exhaustive_pairs) {
    Collector c(alg.size());
    parallel_for(alg.size(), opt.threads, [&](std::size_t i) {
      Slot& slot = c.slots[i];
      const int t = alg.target(static_cast<int>(i));
      for (int j = alg.row_begin(t); j < alg.row_end(t); ++j) {
        ++slot.checks;
        if (slot.failure.empty()) slot.failure = check(static_cast<int>(i), j);
      }
    });
    c.finish(r);
    return;
  }
  r.sampled = true;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> first(0, n - 1);
  std::vector<std::pair<int, int>> pairs(opt.samples);
  for (auto& [i, j] : pairs) {
    i = first(rng);
    j = random_in_row(alg, alg.target(i), rng);
  }
  Collector c(pairs.size());
  parallel_for(pairs.size(), opt.threads, [&](std::size_t s) {
    c.slots[s].checks = 1;
    c.slots[s].failure = check(pairs[s].first, pairs[s].second);
  });
  c.finish(r);
}

void over_triples(const StrandsAlgebra& alg, const VerifyOptions& opt, std::uint64_t limit,
                  SuiteResult& r, const TripleCheck& check) {
  const int n = static_cast<int>(alg.size());
  if (composable_triples(alg) <= limit) {
    Collector c(alg.size());
    parallel_for(alg.size(), opt.threads, [&](std::size_t i) {
      Slot& slot = c.slots[i];
      const int t = alg.target(static_cast<int>(i));
      for (int j = alg.row_begin(t); j < alg.row_end(t); ++j) {
        const int u = alg.target(j);
        for (int l = alg.row_begin(u); l < alg.row_end(u); ++l) {
          ++slot.checks;
          if (slot.failure.empty()) slot.failure = check(static_cast<int>(i), j, l);
        }
      }
    });
    c.finish(r);
    return;
  }
  r.sampled = true;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> first(0, n - 1);
  std::vector<std::array<int, 3>> triples(opt.samples);
  for (auto& tr : triples) {
    tr[0] = first(rng);
    tr[1] = random_in_row(alg, alg.target(tr[0]), rng);
    tr[2] = random_in_row(alg, alg.target(tr[1]), rng);
  }
  Collector c(triples.size());
  parallel_for(triples.size(), opt.threads, [&](std::size_t s) {
    c.slots[s].checks = 1;
    c.slots[s].failure = check(triples[s][0], triples[s][1], triples[s][2]);
  });
  c.finish(r);
}

void over_generators(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r,
                     const std::function<std::string(int, Slot&)>& check) {
  Collector c(alg.size());
  parallel_for(alg.size(), opt.threads, [&](std::size_t i) {
    c.slots[i].failure = check(static_cast<int>(i), c.slots[i]);
  });
  c.finish(r);
}

void suite_d2(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  over_generators(alg, opt, r, [&](int i, Slot& slot) -> std::string {
    ++slot.checks;
    Terms dd;
    for (int j : alg.differential(i)) append(dd, alg.differential(j));
    dd = reduce(std::move(dd));
    if (dd.empty()) return {};
    return "d(d(" + describe(alg.generator(i)) + ")) = " + show(alg, dd);
  });
}

void suite_leibniz(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  over_pairs(alg, opt, r, [&](int i, int j) -> std::string {
    Terms lhs;
    for (int p : alg.product(i, j)) append(lhs, alg.differential(p));
    Terms rhs;
    for (int d : alg.differential(i)) append(rhs, alg.product(d, j));
    for (int d : alg.differential(j)) append(rhs, alg.product(i, d));
    lhs = reduce(std::move(lhs));
    rhs = reduce(std::move(rhs));
    if (lhs == rhs) return {};
    return "Leibniz fails for " + describe(alg.generator(i)) + " * " + describe(alg.generator(j)) +
           ": " + show(alg, lhs) + " vs " + show(alg, rhs);
  });
}

void suite_assoc(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  over_triples(alg, opt, opt.exhaustive_triples, r, [&](int i, int j, int l) -> std::string {
    Terms left;
    for (int p : alg.product(i, j)) append(left, alg.product(p, l));
    Terms right;
    for (int p : alg.product(j, l)) append(right, alg.product(i, p));
    left = reduce(std::move(left));
    right = reduce(std::move(right));
    if (left == right) return {};
    return "associativity fails for " + describe(alg.generator(i)) + ", " +
           describe(alg.generator(j)) + ", " + describe(alg.generator(l));
  });
}

std::string closed(const StrandsAlgebra& alg, const GF2Sum<MatchedGenerator>& sum, const std::string& what) {
  for (const auto& g : sum) {
    if (!in_variant(alg.circle(), g, alg.variant()) || !alg.index_of(g)) {
      return what + " produces " + describe(g) + " outside the algebra";
    }
  }
  return {};
}

void suite_closure(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  const auto& pmc = alg.circle();
  over_generators(alg, opt, r, [&](int i, Slot& slot) -> std::string {
    const MatchedGenerator& x = alg.generator(i);
    slot.checks += 2;
    try {
      const auto back = recognize(pmc, section_expand(pmc, x));
      if (!(back == GF2Sum<MatchedGenerator>(x))) return "section round trip fails for " + describe(x);
      return closed(alg, differential(pmc, x), "d(" + describe(x) + ")");
    } catch (const ClosureError& e) {
      return std::string("ClosureError: ") + e.what();
    }
  });
  if (r.status == SuiteStatus::fail) return;
  over_pairs(alg, opt, r, [&](int i, int j) -> std::string {
    try {
      return closed(alg, product(pmc, alg.generator(i), alg.generator(j)),
                    describe(alg.generator(i)) + " * " + describe(alg.generator(j)));
    } catch (const ClosureError& e) {
      return std::string("ClosureError: ") + e.what();
    }
  });
}

GF2Sum<MatchedGenerator> translate(const GridSpec& spec, const GF2Sum<FloerGenerator>& sum) {
  GF2Sum<MatchedGenerator> out;
  for (const auto& y : sum) out.toggle(to_algebra(spec, y));
  return out;
}

GF2Sum<MatchedGenerator> lookup(const StrandsAlgebra& alg, std::span<const int> terms) {
  GF2Sum<MatchedGenerator> out;
  for (int j : terms) out.toggle(alg.generator(j));
  return out;
}

std::string show(const GF2Sum<MatchedGenerator>& sum) {
  if (sum.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& g : sum) {
    out += (first ? "" : " + ") + describe(g);
    first = false;
  }
  return out;
}

void suite_dictionary_diff(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  const GridSpec spec(alg.circle(), grid_mode_for(alg.variant()));
  // Generator counts per idempotent pair.
  const int n = alg.num_idempotents();
  for (int s = 0; s < n && r.status != SuiteStatus::fail; ++s) {
    for (int t = 0; t < n; ++t) {
      ++r.checked;
      const auto grid = enumerate_floer_generators(spec, alg.idempotents()[s], alg.idempotents()[t]);
      if (static_cast<int>(grid.size()) != alg.dim(s, t)) {
        r.status = SuiteStatus::fail;
        r.detail = "hom(" + std::to_string(s) + "," + std::to_string(t) + ") has " +
                   std::to_string(grid.size()) + " grid generators but dimension " +
                   std::to_string(alg.dim(s, t));
        return;
      }
    }
  }
  over_generators(alg, opt, r, [&](int i, Slot& slot) -> std::string {
    slot.checks += 3;
    const MatchedGenerator& gen = alg.generator(i);
    const FloerGenerator x = from_algebra(spec, gen);
    if (!(to_algebra(spec, x) == gen)) return "dictionary round trip fails for " + describe(gen);
    const auto dx = floer_differential(spec, x);
    const auto grid_side = translate(spec, dx);
    const auto alg_side = lookup(alg, alg.differential(i));
    if (!(grid_side == alg_side)) {
      return "differential of " + describe(gen) + ": rectangles give " + show(grid_side) +
             ", strands give " + show(alg_side);
    }
    GF2Sum<FloerGenerator> ddx;
    for (const auto& y : dx) ddx += floer_differential(spec, y);
    if (!ddx.empty()) return "rectangle differential squares to nonzero on " + describe(x);
    return {};
  });
}

void suite_dictionary_prod(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  const GridSpec spec(alg.circle(), grid_mode_for(alg.variant()));
  over_pairs(alg, opt, r, [&](int i, int j) -> std::string {
    const auto grid_side = translate(
        spec, floer_product(spec, from_algebra(spec, alg.generator(i)), from_algebra(spec, alg.generator(j))));
    const auto p = alg.product(i, j);
    const auto alg_side = lookup(alg, p);
    if (grid_side == alg_side) return {};
    return "product " + describe(alg.generator(i)) + " * " + describe(alg.generator(j)) +
           ": triangles give " + show(grid_side) + ", strands give " + show(alg_side);
  });
}

void suite_euler(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  const GridSpec spec(alg.circle(), grid_mode_for(alg.variant()));
  const int k = alg.k();
  over_generators(alg, opt, r, [&](int i, Slot& slot) -> std::string {
    const FloerGenerator x = from_algebra(spec, alg.generator(i));
    for (const auto& term : empty_rectangles(spec, x)) {
      ++slot.checks;
      const Domain d = rectangle_domain(spec, x, term.rectangle);
      if (euler_measure(d) != Quarters{} || d.diag_intersections != 0) {
        return "counted rectangle on " + describe(x) + " has e = " + euler_measure(d).str() +
               ", i = " + std::to_string(d.diag_intersections);
      }
    }
    return {};
  });
  if (r.status == SuiteStatus::fail) return;
  over_pairs(alg, opt, r, [&](int i, int j) -> std::string {
    const FloerGenerator x = from_algebra(spec, alg.generator(i));
    const FloerGenerator y = from_algebra(spec, alg.generator(j));
    const auto tuple = triangle_tuple(spec, x, y);
    if (!tuple) return {};
    const Domain d = product_domain(spec, *tuple);
    const bool counted = !floer_product(spec, x, y).empty();
    const Quarters e = euler_measure(d);
    const Quarters mu = maslov(d);
    if (e != Quarters::of(k, 4)) return "product domain of " + describe(x) + " * " + describe(y) + " has e = " + e.str();
    if (counted && (d.diag_intersections != 0 || mu != Quarters{})) {
      return "counted product " + describe(x) + " * " + describe(y) + " has mu = " + mu.str();
    }
    if (!counted && mu <= Quarters{}) {
      return "uncounted product " + describe(x) + " * " + describe(y) + " has mu = " + mu.str();
    }
    return {};
  });
}

void suite_rigidity(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  const GridSpec spec(alg.circle(), grid_mode_for(alg.variant()));
  if (opt.rigidity_ell_max == 3 && composable_triples(alg) > opt.exhaustive_triples / 10) {
    // Sampled chains of length 3 with a counted first product.
    r.sampled = true;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> first(0, static_cast<int>(alg.size()) - 1);
    std::vector<std::vector<int>> chains;
    while (chains.size() < opt.samples) {
      const int i = first(rng);
      const int j = random_in_row(alg, alg.target(i), rng);
      if (alg.product(i, j).empty()) {
        chains.push_back({i, j});
        continue;
      }
      chains.push_back({i, j, random_in_row(alg, alg.target(j), rng)});
    }
    Collector c(chains.size());
    parallel_for(chains.size(), opt.threads, [&](std::size_t s) {
      std::vector<FloerGenerator> chain;
      for (int g : chains[s]) chain.push_back(from_algebra(spec, alg.generator(g)));
      const ChainCheck check = check_chain(spec, chain);
      c.slots[s].checks = check.domain ? 1 : 0;
      c.slots[s].failure = check.violation;
    });
    c.finish(r);
    return;
  }
  const RigidityReport report = verify_rigidity(spec, alg.k(), opt.rigidity_ell_max, opt.threads);
  r.checked = report.checked;
  if (!report.ok()) {
    r.status = SuiteStatus::fail;
    r.detail = report.violations.front();
  }
}

void suite_yoneda(const StrandsAlgebra& alg, const VerifyOptions& opt, SuiteResult& r) {
  if (alg.size() > opt.yoneda_max_generators) {
    r.status = SuiteStatus::skipped;
    r.detail = "algebra has " + std::to_string(alg.size()) + " generators (limit " +
               std::to_string(opt.yoneda_max_generators) + ")";
    return;
  }
  const int n = alg.num_idempotents();
  std::vector<RightDGModule> modules;
  for (int s = 0; s < n; ++s) {
    modules.push_back(projective_module(alg, s));
    ++r.checked;
    const AxiomReport axioms = verify_module_axioms(modules.back());
    if (!axioms.ok()) {
      r.status = SuiteStatus::fail;
      r.detail = "projective module " + std::to_string(s) + ": " + axioms.failures.front();
      return;
    }
  }
  Collector c(static_cast<std::size_t>(n) * n);
  parallel_for(c.slots.size(), opt.threads, [&](std::size_t idx) {
    const int s = static_cast<int>(idx) / n;
    const int t = static_cast<int>(idx) % n;
    const std::size_t mor = homology_rank(mor_complex(modules[s], modules[t]).complex);
    const std::size_t direct = homology_rank(hom_complex(alg, t, s));
    c.slots[idx].checks = 1;
    if (mor != direct) {
      c.slots[idx].failure = "H Mor(e_" + std::to_string(s) + " A, e_" + std::to_string(t) +
                             " A) has rank " + std::to_string(mor) + " but H(e_" + std::to_string(t) +
                             " A e_" + std::to_string(s) + ") has rank " + std::to_string(direct);
    }
  });
  c.finish(r);
}

void suite_regression(const StrandsAlgebra& alg, const VerifyOptions&, SuiteResult& r) {
  if (!(alg.circle().pairs() == PointedMatchedCircle::standard(2).pairs()) || alg.k() != 2) {
    r.status = SuiteStatus::skipped;
    r.detail = "only defined for the standard genus-2 circle with k = 2";
    return;
  }
  r.checked = 1;
  const auto x = alg.index_of(regression_input());
  const auto want = GF2Sum<MatchedGenerator>(regression_expected());
  if (!x) {
    r.status = SuiteStatus::fail;
    r.detail = describe(regression_input()) + " missing from the algebra";
    return;
  }
  const auto got = lookup(alg, alg.differential(*x));
  if (!(got == want)) {
    r.status = SuiteStatus::fail;
    r.detail = "d" + describe(regression_input()) + " = " + show(got) + ", expected " + show(want);
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, const StrandsAlgebra& alg, const VerifyOptions& opt) {
  static const std::vector<std::pair<std::string, void (*)(const StrandsAlgebra&, const VerifyOptions&, SuiteResult&)>>
      table{{"d2", suite_d2},
            {"leibniz", suite_leibniz},
            {"assoc", suite_assoc},
            {"closure", suite_closure},
            {"dictionary-diff", suite_dictionary_diff},
            {"dictionary-prod", suite_dictionary_prod},
            {"euler", suite_euler},
            {"rigidity", suite_rigidity},
            {"yoneda", suite_yoneda},
            {"regression", suite_regression}};
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
  if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  it->second(alg, opt, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace strandfloer
