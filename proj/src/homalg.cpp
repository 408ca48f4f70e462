#include "strandfloer/homalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace strandfloer {

std::size_t homology_rank(const ChainComplex& c) {
  if (c.d.rows() != c.d.cols()) throw std::invalid_argument("differential must be square");
  if (!(c.d * c.d).is_zero()) throw std::logic_error("differential does not square to zero");
  return c.dim() - 2 * rank(c.d);
}

ChainComplex hom_complex(const StrandsAlgebra& alg, int s, int t) {
  const int begin = alg.block_begin(s, t);
  const int end = alg.block_end(s, t);
  ChainComplex c;
  std::vector<std::vector<int>> columns;
  for (int i = begin; i < end; ++i) {
    c.labels.push_back(describe(alg.generator(i)));
    std::vector<int> col;
    for (int j : alg.differential(i)) col.push_back(j - begin);
    columns.push_back(std::move(col));
  }
  c.d = BooleanMatrix::from_columns(static_cast<std::size_t>(end - begin), columns);
  return c;
}

RightDGModule::RightDGModule(const StrandsAlgebra& alg, std::vector<std::string> labels,
                             std::vector<int> idempotent, BooleanMatrix d,
                             std::vector<BooleanMatrix> actions)
    : alg_(&alg),
      labels_(std::move(labels)),
      idempotent_(std::move(idempotent)),
      d_(std::move(d)),
      actions_(std::move(actions)) {
  const std::size_t n = labels_.size();
  if (idempotent_.size() != n || d_.rows() != n || d_.cols() != n) {
    throw std::invalid_argument("module data has inconsistent dimensions");
  }
  if (actions_.size() != alg.size()) {
    throw std::invalid_argument("module needs one action matrix per algebra generator");
  }
  transposed_.reserve(actions_.size());
  for (const auto& a : actions_) {
    if (a.rows() != n || a.cols() != n) throw std::invalid_argument("action matrix has wrong shape");
    transposed_.push_back(a.transpose());
  }
}

RightDGModule projective_module(const StrandsAlgebra& alg, int s) {
  const int begin = alg.row_begin(s);
  const int end = alg.row_end(s);
  const auto dim = static_cast<std::size_t>(end - begin);
  std::vector<std::string> labels;
  std::vector<int> idem;
  std::vector<std::vector<int>> dcols;
  for (int x = begin; x < end; ++x) {
    labels.push_back(describe(alg.generator(x)));
    idem.push_back(alg.target(x));
    std::vector<int> col;
    for (int j : alg.differential(x)) col.push_back(j - begin);
    dcols.push_back(std::move(col));
  }
  std::vector<BooleanMatrix> actions;
  actions.reserve(alg.size());
  for (int a = 0; a < static_cast<int>(alg.size()); ++a) {
    std::vector<std::vector<int>> cols(dim);
    for (int x = begin; x < end; ++x) {
      if (alg.target(x) != alg.source(a)) continue;
      for (int j : alg.product(x, a)) cols[static_cast<std::size_t>(x - begin)].push_back(j - begin);
    }
    actions.push_back(BooleanMatrix::from_columns(dim, cols));
  }
  return RightDGModule(alg, std::move(labels), std::move(idem),
                       BooleanMatrix::from_columns(dim, dcols), std::move(actions));
}

RightDGModule simple_module(const StrandsAlgebra& alg, int s) {
  std::vector<BooleanMatrix> actions(alg.size(), BooleanMatrix(1, 1));
  actions[static_cast<std::size_t>(alg.unit(s))] = BooleanMatrix::identity(1);
  return RightDGModule(alg, {"S" + std::to_string(s)}, {s}, BooleanMatrix(1, 1), std::move(actions));
}

AxiomReport verify_module_axioms(const RightDGModule& m) {
  const StrandsAlgebra& alg = m.algebra();
  AxiomReport report;
  auto fail = [&](std::string what) {
    if (report.failures.size() < 8) report.failures.push_back(std::move(what));
  };
  const std::size_t n = m.dim();
  const int gens = static_cast<int>(alg.size());

  ++report.checked;
  if (!(m.d() * m.d()).is_zero()) fail("module differential does not square to zero");

  auto act_vec = [&](const BitVector& v, int a) {
    BitVector out(n);
    for (std::size_t x = v.first_set(); x < n; x = v.next_set(x + 1)) {
      for (int y : m.act(x, a)) out.flip(static_cast<std::size_t>(y));
    }
    return out;
  };

  for (std::size_t x = 0; x < n; ++x) {
    const BitVector ex = BitVector::unit(n, x);
    for (int u = 0; u < alg.num_idempotents(); ++u) {
      ++report.checked;
      const BitVector got = act_vec(ex, alg.unit(u));
      const BitVector want = u == m.idempotent(x) ? ex : BitVector(n);
      if (got != want) fail("unit e_" + std::to_string(u) + " acts wrongly on " + m.labels()[x]);
    }
    const BitVector dx = m.d().apply(ex);
    for (int a = 0; a < gens; ++a) {
      const BitVector xa = BitVector::from_indices(n, m.act(x, a));
      if (alg.source(a) != m.idempotent(x)) {
        ++report.checked;
        if (xa.any()) fail(m.labels()[x] + " is not annihilated by " + describe(alg.generator(a)));
        continue;
      }
      // Leibniz
      ++report.checked;
      BitVector rhs = act_vec(dx, a);
      for (int c : alg.differential(a)) rhs ^= act_vec(ex, c);
      if (m.d().apply(xa) != rhs) {
        fail("Leibniz fails for " + m.labels()[x] + " and " + describe(alg.generator(a)));
      }
      // associativity
      const int t = alg.target(a);
      for (int b = alg.row_begin(t); b < alg.row_end(t); ++b) {
        ++report.checked;
        BitVector joint(n);
        for (int c : alg.product(a, b)) joint ^= act_vec(ex, c);
        if (act_vec(xa, b) != joint) {
          fail("associativity fails for " + m.labels()[x] + ", " + describe(alg.generator(a)) +
               ", " + describe(alg.generator(b)));
        }
      }
    }
  }
  return report;
}

namespace {

// Adds x A to the span (tags unused).
void add_cyclic_span(const RightDGModule& m, std::size_t x, EchelonBasis& basis) {
  const StrandsAlgebra& alg = m.algebra();
  const int t = m.idempotent(x);
  for (int a = alg.row_begin(t); a < alg.row_end(t); ++a) {
    basis.insert(BitVector::from_indices(m.dim(), m.act(x, a)), std::size_t{0});
  }
}

}  // namespace

MorComplex mor_complex(const RightDGModule& m, const RightDGModule& n) {
  if (&m.algebra() != &n.algebra()) throw std::invalid_argument("modules over different algebras");
  const StrandsAlgebra& alg = m.algebra();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();

  // Choose module generators greedily, largest cyclic submodule first.
  std::vector<std::pair<std::size_t, std::size_t>> by_span;
  for (std::size_t x = 0; x < dm; ++x) {
    EchelonBasis span(dm, 1);
    add_cyclic_span(m, x, span);
    by_span.emplace_back(span.rank(), x);
  }
  std::stable_sort(by_span.begin(), by_span.end(),
                   [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<std::size_t> gens;
  {
    EchelonBasis covered(dm, 1);
    for (const auto& [size, x] : by_span) {
      if (covered.rank() == dm) break;
      if (covered.contains(BitVector::unit(dm, x))) continue;
      gens.push_back(x);
      add_cyclic_span(m, x, covered);
    }
  }

  // Free module on the generators: basis pairs (generator, algebra element).
  struct FreeBasis {
    std::size_t gen;
    int a;
  };
  std::vector<FreeBasis> free;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int t = m.idempotent(gens[i]);
    for (int a = alg.row_begin(t); a < alg.row_end(t); ++a) free.push_back({i, a});
  }
  std::vector<std::vector<int>> psi_cols;
  EchelonBasis image(dm, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    psi_cols.push_back(m.act(gens[free[f].gen], free[f].a));
    image.insert(BitVector::from_indices(dm, psi_cols.back()), f);
  }
  if (image.rank() != dm) throw std::logic_error("chosen elements do not generate the module");
  const auto relations = nullspace(BooleanMatrix::from_columns(dm, psi_cols));

  // Unknowns: the value of f on generator i, a vector of N e_{t_i}.
  std::vector<std::vector<int>> unknowns(gens.size());
  std::vector<std::pair<std::size_t, int>> unknown_at;  // (generator, basis vector of N)
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t y = 0; y < dn; ++y) {
      if (n.idempotent(y) == m.idempotent(gens[i])) {
        unknowns[i].push_back(static_cast<int>(unknown_at.size()));
        unknown_at.emplace_back(i, static_cast<int>(y));
      }
    }
  }
  const std::size_t u_dim = unknown_at.size();

  // f applied to a combination of free basis elements.
  auto evaluate = [&](const BitVector& f, const BitVector& combo) {
    BitVector out(dn);
    for (std::size_t c = combo.first_set(); c < free.size(); c = combo.next_set(c + 1)) {
      for (int u : unknowns[free[c].gen]) {
        if (!f.get(static_cast<std::size_t>(u))) continue;
        for (int z : n.act(static_cast<std::size_t>(unknown_at[static_cast<std::size_t>(u)].second),
                           free[c].a)) {
          out.flip(static_cast<std::size_t>(z));
        }
      }
    }
    return out;
  };

  // A-linearity: every relation must map to zero.
  std::vector<std::vector<int>> constraint_cols(u_dim);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (std::size_t u = 0; u < u_dim; ++u) {
      const BitVector value = evaluate(BitVector::unit(u_dim, u), relations[r]);
      for (int z : value.indices()) {
        constraint_cols[u].push_back(static_cast<int>(r * dn) + z);
      }
    }
  }
  const auto homs = nullspace(BooleanMatrix::from_columns(relations.size() * dn, constraint_cols));

  EchelonBasis hom_basis(u_dim, homs.size());
  for (std::size_t h = 0; h < homs.size(); ++h) hom_basis.insert(homs[h], h);

  std::vector<std::optional<BitVector>> lifts_of_d;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    lifts_of_d.push_back(image.express(m.d().apply(BitVector::unit(dm, gens[i]))));
  }

  std::vector<std::vector<int>> dcols;
  for (const BitVector& f : homs) {
    BitVector df(u_dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      BitVector value(dn);
      for (int u : unknowns[i]) {
        if (f.get(static_cast<std::size_t>(u))) {
          value.flip(static_cast<std::size_t>(unknown_at[static_cast<std::size_t>(u)].second));
        }
      }
      value = n.d().apply(value);
      value ^= evaluate(f, *lifts_of_d[i]);
      for (int u : unknowns[i]) {
        const auto y = static_cast<std::size_t>(unknown_at[static_cast<std::size_t>(u)].second);
        if (value.get(y)) {
          df.set(static_cast<std::size_t>(u));
          value.flip(y);
        }
      }
      if (value.any()) throw std::logic_error("D f leaves the idempotent summand");
    }
    auto coords = hom_basis.express(df);
    if (!coords) throw std::logic_error("D f is not A-linear");
    dcols.push_back(coords->indices());
  }

  MorComplex out;
  out.module_generators = gens.size();
  out.relations = relations.size();
  for (std::size_t h = 0; h < homs.size(); ++h) out.complex.labels.push_back("f" + std::to_string(h));
  out.complex.d = BooleanMatrix::from_columns(homs.size(), dcols);
  if (!(out.complex.d * out.complex.d).is_zero()) throw std::logic_error("D does not square to zero");
  return out;
}

YonedaResult yoneda_check(const StrandsAlgebra& alg, int s, int t) {
  const auto ps = projective_module(alg, s);
  const auto pt = projective_module(alg, t);
  YonedaResult r;
  r.mor_rank = homology_rank(mor_complex(ps, pt).complex);
  r.algebra_rank = homology_rank(hom_complex(alg, t, s));
  return r;
}

}  // namespace strandfloer
