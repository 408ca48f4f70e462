#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strandfloer/algebra.hpp"
#include "strandfloer/linalg.hpp"

namespace strandfloer {

struct ChainComplex {
  std::vector<std::string> labels;
  BooleanMatrix d;

  std::size_t dim() const { return d.cols(); }
};

/// dim ker d - rank d. Throws std::logic_error when d does not square to zero.
std::size_t homology_rank(const ChainComplex& c);

/// hom(s, t) of the algebra with its differential.
ChainComplex hom_complex(const StrandsAlgebra& alg, int s, int t);

/// Strict right dg-module over a StrandsAlgebra. Each basis vector x is
/// homogeneous: x = x e_t for t = idempotent[x]. act(a) is the matrix of
/// x -> m(x, a) for generator index a.
class RightDGModule {
 public:
  RightDGModule(const StrandsAlgebra& alg, std::vector<std::string> labels,
                std::vector<int> idempotent, BooleanMatrix d, std::vector<BooleanMatrix> actions);

  const StrandsAlgebra& algebra() const { return *alg_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  int idempotent(std::size_t x) const { return idempotent_[x]; }
  const BooleanMatrix& d() const { return d_; }
  const BooleanMatrix& act(int a) const { return actions_[static_cast<std::size_t>(a)]; }

  /// Sorted support of m(x, a) for a basis vector x.
  const std::vector<int>& act(std::size_t x, int a) const {
    return transposed_[static_cast<std::size_t>(a)].row(x);
  }
  /// m(v, a) for an arbitrary vector v.
  BitVector act(const BitVector& v, int a) const { return act(a).apply(v); }

  ChainComplex complex() const { return {labels_, d_}; }

 private:
  const StrandsAlgebra* alg_;
  std::vector<std::string> labels_;
  std::vector<int> idempotent_;
  BooleanMatrix d_;
  std::vector<BooleanMatrix> actions_;
  std::vector<BooleanMatrix> transposed_;
};

/// e_s A: generators with source s, acted on by right multiplication.
RightDGModule projective_module(const StrandsAlgebra& alg, int s);

/// One-dimensional module at idempotent s; only e_s acts nontrivially.
RightDGModule simple_module(const StrandsAlgebra& alg, int s);

struct AxiomReport {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;  // first few

  bool ok() const { return failures.empty(); }
};

/// d^2 = 0, unit decomposition, associativity and the Leibniz rule, on
/// every basis vector and every (pair of) algebra generators.
AxiomReport verify_module_axioms(const RightDGModule& m);

/// A-linear maps M -> N with D f = d_N f + f d_M, on the basis obtained by
/// presenting M by generators and relations.
struct MorComplex {
  std::size_t module_generators = 0;
  std::size_t relations = 0;
  ChainComplex complex;
};

/// Throws std::invalid_argument when the modules live over different algebras.
MorComplex mor_complex(const RightDGModule& m, const RightDGModule& n);

struct YonedaResult {
  std::size_t mor_rank = 0;
  std::size_t algebra_rank = 0;

  bool ok() const { return mor_rank == algebra_rank; }
};

/// Homology of Mor(e_s A, e_t A) against the homology of e_t A e_s, which with
/// left-to-right composition is the block hom(t, s).
YonedaResult yoneda_check(const StrandsAlgebra& alg, int s, int t);

}  // namespace strandfloer
