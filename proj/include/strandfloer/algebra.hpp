#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "strandfloer/circle.hpp"
#include "strandfloer/strands.hpp"

namespace strandfloer {

/// The strands algebra for one (circle, k, variant), built eagerly into a
/// dense index. Generators are ordered by (source, target) in idempotent
/// order and then by items, so every hom(s, t) is a contiguous index range.
///
/// The differential is tabulated at construction. Products are computed on
/// demand, or tabulated by build_product_table() when the algebra is small.
class StrandsAlgebra {
 public:
  StrandsAlgebra(PointedMatchedCircle pmc, int k, Variant variant, int threads = 1);

  const PointedMatchedCircle& circle() const { return pmc_; }
  int k() const { return k_; }
  Variant variant() const { return variant_; }

  const std::vector<IdempotentClass>& idempotents() const { return idempotents_; }
  int num_idempotents() const { return static_cast<int>(idempotents_.size()); }
  int idempotent_index(IdempotentClass s) const;

  std::size_t size() const { return generators_.size(); }
  const MatchedGenerator& generator(int i) const { return generators_[i]; }
  const std::vector<MatchedGenerator>& generators() const { return generators_; }
  std::optional<int> index_of(const MatchedGenerator& gen) const;
  /// Throws ClosureError when some term lies outside this algebra.
  std::vector<int> indices_of(const GF2Sum<MatchedGenerator>& sum) const;

  int source(int i) const { return source_[i]; }
  int target(int i) const { return target_[i]; }

  /// Index range [begin, end) of hom(s, t), by idempotent index.
  int block_begin(int s, int t) const { return block_offsets_[s * num_idempotents() + t]; }
  int block_end(int s, int t) const { return block_offsets_[s * num_idempotents() + t + 1]; }
  int dim(int s, int t) const { return block_end(s, t) - block_begin(s, t); }
  /// Index range of all generators with source s.
  int row_begin(int s) const { return block_begin(s, 0); }
  int row_end(int s) const { return block_begin(s, 0) + row_dim(s); }
  int row_dim(int s) const;

  /// Index of the idempotent e_s.
  int unit(int s) const { return units_[s]; }

  /// Sorted indices of the terms of the differential.
  std::span<const int> differential(int i) const {
    return {diff_.data() + diff_offsets_[i], diff_.data() + diff_offsets_[i + 1]};
  }

  /// Sorted indices of the terms of gen(i) * gen(j) (empty when not composable).
  std::vector<int> product(int i, int j) const;

  void build_product_table(int threads = 1);
  bool has_product_table() const { return !product_offsets_.empty(); }

  /// Number of composable ordered pairs, sum over s,t,u of dim(s,t) dim(t,u).
  std::uint64_t composable_pairs() const;

 private:
  std::vector<int> compute_product(int i, int j) const;

  PointedMatchedCircle pmc_;
  int k_;
  Variant variant_;
  std::vector<IdempotentClass> idempotents_;
  std::vector<MatchedGenerator> generators_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<int> block_offsets_;
  std::vector<int> units_;
  std::unordered_map<std::uint32_t, int> idempotent_lookup_;
  std::vector<int> diff_;
  std::vector<int> diff_offsets_;
  // product table: for generator i with target t, entry (i, j - row_begin(t))
  std::vector<std::size_t> product_offsets_;
  std::vector<std::int32_t> product_table_;
};

}  // namespace strandfloer
