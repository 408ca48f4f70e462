#include "strandfloer/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "strandfloer/parallel.hpp"

namespace strandfloer {

StrandsAlgebra::StrandsAlgebra(PointedMatchedCircle pmc, int k, Variant variant, int threads)
    : pmc_(std::move(pmc)), k_(k), variant_(variant), idempotents_(strandfloer::idempotents(pmc_, k)) {
  const int n = num_idempotents();
  for (int s = 0; s < n; ++s) idempotent_lookup_[idempotents_[s].mask()] = s;

  std::vector<std::vector<MatchedGenerator>> blocks(static_cast<std::size_t>(n) * n);
  parallel_for(blocks.size(), threads, [&](std::size_t b) {
    blocks[b] = enumerate_hom(pmc_, idempotents_[b / n], idempotents_[b % n], variant_);
  });
  block_offsets_.push_back(0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto& g : blocks[b]) {
      generators_.push_back(std::move(g));
      source_.push_back(static_cast<int>(b / n));
      target_.push_back(static_cast<int>(b % n));
    }
    block_offsets_.push_back(static_cast<int>(generators_.size()));
  }
  for (int s = 0; s < n; ++s) {
    units_.push_back(*index_of(strandfloer::idempotent(pmc_, idempotents_[s])));
  }

  std::vector<std::vector<int>> rows(generators_.size());
  parallel_for(generators_.size(), threads, [&](std::size_t i) {
    rows[i] = indices_of(strandfloer::differential(pmc_, generators_[i]));
  });
  diff_offsets_.push_back(0);
  for (auto& r : rows) {
    diff_.insert(diff_.end(), r.begin(), r.end());
    diff_offsets_.push_back(static_cast<int>(diff_.size()));
  }
}

int StrandsAlgebra::idempotent_index(IdempotentClass s) const {
  auto it = idempotent_lookup_.find(s.mask());
  if (it == idempotent_lookup_.end()) throw std::out_of_range("idempotent not in this algebra");
  return it->second;
}

std::optional<int> StrandsAlgebra::index_of(const MatchedGenerator& gen) const {
  auto s = idempotent_lookup_.find(gen.source.mask());
  auto t = idempotent_lookup_.find(gen.target.mask());
  if (s == idempotent_lookup_.end() || t == idempotent_lookup_.end()) return std::nullopt;
  const auto first = generators_.begin() + block_begin(s->second, t->second);
  const auto last = generators_.begin() + block_end(s->second, t->second);
  auto it = std::lower_bound(first, last, gen);
  if (it == last || !(*it == gen)) return std::nullopt;
  return static_cast<int>(it - generators_.begin());
}

std::vector<int> StrandsAlgebra::indices_of(const GF2Sum<MatchedGenerator>& sum) const {
  std::vector<int> out;
  out.reserve(sum.size());
  for (const auto& g : sum) {
    auto idx = index_of(g);
    if (!idx) throw ClosureError(describe(g) + " lies outside the " + to_string(variant_) + " algebra");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int StrandsAlgebra::row_dim(int s) const {
  const int n = num_idempotents();
  return block_begin(s, n - 1) + dim(s, n - 1) - block_begin(s, 0);
}

std::vector<int> StrandsAlgebra::compute_product(int i, int j) const {
  if (target_[i] != source_[j]) return {};
  return indices_of(strandfloer::product(pmc_, generators_[i], generators_[j]));
}

std::vector<int> StrandsAlgebra::product(int i, int j) const {
  if (target_[i] != source_[j]) return {};
  if (!has_product_table()) return compute_product(i, j);
  const std::int32_t r = product_table_[product_offsets_[i] + (j - row_begin(source_[j]))];
  if (r < 0) return {};
  return {r};
}

void StrandsAlgebra::build_product_table(int threads) {
  if (has_product_table()) return;
  std::vector<std::size_t> offsets(generators_.size() + 1, 0);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    offsets[i + 1] = offsets[i] + row_dim(target_[i]);
  }
  std::vector<std::int32_t> table(offsets.back(), -1);
  parallel_for(generators_.size(), threads, [&](std::size_t i) {
    const int t = target_[i];
    for (int j = row_begin(t); j < row_end(t); ++j) {
      auto r = compute_product(static_cast<int>(i), j);
      if (r.size() > 1) {
        throw std::logic_error("product of two generators has more than one term: " +
                               describe(generators_[i]) + " * " + describe(generators_[j]));
      }
      if (!r.empty()) table[offsets[i] + (j - row_begin(t))] = r.front();
    }
  });
  product_offsets_ = std::move(offsets);
  product_table_ = std::move(table);
}

std::uint64_t StrandsAlgebra::composable_pairs() const {
  std::uint64_t total = 0;
  const int n = num_idempotents();
  for (int t = 0; t < n; ++t) {
    std::uint64_t into = 0;
    for (int s = 0; s < n; ++s) into += dim(s, t);
    total += into * static_cast<std::uint64_t>(row_dim(t));
  }
  return total;
}

}  // namespace strandfloer
