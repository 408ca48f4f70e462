#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <utility>
#include <vector>

namespace strandfloer {

/// Formal sum with coefficients in Z/2 over a totally ordered basis type.
///
/// The support is kept sorted and duplicate-free, so two sums compare equal
/// exactly when they are equal as elements of the vector space.
template <typename B>
class GF2Sum {
 public:
  GF2Sum() = default;
  explicit GF2Sum(B term) { terms_.push_back(std::move(term)); }
  GF2Sum(std::initializer_list<B> terms) : GF2Sum(std::vector<B>(terms)) {}

  /// Builds a sum from arbitrary terms; repeated terms cancel in pairs.
  explicit GF2Sum(std::vector<B> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    std::vector<B> kept;
    kept.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i;
      while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
      if ((j - i) % 2 == 1) kept.push_back(std::move(terms_[i]));
      i = j;
    }
    terms_ = std::move(kept);
  }

  void toggle(const B& term) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
    if (it != terms_.end() && *it == term) {
      terms_.erase(it);
    } else {
      terms_.insert(it, term);
    }
  }

  GF2Sum& operator+=(const GF2Sum& other) {
    std::vector<B> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                  other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
  }

  friend GF2Sum operator+(GF2Sum lhs, const GF2Sum& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool contains(const B& term) const {
    return std::binary_search(terms_.begin(), terms_.end(), term);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<B>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const GF2Sum&, const GF2Sum&) = default;

 private:
  std::vector<B> terms_;
};

}  // namespace strandfloer
