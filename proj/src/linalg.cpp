#include "strandfloer/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace strandfloer {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
  BitVector v(n);
  v.set(i);
  return v;
}

BitVector BitVector::from_indices(std::size_t n, const std::vector<int>& indices) {
  BitVector v(n);
  for (int i : indices) v.flip(static_cast<std::size_t>(i));
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw std::invalid_argument("bit vector sizes differ");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / 64;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % 64));
  while (word == 0) {
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
  return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
}

std::vector<int> BitVector::indices() const {
  std::vector<int> out;
  for (std::size_t i = next_set(0); i < size_; i = next_set(i + 1)) out.push_back(static_cast<int>(i));
  return out;
}

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
  BooleanMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back(static_cast<int>(i));
  return m;
}

BooleanMatrix BooleanMatrix::from_columns(std::size_t rows,
                                          const std::vector<std::vector<int>>& columns) {
  BooleanMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int i : columns[j]) m.flip(static_cast<std::size_t>(i), j);
  }
  return m;
}

bool BooleanMatrix::get(std::size_t i, std::size_t j) const {
  return std::binary_search(rows_[i].begin(), rows_[i].end(), static_cast<int>(j));
}

void BooleanMatrix::set(std::size_t i, std::size_t j, bool v) {
  if (get(i, j) != v) flip(i, j);
}

void BooleanMatrix::flip(std::size_t i, std::size_t j) {
  if (i >= rows() || j >= cols_) throw std::out_of_range("matrix index out of range");
  auto& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), static_cast<int>(j));
  if (it != r.end() && *it == static_cast<int>(j)) {
    r.erase(it);
  } else {
    r.insert(it, static_cast<int>(j));
  }
}

BitVector BooleanMatrix::dense_row(std::size_t i) const { return BitVector::from_indices(cols_, rows_[i]); }

std::size_t BooleanMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

BitVector BooleanMatrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    bool bit = false;
    for (int j : rows_[i]) bit ^= v.get(static_cast<std::size_t>(j));
    if (bit) out.set(i);
  }
  return out;
}

BooleanMatrix BooleanMatrix::transpose() const {
  BooleanMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (int j : rows_[i]) t.rows_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
  }
  return t;
}

BooleanMatrix BooleanMatrix::operator*(const BooleanMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("matrix shapes do not compose");
  BooleanMatrix out(rows(), rhs.cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    BitVector acc(rhs.cols_);
    for (int k : rows_[i]) {
      for (int j : rhs.rows_[static_cast<std::size_t>(k)]) acc.flip(static_cast<std::size_t>(j));
    }
    out.rows_[i] = acc.indices();
  }
  return out;
}

BooleanMatrix BooleanMatrix::operator+(const BooleanMatrix& rhs) const {
  if (rows() != rhs.rows() || cols_ != rhs.cols_) throw std::invalid_argument("matrix shapes differ");
  BooleanMatrix out(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    std::set_symmetric_difference(rows_[i].begin(), rows_[i].end(), rhs.rows_[i].begin(),
                                  rhs.rows_[i].end(), std::back_inserter(out.rows_[i]));
  }
  return out;
}

namespace {

// Reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> reduce_rows(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<BitVector> dense_rows(const BooleanMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m.row(i).empty()) rows.push_back(m.dense_row(i));
  }
  return rows;
}

}  // namespace

std::size_t rank(const BooleanMatrix& m) {
  auto rows = dense_rows(m);
  return reduce_rows(rows, m.cols()).size();
}

std::vector<BitVector> nullspace(const BooleanMatrix& m) {
  auto rows = dense_rows(m);
  const auto pivots = reduce_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v = BitVector::unit(m.cols(), free);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rows[r].get(free)) v.set(pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(BitVector& v, BitVector* tag) const {
  // Row values have their pivot as lowest bit, so sweeping upward never
  // disturbs bits already passed.
  for (std::size_t p = v.first_set(); p < dim_; p = v.next_set(p + 1)) {
    const int slot = slot_[p];
    if (slot < 0) continue;
    v ^= rows_[static_cast<std::size_t>(slot)].value;
    if (tag) *tag ^= rows_[static_cast<std::size_t>(slot)].tag;
  }
}

bool EchelonBasis::insert(const BitVector& v, const BitVector& tag) {
  if (v.size() != dim_ || tag.size() != tags_) throw std::invalid_argument("echelon sizes differ");
  BitVector value = v;
  BitVector provenance = tag;
  reduce(value, &provenance);
  if (!value.any()) return false;
  const std::size_t pivot = value.first_set();
  slot_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back({pivot, std::move(value), std::move(provenance)});
  return true;
}

bool EchelonBasis::insert(const BitVector& v, std::size_t tag_index) {
  return insert(v, BitVector::unit(tags_, tag_index));
}

bool EchelonBasis::contains(const BitVector& v) const {
  BitVector value = v;
  reduce(value, nullptr);
  return !value.any();
}

std::optional<BitVector> EchelonBasis::express(const BitVector& v) const {
  BitVector value = v;
  BitVector tag(tags_);
  reduce(value, &tag);
  if (value.any()) return std::nullopt;
  return tag;
}

}  // namespace strandfloer
