#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace strandfloer {

/// Dense vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}
  static BitVector unit(std::size_t n, std::size_t i);
  static BitVector from_indices(std::size_t n, const std::vector<int>& indices);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const { return next_set(0); }
  /// Index of the lowest set bit at or after `from`, or size().
  std::size_t next_set(std::size_t from) const;
  std::vector<int> indices() const;

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse rows x cols matrix over the two-element field. Entry (i, j) is the
/// coefficient of basis vector i in the image of basis vector j.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  BooleanMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static BooleanMatrix identity(std::size_t n);
  /// Matrix whose j-th column has ones at columns[j].
  static BooleanMatrix from_columns(std::size_t rows, const std::vector<std::vector<int>>& columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool v = true);
  void flip(std::size_t i, std::size_t j);

  /// Sorted column indices of the nonzero entries of row i.
  const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
  BitVector dense_row(std::size_t i) const;
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  BitVector apply(const BitVector& v) const;
  BooleanMatrix transpose() const;
  BooleanMatrix operator*(const BooleanMatrix& rhs) const;
  BooleanMatrix operator+(const BooleanMatrix& rhs) const;

  bool operator==(const BooleanMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<int>> rows_;
};

std::size_t rank(const BooleanMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced form.
std::vector<BitVector> nullspace(const BooleanMatrix& m);

/// Incrementally reduced basis of a subspace that remembers, for every
/// pivot row, which combination of inserted vectors produced it.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::size_t tags) : dim_(dim), tags_(tags), slot_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Inserts v with provenance `tag` (a vector of length `tags`). Returns
  /// false when v already lies in the span.
  bool insert(const BitVector& v, const BitVector& tag);
  bool insert(const BitVector& v, std::size_t tag_index);

  bool contains(const BitVector& v) const;
  /// Tag combination whose inserted vectors sum to v, if v is in the span.
  std::optional<BitVector> express(const BitVector& v) const;

 private:
  struct Row {
    std::size_t pivot;
    BitVector value;
    BitVector tag;
  };
  std::size_t dim_;
  std::size_t tags_;
  std::vector<Row> rows_;
  std::vector<int> slot_;  // pivot column -> index into rows_, or -1

  void reduce(BitVector& v, BitVector* tag) const;
};

}  // namespace strandfloer
