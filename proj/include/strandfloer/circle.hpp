#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strandfloer {

/// `single`: one pointed circle, base point between the last and the first
/// position. `pair`: two pointed circles, split between positions 2g and 2g+1.
enum class CircleMode { single, pair };

std::string to_string(CircleMode mode);
CircleMode circle_mode_from_string(const std::string& name);

/// A k-element subset of the pair labels {1..2g}, stored as a bit mask
/// (bit l-1 set iff label l belongs to the set).
class IdempotentClass {
 public:
  IdempotentClass() = default;
  explicit IdempotentClass(std::uint32_t mask) : mask_(mask) {}
  static IdempotentClass from_labels(const std::vector<int>& labels);

  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool contains(int label) const { return (mask_ >> (label - 1)) & 1U; }
  std::vector<int> labels() const;

  /// Lexicographic order on the sorted label lists.
  std::strong_ordering operator<=>(const IdempotentClass& other) const;
  bool operator==(const IdempotentClass& other) const { return mask_ == other.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

class PointedMatchedCircle {
 public:
  /// Labels 1..2g,1..2g: position i and i+2g carry label i.
  static PointedMatchedCircle standard(int genus, CircleMode mode = CircleMode::single);

  /// `pairs[l-1]` holds the two positions carrying label l. Positions must
  /// cover {1..2n} exactly once and the number of pairs must be even.
  PointedMatchedCircle(std::vector<std::array<int, 2>> pairs, CircleMode mode);

  int genus() const { return num_pairs() / 2; }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }
  int num_points() const { return 2 * num_pairs(); }
  CircleMode mode() const { return mode_; }

  int label(int position) const { return label_of_[position]; }
  int partner(int position) const { return partner_of_[position]; }
  /// Both positions of a label, ascending.
  const std::array<int, 2>& positions(int label) const { return pairs_[label - 1]; }
  int lower_position(int label) const { return pairs_[label - 1][0]; }

  /// Last position of the first circle in mode `pair` (= 2g).
  int split() const { return num_pairs(); }
  /// True when a chord from a to b (a < b) passes between positions 2g and 2g+1.
  bool crosses_split(int start, int end) const { return start <= split() && end > split(); }

  const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }

  bool operator==(const PointedMatchedCircle& other) const {
    return pairs_ == other.pairs_ && mode_ == other.mode_;
  }

 private:
  std::vector<std::array<int, 2>> pairs_;
  std::vector<int> label_of_;
  std::vector<int> partner_of_;
  CircleMode mode_;
};

struct SurfaceInvariants {
  int boundary_components = 0;
  int genus = 0;
  int euler_characteristic = 0;

  bool valid() const { return boundary_components == 1; }
};

/// Attaches one band per matched pair to a disc and counts the boundary
/// cycles of the resulting ribbon surface.
SurfaceInvariants validate_surface(const PointedMatchedCircle& pmc);

/// All k-subsets of {1..n}, lexicographic.
std::vector<IdempotentClass> k_subsets(int n, int k);

/// All k-subsets of the labels {1..2g}, lexicographic. Throws
/// std::out_of_range unless 0 <= k <= 2g.
std::vector<IdempotentClass> idempotents(const PointedMatchedCircle& pmc, int k);

/// k-subsets of {1..2g+1}: the critical points of the Lefschetz fibration
/// on the k-th symmetric product of the surface with 2g+1 branch points.
std::vector<IdempotentClass> thimble_indices(const PointedMatchedCircle& pmc, int k);

}  // namespace strandfloer
