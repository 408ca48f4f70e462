#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "strandfloer/circle.hpp"
#include "strandfloer/gf2.hpp"
#include "strandfloer/strands.hpp"

namespace strandfloer {

/// `half`: the two-sheet diagram of the directed model (cells a <= 2g < b
/// removed). `wrapped`: the full staircase of the partially wrapped model.
enum class GridMode { half, wrapped };

std::string to_string(GridMode mode);
GridMode grid_mode_from_string(const std::string& name);

/// The cut-open staircase diagram. Column a carries the arc leaving the
/// a-th point, row b the arc arriving at the b-th point; the cell (a, b)
/// exists for a <= b. The branch point of label l shows up twice on the
/// diagonal, at both positions of l.
class GridSpec {
 public:
  GridSpec(PointedMatchedCircle pmc, GridMode mode) : pmc_(std::move(pmc)), mode_(mode) {}

  const PointedMatchedCircle& circle() const { return pmc_; }
  GridMode mode() const { return mode_; }
  int size() const { return pmc_.num_points(); }

  bool allowed(int a, int b) const;

 private:
  PointedMatchedCircle pmc_;
  GridMode mode_;
};

/// Intersection point at column a, row b. With a == b the point is a branch
/// point; it is stored at the lower of its two diagonal avatars.
struct GridPoint {
  int a = 0;
  int b = 0;

  bool is_branch() const { return a == b; }
  auto operator<=>(const GridPoint&) const = default;
};

struct FloerGenerator {
  std::vector<GridPoint> points;  // sorted
  IdempotentClass s;
  IdempotentClass t;

  bool operator==(const FloerGenerator& o) const { return points == o.points; }
  std::strong_ordering operator<=>(const FloerGenerator& o) const { return points <=> o.points; }
};

/// Canonicalizes and checks the label conditions; throws std::invalid_argument.
FloerGenerator make_floer_generator(const GridSpec& spec, std::vector<GridPoint> points);

/// Diagonal cells at which a point sits: one cell for an ordinary point, both
/// matched positions for a branch point.
std::vector<GridPoint> avatars(const GridSpec& spec, const GridPoint& p);

/// Points of (arc of label i leaving) x (arc of label j arriving).
std::vector<GridPoint> intersection_points(const GridSpec& spec, int i, int j);
int intersection_pattern(const GridSpec& spec, int i, int j);

std::vector<FloerGenerator> enumerate_floer_generators(const GridSpec& spec, IdempotentClass s,
                                                       IdempotentClass t);

/// Dictionary between grid points and algebra items. Throws
/// std::invalid_argument when a cell is not part of the diagram.
MatchedGenerator to_algebra(const GridSpec& spec, const FloerGenerator& x);
FloerGenerator from_algebra(const GridSpec& spec, const MatchedGenerator& gen);

/// Columns c1 < c2 <= r1 < r2. Incoming corners (c1, r2), (c2, r1);
/// outgoing corners (c1, r1), (c2, r2). c2 == r1 puts a corner on a branch point.
struct Rectangle {
  int c1 = 0;
  int c2 = 0;
  int r1 = 0;
  int r2 = 0;

  auto operator<=>(const Rectangle&) const = default;
};

struct RectangleTerm {
  Rectangle rectangle;
  FloerGenerator target;
};

/// Rectangles with both incoming corners in x and no point of x (any avatar)
/// strictly inside, together with the generator they lead to.
std::vector<RectangleTerm> empty_rectangles(const GridSpec& spec, const FloerGenerator& x);

GF2Sum<FloerGenerator> floer_differential(const GridSpec& spec, const FloerGenerator& x);

/// In half mode every triangle lies in one sheet; the degenerate triangle at
/// a branch point belongs to both.
enum class Sheet { none, front, back, both };

/// Triangle with vertices (c, m) on the first pair of arcs, (m, r) on the
/// second and (c, r) on the third; c <= m <= r.
struct Triangle {
  int c = 0;
  int m = 0;
  int r = 0;
  Sheet sheet = Sheet::none;

  bool degenerate() const { return c == m && m == r; }
  auto operator<=>(const Triangle&) const = default;
};

std::vector<Triangle> triangles(const GridSpec& spec);

enum class Overlap { disjoint, head_to_tail, forbidden };
std::string to_string(Overlap o);

/// Forbidden when the two composite strands c -> m -> r cross twice
/// (crossings of the factors do not add up to the composite); head-to-tail
/// when they cross exactly once; disjoint otherwise.
Overlap overlap_class(const GridSpec& spec, const Triangle& lhs, const Triangle& rhs);

/// The inequality form of the forbidden test: after ordering so that c < c',
/// forbidden iff c < c' <= m' < m <= r < r'.
bool forbidden_by_inequality(const Triangle& lhs, const Triangle& rhs);

/// One triangle per shared middle label, or nullopt when some pair of points
/// of x and y does not bound a triangle. Forbidden overlaps are not filtered.
std::optional<std::vector<Triangle>> triangle_tuple(const GridSpec& spec, const FloerGenerator& x,
                                                    const FloerGenerator& y);

/// Generator formed by the (c, r) vertices of a triangle tuple.
FloerGenerator triangle_output(const GridSpec& spec, const std::vector<Triangle>& tuple);

/// Counts triangle tuples whose pairwise overlaps are never forbidden.
GF2Sum<FloerGenerator> floer_product(const GridSpec& spec, const FloerGenerator& x,
                                     const FloerGenerator& y);

std::string describe(const FloerGenerator& x);

}  // namespace strandfloer
