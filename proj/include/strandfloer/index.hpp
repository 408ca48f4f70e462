#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strandfloer/grid.hpp"

namespace strandfloer {

/// Exact element of (1/4)Z, stored as a count of quarters.
struct Quarters {
  std::int64_t q = 0;

  static Quarters whole(std::int64_t n) { return {4 * n}; }
  static Quarters of(std::int64_t num, std::int64_t den);  // den divides 4

  bool is_integer() const { return q % 4 == 0; }
  std::string str() const;

  Quarters operator+(Quarters o) const { return {q + o.q}; }
  Quarters operator-(Quarters o) const { return {q - o.q}; }
  Quarters operator*(std::int64_t n) const { return {q * n}; }
  auto operator<=>(const Quarters&) const = default;
};

enum class PieceKind { rectangle, triangle, polygon };

struct Piece {
  PieceKind kind = PieceKind::polygon;
  int corners = 0;

  static Piece rectangle() { return {PieceKind::rectangle, 4}; }
  static Piece triangle() { return {PieceKind::triangle, 3}; }
  static Piece polygon(int m) { return {PieceKind::polygon, m}; }
};

/// Formal sum of convex embedded pieces with the bookkeeping that enters
/// the index formula.
struct Domain {
  std::vector<Piece> pieces;
  int diag_intersections = 0;  // i
  int inputs = 1;              // l
  int k = 0;
};

/// Sum over pieces of 1 - m/4.
Quarters euler_measure(const Domain& d);

/// i + 2e - (l - 1) k / 2.
Quarters maslov(const Domain& d);

/// Side-by-side union of domains with the same number of inputs.
Domain disjoint_union(const Domain& lhs, const Domain& rhs);

/// The rectangle as a strip domain; i counts points of x strictly inside.
Domain rectangle_domain(const GridSpec& spec, const FloerGenerator& x, const Rectangle& rect);

/// k triangles, l = 2; i is the number of forbidden pairs.
Domain product_domain(const GridSpec& spec, const std::vector<Triangle>& tuple);

/// Domain obtained by gluing the triangle tuples of x1 x2, (x1 x2) x3, ...
/// Each track follows one point of x1 through the chain. i sums, over pairs
/// of tracks, (crossings in each layer - crossings of the composite) / 2, so
/// it vanishes exactly when every nested product is counted. Nullopt when
/// the chain does not close up into triangles.
std::optional<Domain> chain_domain(const GridSpec& spec, const std::vector<FloerGenerator>& chain);

struct ChainCheck {
  bool domain = false;   // the chain closes up into triangles
  bool counted = false;  // the final product is nonzero
  std::string violation;
};

/// Checks one chain whose proper prefixes multiply to counted products:
/// e = (l - 1) k / 4, mu is a nonnegative integer equal to i, the final
/// product is counted iff mu = 0, and mu != 2 - l when l >= 3. A chain with
/// an uncounted prefix is reported through `violation`.
ChainCheck check_chain(const GridSpec& spec, const std::vector<FloerGenerator>& chain);

struct RigidityReport {
  int ell_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t counted = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first few, sorted

  bool ok() const { return violation_count == 0; }
};

/// Runs check_chain on every chain x1, ..., xl (2 <= l <= ell_max) of Floer
/// generators whose proper prefixes multiply to counted products.
RigidityReport verify_rigidity(const GridSpec& spec, int k, int ell_max, int threads = 1);

}  // namespace strandfloer
