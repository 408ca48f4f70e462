#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "strandfloer/circle.hpp"
#include "strandfloer/gf2.hpp"

namespace strandfloer {

/// `full`: the algebra of the pointed matched circle. `half`: the
/// subalgebra where no strand passes between positions 2g and 2g+1.
enum class Variant { full, half };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

/// An upward strand from `start` to `end`. Moving strands have start < end;
/// horizontal strands (start == end) appear only in unmatched diagrams.
struct Chord {
  int start = 0;
  int end = 0;

  bool horizontal() const { return start == end; }
  auto operator<=>(const Chord&) const = default;
};

/// Basis element of the strands algebra: Reeb chords plus dotted pairs.
/// Chords are sorted by start, dotted labels ascending.
struct MatchedGenerator {
  std::vector<Chord> chords;
  std::vector<int> dotted;
  IdempotentClass source;
  IdempotentClass target;

  int size() const { return static_cast<int>(chords.size() + dotted.size()); }

  bool operator==(const MatchedGenerator& o) const {
    return chords == o.chords && dotted == o.dotted;
  }
  /// Orders by chords, then dotted labels. Source and target are functions
  /// of the items and do not take part.
  std::strong_ordering operator<=>(const MatchedGenerator& o) const;
};

/// Strand diagram with one strand per starting position, sorted by start.
struct UnmatchedDiagram {
  std::vector<Chord> strands;

  auto operator<=>(const UnmatchedDiagram&) const = default;
};

class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates and canonicalizes; throws std::invalid_argument when source or
/// target labels collide or a chord is not moving upward.
MatchedGenerator make_generator(const PointedMatchedCircle& pmc, std::vector<Chord> chords,
                                std::vector<int> dotted);

/// Throws std::invalid_argument unless starts and ends are each distinct and
/// every strand satisfies start <= end.
UnmatchedDiagram make_diagram(std::vector<Chord> strands);

bool in_variant(const PointedMatchedCircle& pmc, const MatchedGenerator& gen, Variant variant);

/// Generators of hom(s, t), ordered by chords then dotted labels.
std::vector<MatchedGenerator> enumerate_hom(const PointedMatchedCircle& pmc, IdempotentClass s,
                                            IdempotentClass t, Variant variant);

/// All generators with k items, grouped by (source, target) in idempotent order.
std::vector<MatchedGenerator> enumerate_generators(const PointedMatchedCircle& pmc, int k,
                                                   Variant variant);

MatchedGenerator idempotent(const PointedMatchedCircle& pmc, IdempotentClass s);

/// Replaces every dotted pair by a horizontal strand at either of its two
/// positions: 2^(#dotted) diagrams.
GF2Sum<UnmatchedDiagram> section_expand(const PointedMatchedCircle& pmc,
                                        const MatchedGenerator& gen);

/// Number of strand pairs with (a - a')(b - b') < 0.
int inversions(const UnmatchedDiagram& d);

/// Sum over crossings whose resolution lowers the inversion count by exactly one.
GF2Sum<UnmatchedDiagram> differential_unmatched(const UnmatchedDiagram& d);

/// Concatenation; zero unless ends of `lhs` equal starts of `rhs` and the
/// inversion counts add up.
GF2Sum<UnmatchedDiagram> product_unmatched(const UnmatchedDiagram& lhs,
                                           const UnmatchedDiagram& rhs);

/// Inverse of section expansion. Throws ClosureError if a candidate
/// generator has only some of its sections present.
GF2Sum<MatchedGenerator> recognize(const PointedMatchedCircle& pmc,
                                   const GF2Sum<UnmatchedDiagram>& sum);

GF2Sum<MatchedGenerator> differential(const PointedMatchedCircle& pmc, const MatchedGenerator& gen);
GF2Sum<MatchedGenerator> differential(const PointedMatchedCircle& pmc,
                                      const GF2Sum<MatchedGenerator>& x);

/// Zero when target(lhs) != source(rhs).
GF2Sum<MatchedGenerator> product(const PointedMatchedCircle& pmc, const MatchedGenerator& lhs,
                                 const MatchedGenerator& rhs);
GF2Sum<MatchedGenerator> product(const PointedMatchedCircle& pmc,
                                 const GF2Sum<MatchedGenerator>& lhs,
                                 const GF2Sum<MatchedGenerator>& rhs);

std::string describe(const MatchedGenerator& gen);
std::string describe(const UnmatchedDiagram& d);

}  // namespace strandfloer
