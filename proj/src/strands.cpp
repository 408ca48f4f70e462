#include "strandfloer/strands.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace strandfloer {

std::string to_string(Variant v) { return v == Variant::full ? "full" : "half"; }

Variant variant_from_string(const std::string& name) {
  if (name == "full") return Variant::full;
  if (name == "half") return Variant::half;
  throw std::invalid_argument("unknown variant '" + name + "' (expected full|half)");
}

std::strong_ordering MatchedGenerator::operator<=>(const MatchedGenerator& o) const {
  if (auto c = chords <=> o.chords; c != 0) return c;
  return dotted <=> o.dotted;
}

MatchedGenerator make_generator(const PointedMatchedCircle& pmc, std::vector<Chord> chords,
                                std::vector<int> dotted) {
  std::sort(chords.begin(), chords.end());
  std::sort(dotted.begin(), dotted.end());
  std::uint32_t src = 0;
  std::uint32_t tgt = 0;
  auto claim = [](std::uint32_t& mask, int label, const char* what) {
    const std::uint32_t bit = 1U << (label - 1);
    if (mask & bit) {
      throw std::invalid_argument(std::string("repeated ") + what + " label " +
                                  std::to_string(label));
    }
    mask |= bit;
  };
  for (const Chord& c : chords) {
    if (c.start < 1 || c.end > pmc.num_points() || c.start >= c.end) {
      throw std::invalid_argument("chord (" + std::to_string(c.start) + "," +
                                  std::to_string(c.end) + ") is not an upward Reeb chord");
    }
    claim(src, pmc.label(c.start), "source");
    claim(tgt, pmc.label(c.end), "target");
  }
  for (int l : dotted) {
    if (l < 1 || l > pmc.num_pairs()) {
      throw std::invalid_argument("dotted label " + std::to_string(l) + " out of range");
    }
    claim(src, l, "source");
    claim(tgt, l, "target");
  }
  MatchedGenerator gen;
  gen.chords = std::move(chords);
  gen.dotted = std::move(dotted);
  gen.source = IdempotentClass(src);
  gen.target = IdempotentClass(tgt);
  return gen;
}

UnmatchedDiagram make_diagram(std::vector<Chord> strands) {
  std::sort(strands.begin(), strands.end());
  std::vector<int> ends;
  for (std::size_t i = 0; i < strands.size(); ++i) {
    if (strands[i].start > strands[i].end) throw std::invalid_argument("strand moves downward");
    if (i > 0 && strands[i].start == strands[i - 1].start) {
      throw std::invalid_argument("two strands share a start");
    }
    ends.push_back(strands[i].end);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw std::invalid_argument("two strands share an end");
  }
  return UnmatchedDiagram{std::move(strands)};
}

bool in_variant(const PointedMatchedCircle& pmc, const MatchedGenerator& gen, Variant variant) {
  if (variant == Variant::full) return true;
  return std::none_of(gen.chords.begin(), gen.chords.end(),
                      [&](const Chord& c) { return pmc.crosses_split(c.start, c.end); });
}

std::vector<MatchedGenerator> enumerate_hom(const PointedMatchedCircle& pmc, IdempotentClass s,
                                            IdempotentClass t, Variant variant) {
  std::vector<MatchedGenerator> out;
  if (s.size() != t.size()) return out;
  const std::vector<int> sources = s.labels();
  const std::vector<int> targets = t.labels();
  std::vector<Chord> chords;
  std::vector<int> dotted;
  std::vector<bool> used(targets.size(), false);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == sources.size()) {
      out.push_back(make_generator(pmc, chords, dotted));
      return;
    }
    const int i = sources[idx];
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      if (used[ti]) continue;
      const int j = targets[ti];
      used[ti] = true;
      if (i == j) {
        dotted.push_back(i);
        self(self, idx + 1);
        dotted.pop_back();
      }
      for (int a : pmc.positions(i)) {
        for (int b : pmc.positions(j)) {
          if (a >= b) continue;
          if (variant == Variant::half && pmc.crosses_split(a, b)) continue;
          chords.push_back({a, b});
          self(self, idx + 1);
          chords.pop_back();
        }
      }
      used[ti] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatchedGenerator> enumerate_generators(const PointedMatchedCircle& pmc, int k,
                                                   Variant variant) {
  const auto idems = idempotents(pmc, k);
  std::vector<MatchedGenerator> out;
  for (const auto& s : idems) {
    for (const auto& t : idems) {
      auto block = enumerate_hom(pmc, s, t, variant);
      out.insert(out.end(), std::make_move_iterator(block.begin()),
                 std::make_move_iterator(block.end()));
    }
  }
  return out;
}

MatchedGenerator idempotent(const PointedMatchedCircle& pmc, IdempotentClass s) {
  return make_generator(pmc, {}, s.labels());
}

GF2Sum<UnmatchedDiagram> section_expand(const PointedMatchedCircle& pmc,
                                        const MatchedGenerator& gen) {
  const std::size_t d = gen.dotted.size();
  std::vector<UnmatchedDiagram> sections;
  sections.reserve(std::size_t{1} << d);
  for (std::uint32_t choice = 0; choice < (1U << d); ++choice) {
    std::vector<Chord> strands = gen.chords;
    for (std::size_t i = 0; i < d; ++i) {
      const int p = pmc.positions(gen.dotted[i])[(choice >> i) & 1U];
      strands.push_back({p, p});
    }
    std::sort(strands.begin(), strands.end());
    sections.push_back(UnmatchedDiagram{std::move(strands)});
  }
  return GF2Sum<UnmatchedDiagram>(std::move(sections));
}

int inversions(const UnmatchedDiagram& d) {
  int count = 0;
  const auto& s = d.strands;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if ((s[i].start - s[j].start) * (s[i].end - s[j].end) < 0) ++count;
    }
  }
  return count;
}

GF2Sum<UnmatchedDiagram> differential_unmatched(const UnmatchedDiagram& d) {
  const int inv = inversions(d);
  std::vector<UnmatchedDiagram> terms;
  const auto& s = d.strands;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      // Sorted by start, so s[i].start < s[j].start; a crossing has s[i].end > s[j].end.
      if (s[i].end <= s[j].end) continue;
      UnmatchedDiagram resolved = d;
      std::swap(resolved.strands[i].end, resolved.strands[j].end);
      if (inversions(resolved) == inv - 1) terms.push_back(std::move(resolved));
    }
  }
  return GF2Sum<UnmatchedDiagram>(std::move(terms));
}

GF2Sum<UnmatchedDiagram> product_unmatched(const UnmatchedDiagram& lhs,
                                           const UnmatchedDiagram& rhs) {
  if (lhs.strands.size() != rhs.strands.size()) return {};
  std::array<int, 64> next{};
  for (const Chord& c : rhs.strands) next[c.start] = c.end;
  UnmatchedDiagram composite;
  composite.strands.reserve(lhs.strands.size());
  for (const Chord& c : lhs.strands) {
    if (next[c.end] == 0) return {};
    composite.strands.push_back({c.start, next[c.end]});
  }
  if (inversions(composite) != inversions(lhs) + inversions(rhs)) return {};
  return GF2Sum<UnmatchedDiagram>(std::move(composite));
}

GF2Sum<MatchedGenerator> recognize(const PointedMatchedCircle& pmc,
                                   const GF2Sum<UnmatchedDiagram>& sum) {
  std::map<MatchedGenerator, std::size_t> hits;
  for (const UnmatchedDiagram& d : sum) {
    std::vector<Chord> chords;
    std::vector<int> dotted;
    for (const Chord& c : d.strands) {
      if (c.horizontal()) {
        dotted.push_back(pmc.label(c.start));
      } else {
        chords.push_back(c);
      }
    }
    MatchedGenerator candidate;
    try {
      candidate = make_generator(pmc, std::move(chords), std::move(dotted));
    } catch (const std::invalid_argument& e) {
      throw ClosureError("diagram " + describe(d) + " has no matched candidate: " + e.what());
    }
    ++hits[candidate];
  }
  std::vector<MatchedGenerator> out;
  for (auto& [candidate, count] : hits) {
    const std::size_t expected = std::size_t{1} << candidate.dotted.size();
    if (count != expected) {
      throw ClosureError("only " + std::to_string(count) + " of " + std::to_string(expected) +
                         " sections of " + describe(candidate) + " present");
    }
    out.push_back(candidate);
  }
  return GF2Sum<MatchedGenerator>(std::move(out));
}

GF2Sum<MatchedGenerator> differential(const PointedMatchedCircle& pmc, const MatchedGenerator& gen) {
  GF2Sum<UnmatchedDiagram> total;
  for (const UnmatchedDiagram& section : section_expand(pmc, gen)) {
    total += differential_unmatched(section);
  }
  return recognize(pmc, total);
}

GF2Sum<MatchedGenerator> differential(const PointedMatchedCircle& pmc,
                                      const GF2Sum<MatchedGenerator>& x) {
  GF2Sum<MatchedGenerator> out;
  for (const auto& gen : x) out += differential(pmc, gen);
  return out;
}

namespace {

std::uint64_t start_mask(const UnmatchedDiagram& d) {
  std::uint64_t m = 0;
  for (const Chord& c : d.strands) m |= std::uint64_t{1} << c.start;
  return m;
}

std::uint64_t end_mask(const UnmatchedDiagram& d) {
  std::uint64_t m = 0;
  for (const Chord& c : d.strands) m |= std::uint64_t{1} << c.end;
  return m;
}

}  // namespace

GF2Sum<MatchedGenerator> product(const PointedMatchedCircle& pmc, const MatchedGenerator& lhs,
                                 const MatchedGenerator& rhs) {
  if (lhs.target != rhs.source || lhs.size() != rhs.size()) return {};
  const auto left = section_expand(pmc, lhs);
  const auto right = section_expand(pmc, rhs);
  GF2Sum<UnmatchedDiagram> total;
  for (const UnmatchedDiagram& a : left) {
    const std::uint64_t ends = end_mask(a);
    for (const UnmatchedDiagram& b : right) {
      if (start_mask(b) != ends) continue;
      total += product_unmatched(a, b);
    }
  }
  return recognize(pmc, total);
}

GF2Sum<MatchedGenerator> product(const PointedMatchedCircle& pmc,
                                 const GF2Sum<MatchedGenerator>& lhs,
                                 const GF2Sum<MatchedGenerator>& rhs) {
  GF2Sum<MatchedGenerator> out;
  for (const auto& a : lhs) {
    for (const auto& b : rhs) out += product(pmc, a, b);
  }
  return out;
}

std::string describe(const MatchedGenerator& gen) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const Chord& c : gen.chords) {
    os << (first ? "" : " ") << c.start << "->" << c.end;
    first = false;
  }
  for (int l : gen.dotted) {
    os << (first ? "" : " ") << "dot" << l;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string describe(const UnmatchedDiagram& d) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < d.strands.size(); ++i) {
    os << (i ? " " : "") << d.strands[i].start << "->" << d.strands[i].end;
  }
  os << '}';
  return os.str();
}

}  // namespace strandfloer
