#pragma once

// Reference computations used only by the tests. None of them calls into the
// library's enumeration, crossing or elimination code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Binomial coefficient from Pascal's triangle.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> row(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    row[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return row[n][k];
}

/// Rank over Z/2 of a small dense matrix, by brute-force span enumeration.
inline int span_rank(const std::vector<std::uint32_t>& rows) {
  std::vector<std::uint32_t> span{0};
  for (std::uint32_t r : rows) {
    if (std::find(span.begin(), span.end(), r) != span.end()) continue;
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ r);
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

/// Genus of disc + bands, read off the interleaving form of the chord
/// diagram: twice the genus is its rank over Z/2.
inline int interleaving_genus(const std::vector<std::array<int, 2>>& pairs) {
  const std::size_t n = pairs.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  auto inside = [](int x, const std::array<int, 2>& p) {
    return std::min(p[0], p[1]) < x && x < std::max(p[0], p[1]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && inside(pairs[j][0], pairs[i]) != inside(pairs[j][1], pairs[i])) m[i][j] = 1;
    }
  }
  // Gaussian elimination written out independently of the library.
  int rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!used[r] && m[r][c]) {
        p = r;
        break;
      }
    }
    if (p == n) continue;
    used[p] = true;
    ++rank;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != p && m[r][c]) {
        for (std::size_t cc = 0; cc < n; ++cc) m[r][cc] ^= m[p][cc];
      }
    }
  }
  return rank / 2;
}

inline int interleaving_boundaries(const std::vector<std::array<int, 2>>& pairs) {
  return 1 + static_cast<int>(pairs.size()) - 2 * interleaving_genus(pairs);
}

/// Every perfect matching of positions 1..2n.
inline std::vector<std::vector<std::array<int, 2>>> all_matchings(int n) {
  std::vector<std::vector<std::array<int, 2>>> out;
  std::vector<std::array<int, 2>> current;
  std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 1;
    while (first <= 2 * n && used[first]) ++first;
    if (first > 2 * n) {
      out.push_back(current);
      return;
    }
    used[first] = true;
    for (int q = first + 1; q <= 2 * n; ++q) {
      if (used[q]) continue;
      used[q] = true;
      current.push_back({first, q});
      self(self);
      current.pop_back();
      used[q] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

/// Permanent of a small square matrix by expansion over permutations.
inline std::uint64_t permanent(const std::vector<std::vector<std::uint64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < n && term; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Number of ways to realize label i -> label j on the standard circle of
/// genus g: upward chords between their positions, plus the dotted pair when
/// i = j. `half` drops chords passing from the first 2g positions to the rest.
inline std::uint64_t item_count(int g, int i, int j, bool half) {
  const std::array<int, 2> pi{i, i + 2 * g};
  const std::array<int, 2> pj{j, j + 2 * g};
  std::uint64_t n = i == j ? 1 : 0;
  for (int a : pi) {
    for (int b : pj) {
      if (a >= b) continue;
      if (half && a <= 2 * g && b > 2 * g) continue;
      ++n;
    }
  }
  return n;
}

/// dim hom(s, t) on the standard circle, as a permanent of item counts.
inline std::uint64_t hom_dimension(int g, const std::vector<int>& s, const std::vector<int>& t, bool half) {
  if (s.size() != t.size()) return 0;
  std::vector<std::vector<std::uint64_t>> m(s.size(), std::vector<std::uint64_t>(t.size()));
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) m[a][b] = item_count(g, s[a], t[b], half);
  }
  return permanent(m);
}

/// Whether resolving the crossing of strands (a -> b) and (a2 -> b2), a < a2,
/// b > b2, is admissible: no other strand starts strictly between a and a2
/// and ends strictly between b2 and b.
inline bool resolution_admissible(const std::vector<std::pair<int, int>>& strands, std::pair<int, int> lo,
                                  std::pair<int, int> hi) {
  for (const auto& s : strands) {
    if (s == lo || s == hi) continue;
    if (lo.first < s.first && s.first < hi.first && hi.second < s.second && s.second < lo.second) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle
