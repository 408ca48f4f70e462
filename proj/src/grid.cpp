#include "strandfloer/grid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace strandfloer {

std::string to_string(GridMode mode) { return mode == GridMode::half ? "half" : "wrapped"; }

GridMode grid_mode_from_string(const std::string& name) {
  if (name == "half") return GridMode::half;
  if (name == "wrapped") return GridMode::wrapped;
  throw std::invalid_argument("unknown grid mode '" + name + "' (expected half|wrapped)");
}

bool GridSpec::allowed(int a, int b) const {
  if (a < 1 || b > size() || a > b) return false;
  if (mode_ == GridMode::half && a <= pmc_.split() && b > pmc_.split()) return false;
  return true;
}

namespace {

// Label of the arc through column a / row b. A branch point counts once.
int column_label(const GridSpec& spec, const GridPoint& p) { return spec.circle().label(p.a); }
int row_label(const GridSpec& spec, const GridPoint& p) { return spec.circle().label(p.b); }

GridPoint canonical(const GridSpec& spec, GridPoint p) {
  if (p.is_branch()) {
    const int low = spec.circle().lower_position(spec.circle().label(p.a));
    p = {low, low};
  }
  return p;
}

}  // namespace

FloerGenerator make_floer_generator(const GridSpec& spec, std::vector<GridPoint> points) {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  for (auto& p : points) {
    if (!spec.allowed(p.a, p.b)) {
      throw std::invalid_argument("cell (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                                  ") is not in the " + to_string(spec.mode()) + " diagram");
    }
    p = canonical(spec, p);
    const std::uint32_t sb = 1U << (column_label(spec, p) - 1);
    const std::uint32_t tb = 1U << (row_label(spec, p) - 1);
    if ((s & sb) || (t & tb)) throw std::invalid_argument("repeated label in Floer generator");
    s |= sb;
    t |= tb;
  }
  std::sort(points.begin(), points.end());
  return FloerGenerator{std::move(points), IdempotentClass(s), IdempotentClass(t)};
}

std::vector<GridPoint> avatars(const GridSpec& spec, const GridPoint& p) {
  if (!p.is_branch()) return {p};
  const auto& pos = spec.circle().positions(spec.circle().label(p.a));
  return {{pos[0], pos[0]}, {pos[1], pos[1]}};
}

std::vector<GridPoint> intersection_points(const GridSpec& spec, int i, int j) {
  std::vector<GridPoint> out;
  const auto& pmc = spec.circle();
  for (int a : pmc.positions(i)) {
    for (int b : pmc.positions(j)) {
      if (!spec.allowed(a, b)) continue;
      const GridPoint p = canonical(spec, {a, b});
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int intersection_pattern(const GridSpec& spec, int i, int j) {
  return static_cast<int>(intersection_points(spec, i, j).size());
}

std::vector<FloerGenerator> enumerate_floer_generators(const GridSpec& spec, IdempotentClass s,
                                                       IdempotentClass t) {
  std::vector<FloerGenerator> out;
  if (s.size() != t.size()) return out;
  const auto sources = s.labels();
  const auto targets = t.labels();
  std::vector<bool> used(targets.size(), false);
  std::vector<GridPoint> current;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == sources.size()) {
      out.push_back(make_floer_generator(spec, current));
      return;
    }
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      if (used[ti]) continue;
      used[ti] = true;
      for (const GridPoint& p : intersection_points(spec, sources[idx], targets[ti])) {
        current.push_back(p);
        self(self, idx + 1);
        current.pop_back();
      }
      used[ti] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

MatchedGenerator to_algebra(const GridSpec& spec, const FloerGenerator& x) {
  std::vector<Chord> chords;
  std::vector<int> dotted;
  for (const GridPoint& p : x.points) {
    if (!spec.allowed(p.a, p.b)) throw std::invalid_argument("grid point outside the diagram");
    if (p.is_branch()) {
      dotted.push_back(spec.circle().label(p.a));
    } else {
      chords.push_back({p.a, p.b});
    }
  }
  return make_generator(spec.circle(), std::move(chords), std::move(dotted));
}

FloerGenerator from_algebra(const GridSpec& spec, const MatchedGenerator& gen) {
  std::vector<GridPoint> points;
  for (const Chord& c : gen.chords) points.push_back({c.start, c.end});
  for (int l : gen.dotted) {
    const int p = spec.circle().lower_position(l);
    points.push_back({p, p});
  }
  return make_floer_generator(spec, std::move(points));
}

std::vector<RectangleTerm> empty_rectangles(const GridSpec& spec, const FloerGenerator& x) {
  // Every cell any point of x occupies; branch points contribute both avatars.
  std::vector<std::pair<GridPoint, std::size_t>> cells;
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    for (const GridPoint& av : avatars(spec, x.points[i])) cells.emplace_back(av, i);
  }

  std::vector<RectangleTerm> out;
  for (const auto& [upper, ui] : cells) {
    if (upper.is_branch()) continue;  // the (c1, r2) corner has c1 < r2
    for (const auto& [lower, li] : cells) {
      if (li == ui) continue;
      const Rectangle rect{upper.a, lower.a, lower.b, upper.b};
      if (!(rect.c1 < rect.c2 && rect.c2 <= rect.r1 && rect.r1 < rect.r2)) continue;
      if (!spec.allowed(rect.c1, rect.r1) || !spec.allowed(rect.c2, rect.r2) ||
          !spec.allowed(rect.c1, rect.r2) || !spec.allowed(rect.c2, rect.r1)) {
        continue;
      }
      const bool empty = std::none_of(cells.begin(), cells.end(), [&](const auto& cell) {
        const GridPoint& p = cell.first;
        return rect.c1 < p.a && p.a < rect.c2 && rect.r1 < p.b && p.b < rect.r2;
      });
      if (!empty) continue;
      std::vector<GridPoint> points;
      for (std::size_t i = 0; i < x.points.size(); ++i) {
        if (i != ui && i != li) points.push_back(x.points[i]);
      }
      points.push_back({rect.c1, rect.r1});
      points.push_back({rect.c2, rect.r2});
      out.push_back({rect, make_floer_generator(spec, std::move(points))});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RectangleTerm& l, const RectangleTerm& r) { return l.rectangle < r.rectangle; });
  return out;
}

GF2Sum<FloerGenerator> floer_differential(const GridSpec& spec, const FloerGenerator& x) {
  GF2Sum<FloerGenerator> out;
  for (auto& term : empty_rectangles(spec, x)) out.toggle(std::move(term.target));
  return out;
}

namespace {

Sheet sheet_of(const GridSpec& spec, int c, int m, int r) {
  if (spec.mode() != GridMode::half) return Sheet::none;
  if (c == m && m == r) return Sheet::both;
  return r <= spec.circle().split() ? Sheet::front : Sheet::back;
}

bool crosses(int a, int b, int a2, int b2) { return (a - a2) * (b - b2) < 0; }

std::optional<Triangle> make_triangle(const GridSpec& spec, int c, int m, int r) {
  if (!(c <= m && m <= r)) return std::nullopt;
  if (!spec.allowed(c, m) || !spec.allowed(m, r) || !spec.allowed(c, r)) return std::nullopt;
  return Triangle{c, m, r, sheet_of(spec, c, m, r)};
}

}  // namespace

std::vector<Triangle> triangles(const GridSpec& spec) {
  std::vector<Triangle> out;
  const int n = spec.size();
  for (int c = 1; c <= n; ++c) {
    for (int m = c; m <= n; ++m) {
      for (int r = m; r <= n; ++r) {
        if (auto t = make_triangle(spec, c, m, r)) out.push_back(*t);
      }
    }
  }
  return out;
}

std::string to_string(Overlap o) {
  switch (o) {
    case Overlap::disjoint:
      return "disjoint";
    case Overlap::head_to_tail:
      return "head_to_tail";
    case Overlap::forbidden:
      return "forbidden";
  }
  return "?";
}

Overlap overlap_class(const GridSpec& spec, const Triangle& lhs, const Triangle& rhs) {
  if (lhs.degenerate() || rhs.degenerate()) return Overlap::disjoint;
  if (spec.mode() == GridMode::half && lhs.sheet != rhs.sheet) return Overlap::disjoint;
  const int first = crosses(lhs.c, lhs.m, rhs.c, rhs.m) ? 1 : 0;
  const int second = crosses(lhs.m, lhs.r, rhs.m, rhs.r) ? 1 : 0;
  const int composite = crosses(lhs.c, lhs.r, rhs.c, rhs.r) ? 1 : 0;
  if (first + second != composite) return Overlap::forbidden;
  return first + second == 1 ? Overlap::head_to_tail : Overlap::disjoint;
}

bool forbidden_by_inequality(const Triangle& lhs, const Triangle& rhs) {
  if (lhs.c == rhs.c) return false;
  const Triangle& t = lhs.c < rhs.c ? lhs : rhs;
  const Triangle& u = lhs.c < rhs.c ? rhs : lhs;
  return t.c < u.c && u.c <= u.m && u.m < t.m && t.m <= t.r && t.r < u.r;
}

std::optional<std::vector<Triangle>> triangle_tuple(const GridSpec& spec, const FloerGenerator& x,
                                                    const FloerGenerator& y) {
  if (x.t != y.s || x.points.size() != y.points.size()) return std::nullopt;
  const auto& pmc = spec.circle();
  std::vector<Triangle> out;
  for (const GridPoint& p : x.points) {
    const int label = pmc.label(p.b);
    auto q = std::find_if(y.points.begin(), y.points.end(),
                          [&](const GridPoint& cand) { return pmc.label(cand.a) == label; });
    int c = 0;
    int m = 0;
    int r = 0;
    if (p.is_branch() && q->is_branch()) {
      c = m = r = p.a;
    } else if (p.is_branch()) {
      c = m = q->a;
      r = q->b;
    } else if (q->is_branch()) {
      c = p.a;
      m = r = p.b;
    } else {
      if (p.b != q->a) return std::nullopt;
      c = p.a;
      m = p.b;
      r = q->b;
    }
    auto t = make_triangle(spec, c, m, r);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FloerGenerator triangle_output(const GridSpec& spec, const std::vector<Triangle>& tuple) {
  std::vector<GridPoint> points;
  points.reserve(tuple.size());
  for (const Triangle& t : tuple) points.push_back({t.c, t.r});
  return make_floer_generator(spec, std::move(points));
}

GF2Sum<FloerGenerator> floer_product(const GridSpec& spec, const FloerGenerator& x,
                                     const FloerGenerator& y) {
  auto tuple = triangle_tuple(spec, x, y);
  if (!tuple) return {};
  for (std::size_t i = 0; i < tuple->size(); ++i) {
    for (std::size_t j = i + 1; j < tuple->size(); ++j) {
      if (overlap_class(spec, (*tuple)[i], (*tuple)[j]) == Overlap::forbidden) return {};
    }
  }
  return GF2Sum<FloerGenerator>(triangle_output(spec, *tuple));
}

std::string describe(const FloerGenerator& x) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    os << (i ? " " : "") << '(' << x.points[i].a << ',' << x.points[i].b << ')';
  }
  os << '>';
  return os.str();
}

}  // namespace strandfloer
