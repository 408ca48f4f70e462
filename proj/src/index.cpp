#include "strandfloer/index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "strandfloer/parallel.hpp"

namespace strandfloer {

Quarters Quarters::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || 4 % den != 0) throw std::invalid_argument("denominator must divide 4");
  return {num * (4 / den)};
}

std::string Quarters::str() const {
  if (is_integer()) return std::to_string(q / 4);
  const std::int64_t g = std::gcd(q < 0 ? -q : q, std::int64_t{4});
  return std::to_string(q / g) + "/" + std::to_string(4 / g);
}

Quarters euler_measure(const Domain& d) {
  Quarters e;
  for (const Piece& p : d.pieces) e.q += 4 - p.corners;
  return e;
}

Quarters maslov(const Domain& d) {
  const Quarters e = euler_measure(d);
  return Quarters::whole(d.diag_intersections) + e * 2 -
         Quarters::of(static_cast<std::int64_t>(d.inputs - 1) * d.k, 2);
}

Domain disjoint_union(const Domain& lhs, const Domain& rhs) {
  if (lhs.inputs != rhs.inputs) throw std::invalid_argument("domains have different input counts");
  Domain out = lhs;
  out.pieces.insert(out.pieces.end(), rhs.pieces.begin(), rhs.pieces.end());
  out.diag_intersections += rhs.diag_intersections;
  out.k += rhs.k;
  return out;
}

Domain rectangle_domain(const GridSpec& spec, const FloerGenerator& x, const Rectangle& rect) {
  Domain d;
  d.pieces.push_back(Piece::rectangle());
  d.inputs = 1;
  d.k = static_cast<int>(x.points.size());
  for (const GridPoint& p : x.points) {
    for (const GridPoint& av : avatars(spec, p)) {
      if (rect.c1 < av.a && av.a < rect.c2 && rect.r1 < av.b && av.b < rect.r2) {
        ++d.diag_intersections;
      }
    }
  }
  return d;
}

Domain product_domain(const GridSpec& spec, const std::vector<Triangle>& tuple) {
  Domain d;
  d.inputs = 2;
  d.k = static_cast<int>(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    d.pieces.push_back(Piece::triangle());
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (overlap_class(spec, tuple[i], tuple[j]) == Overlap::forbidden) ++d.diag_intersections;
    }
  }
  return d;
}

namespace {

struct Track {
  std::vector<Chord> layers;
  bool horizontal = true;
};

int crossing(const Chord& x, const Chord& y) {
  return (x.start - y.start) * (x.end - y.end) < 0 ? 1 : 0;
}

}  // namespace

std::optional<Domain> chain_domain(const GridSpec& spec, const std::vector<FloerGenerator>& chain) {
  if (chain.size() < 2) return std::nullopt;
  const auto& pmc = spec.circle();
  const int k = static_cast<int>(chain.front().points.size());

  // Tracks are keyed by the label of their starting column, which every
  // triangle preserves.
  std::map<int, Track> tracks;
  Domain d;
  d.inputs = static_cast<int>(chain.size());
  d.k = k;

  FloerGenerator current = chain.front();
  for (std::size_t j = 1; j < chain.size(); ++j) {
    auto tuple = triangle_tuple(spec, current, chain[j]);
    if (!tuple) return std::nullopt;
    for (const Triangle& t : *tuple) {
      d.pieces.push_back(Piece::triangle());
      Track& track = tracks[pmc.label(t.c)];
      if (j == 1) {
        track.layers.push_back({t.c, t.m});
        track.horizontal = t.c == t.m;
      } else if (track.horizontal) {
        // A dotted track may settle on either avatar; earlier layers follow it.
        for (Chord& layer : track.layers) layer = {t.c, t.c};
      }
      track.layers.push_back({t.m, t.r});
      track.horizontal = track.horizontal && t.m == t.r;
    }
    current = triangle_output(spec, *tuple);
  }

  std::vector<const Track*> list;
  for (const auto& [label, track] : tracks) list.push_back(&track);
  for (std::size_t a = 0; a < list.size(); ++a) {
    for (std::size_t b = a + 1; b < list.size(); ++b) {
      const auto& la = list[a]->layers;
      const auto& lb = list[b]->layers;
      int layered = 0;
      for (std::size_t l = 0; l < la.size(); ++l) layered += crossing(la[l], lb[l]);
      const int composite =
          crossing({la.front().start, la.back().end}, {lb.front().start, lb.back().end});
      d.diag_intersections += (layered - composite) / 2;
    }
  }
  return d;
}

ChainCheck check_chain(const GridSpec& spec, const std::vector<FloerGenerator>& chain) {
  ChainCheck out;
  if (chain.size() < 2) throw std::invalid_argument("a chain needs at least two generators");
  const auto describe_chain = [&] {
    std::string text;
    for (const auto& x : chain) text += " " + describe(x);
    return text;
  };

  FloerGenerator prefix = chain.front();
  for (std::size_t j = 1; j + 1 < chain.size(); ++j) {
    const auto p = floer_product(spec, prefix, chain[j]);
    if (p.empty()) {
      out.violation = "uncounted prefix in chain" + describe_chain();
      return out;
    }
    prefix = p.terms().front();
  }

  auto domain = chain_domain(spec, chain);
  if (!domain) return out;
  out.domain = true;
  out.counted = !floer_product(spec, prefix, chain.back()).empty();

  const int ell = static_cast<int>(chain.size());
  const Quarters e = euler_measure(*domain);
  const Quarters mu = maslov(*domain);
  std::string what;
  if (e != Quarters::of(static_cast<std::int64_t>(ell - 1) * domain->k, 4)) {
    what = "Euler measure " + e.str();
  } else if (!mu.is_integer() || mu < Quarters{} ||
             mu != Quarters::whole(domain->diag_intersections)) {
    what = "Maslov index " + mu.str();
  } else if (ell >= 3 && mu == Quarters::whole(2 - ell)) {
    what = "rigid higher domain";
  } else if (out.counted != (mu == Quarters{})) {
    what = "counted product disagrees with Maslov index " + mu.str();
  }
  if (!what.empty()) out.violation = what + " on chain" + describe_chain();
  return out;
}

RigidityReport verify_rigidity(const GridSpec& spec, int k, int ell_max, int threads) {
  if (ell_max < 2) throw std::invalid_argument("ell_max must be at least 2");
  RigidityReport report;
  report.ell_max = ell_max;

  const auto idems = idempotents(spec.circle(), k);
  std::map<std::uint32_t, std::vector<FloerGenerator>> by_source;
  std::vector<FloerGenerator> all;
  for (const auto& s : idems) {
    auto& row = by_source[s.mask()];
    for (const auto& t : idems) {
      auto block = enumerate_floer_generators(spec, s, t);
      row.insert(row.end(), block.begin(), block.end());
    }
    all.insert(all.end(), row.begin(), row.end());
  }

  std::mutex mutex;
  parallel_for(all.size(), threads, [&](std::size_t first) {
    std::uint64_t checked = 0;
    std::uint64_t counted = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> violations;
    std::vector<FloerGenerator> chain{all[first]};

    auto walk = [&](auto&& self, const FloerGenerator& product) -> void {
      for (const FloerGenerator& next : by_source.at(product.t.mask())) {
        chain.push_back(next);
        const ChainCheck c = check_chain(spec, chain);
        if (c.domain) ++checked;
        if (!c.violation.empty() && ++failures <= 8) violations.push_back(c.violation);
        if (c.counted) {
          ++counted;
          if (static_cast<int>(chain.size()) < ell_max) {
            self(self, floer_product(spec, product, next).terms().front());
          }
        }
        chain.pop_back();
      }
    };
    walk(walk, all[first]);

    std::lock_guard lock(mutex);
    report.checked += checked;
    report.counted += counted;
    report.violation_count += failures;
    report.violations.insert(report.violations.end(), violations.begin(), violations.end());
  });
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > 32) report.violations.resize(32);
  return report;
}

}  // namespace strandfloer
