#include "strandfloer/circle.hpp"

#include <bit>
#include <stdexcept>

namespace strandfloer {

std::string to_string(CircleMode mode) { return mode == CircleMode::single ? "single" : "double"; }

CircleMode circle_mode_from_string(const std::string& name) {
  if (name == "single") return CircleMode::single;
  if (name == "double") return CircleMode::pair;
  throw std::invalid_argument("unknown circle mode '" + name + "' (expected single|double)");
}

IdempotentClass IdempotentClass::from_labels(const std::vector<int>& labels) {
  std::uint32_t mask = 0;
  for (int l : labels) {
    if (l < 1 || l > 32) throw std::invalid_argument("idempotent label out of range");
    if ((mask >> (l - 1)) & 1U) throw std::invalid_argument("repeated idempotent label");
    mask |= 1U << (l - 1);
  }
  return IdempotentClass(mask);
}

int IdempotentClass::size() const { return std::popcount(mask_); }

std::vector<int> IdempotentClass::labels() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering IdempotentClass::operator<=>(const IdempotentClass& other) const {
  // Lexicographic on ascending label lists: compare lowest differing label.
  std::uint32_t a = mask_;
  std::uint32_t b = other.mask_;
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la <=> lb;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return std::strong_ordering::equal;
  return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

PointedMatchedCircle PointedMatchedCircle::standard(int genus, CircleMode mode) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  std::vector<std::array<int, 2>> pairs;
  for (int i = 1; i <= 2 * genus; ++i) pairs.push_back({i, i + 2 * genus});
  return PointedMatchedCircle(std::move(pairs), mode);
}

PointedMatchedCircle::PointedMatchedCircle(std::vector<std::array<int, 2>> pairs, CircleMode mode)
    : pairs_(std::move(pairs)), mode_(mode) {
  const int n = num_pairs();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("a matched circle needs 2g pairs with g >= 1, got " +
                                std::to_string(n));
  }
  if (n > 24) throw std::invalid_argument("at most 24 pairs are supported");
  label_of_.assign(2 * n + 1, 0);
  partner_of_.assign(2 * n + 1, 0);
  for (int l = 1; l <= n; ++l) {
    auto& pr = pairs_[l - 1];
    if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
    for (int p : pr) {
      if (p < 1 || p > 2 * n) {
        throw std::invalid_argument("position " + std::to_string(p) + " outside 1.." +
                                    std::to_string(2 * n));
      }
      if (label_of_[p] != 0) {
        throw std::invalid_argument("position " + std::to_string(p) + " matched twice");
      }
      label_of_[p] = l;
    }
    partner_of_[pr[0]] = pr[1];
    partner_of_[pr[1]] = pr[0];
  }
}

SurfaceInvariants validate_surface(const PointedMatchedCircle& pmc) {
  const int points = pmc.num_points();
  // Corner 2(p-1) sits just before position p on the disc boundary, corner
  // 2(p-1)+1 just after it. Leaving an "after" corner we follow the disc to
  // the next band end; leaving a "before" corner we cross the band and come
  // out after the partner position.
  auto next = [&](int corner) {
    const int p = corner / 2 + 1;
    if (corner % 2 == 1) {
      const int q = p % points + 1;
      return 2 * (q - 1);
    }
    return 2 * (pmc.partner(p) - 1) + 1;
  };

  std::vector<bool> seen(2 * points, false);
  int cycles = 0;
  for (int c = 0; c < 2 * points; ++c) {
    if (seen[c]) continue;
    ++cycles;
    for (int d = c; !seen[d]; d = next(d)) seen[d] = true;
  }

  SurfaceInvariants out;
  out.boundary_components = cycles;
  out.euler_characteristic = 1 - pmc.num_pairs();
  out.genus = (1 + pmc.num_pairs() - cycles) / 2;
  return out;
}

std::vector<IdempotentClass> k_subsets(int n, int k) {
  if (n < 0 || n > 32) throw std::out_of_range("subset universe must have 0..32 elements");
  if (k < 0 || k > n) throw std::out_of_range("subset size out of range");
  std::vector<IdempotentClass> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(IdempotentClass::from_labels(current));
      return;
    }
    for (int l = next; l <= n - (k - static_cast<int>(current.size())) + 1; ++l) {
      current.push_back(l);
      self(self, l + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<IdempotentClass> idempotents(const PointedMatchedCircle& pmc, int k) {
  if (k < 0 || k > pmc.num_pairs()) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 0.." +
                            std::to_string(pmc.num_pairs()));
  }
  return k_subsets(pmc.num_pairs(), k);
}

std::vector<IdempotentClass> thimble_indices(const PointedMatchedCircle& pmc, int k) {
  return k_subsets(pmc.num_pairs() + 1, k);
}

}  // namespace strandfloer
