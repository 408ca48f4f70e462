#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strandfloer/circle.hpp"

using namespace strandfloer;

TEST_SUITE("circle") {
  TEST_CASE("standard matching pairs position i with i + 2g") {
    const auto g1 = PointedMatchedCircle::standard(1);
    CHECK(g1.pairs() == std::vector<std::array<int, 2>>{{1, 3}, {2, 4}});
    CHECK(g1.label(1) == 1);
    CHECK(g1.label(4) == 2);

    const auto g2 = PointedMatchedCircle::standard(2);
    CHECK(g2.pairs() == std::vector<std::array<int, 2>>{{1, 5}, {2, 6}, {3, 7}, {4, 8}});
    CHECK(g2.partner(2) == 6);

    CHECK(PointedMatchedCircle::standard(3).partner(4) == 10);
    CHECK_THROWS_AS(PointedMatchedCircle::standard(0), std::invalid_argument);
  }

  TEST_CASE("split sits between 2g and 2g + 1") {
    const auto pmc = PointedMatchedCircle::standard(2, CircleMode::pair);
    CHECK(pmc.mode() == CircleMode::pair);
    CHECK(pmc.split() == 4);
    CHECK(pmc.crosses_split(4, 5));
    CHECK(pmc.crosses_split(1, 8));
    CHECK_FALSE(pmc.crosses_split(5, 8));
    CHECK_FALSE(pmc.crosses_split(1, 4));
    CHECK(to_string(CircleMode::pair) == "double");
    CHECK(circle_mode_from_string("single") == CircleMode::single);
    CHECK_THROWS_AS(circle_mode_from_string("triple"), std::invalid_argument);
  }

  TEST_CASE("malformed matchings are rejected") {
    using Pairs = std::vector<std::array<int, 2>>;
    CHECK_THROWS_AS(PointedMatchedCircle(Pairs{{1, 2}}, CircleMode::single), std::invalid_argument);
    CHECK_THROWS_AS(PointedMatchedCircle(Pairs{{1, 2}, {2, 3}}, CircleMode::single), std::invalid_argument);
    CHECK_THROWS_AS(PointedMatchedCircle(Pairs{{1, 2}, {3, 5}}, CircleMode::single), std::invalid_argument);
    CHECK_THROWS_AS(PointedMatchedCircle(Pairs{}, CircleMode::single), std::invalid_argument);
    // Pair order inside the input does not matter.
    const PointedMatchedCircle swapped(Pairs{{3, 1}, {4, 2}}, CircleMode::single);
    CHECK(swapped == PointedMatchedCircle::standard(1));
  }

  TEST_CASE("genus one matchings") {
    using Pairs = std::vector<std::array<int, 2>>;
    const auto torus = validate_surface(PointedMatchedCircle(Pairs{{1, 3}, {2, 4}}, CircleMode::single));
    CHECK(torus.boundary_components == 1);
    CHECK(torus.genus == 1);
    CHECK(torus.valid());

    const auto planar = validate_surface(PointedMatchedCircle(Pairs{{1, 2}, {3, 4}}, CircleMode::single));
    CHECK(planar.boundary_components == 3);
    CHECK(planar.genus == 0);
    CHECK_FALSE(planar.valid());

    int valid = 0;
    for (const auto& m : oracle::all_matchings(2)) {
      if (validate_surface(PointedMatchedCircle(m, CircleMode::single)).valid()) ++valid;
    }
    CHECK(valid == 1);
  }

  TEST_CASE("boundary walk agrees with the interleaving form on every small matching") {
    for (int n : {2, 4, 6}) {
      for (const auto& m : oracle::all_matchings(n)) {
        const auto inv = validate_surface(PointedMatchedCircle(m, CircleMode::single));
        CHECK(inv.boundary_components == oracle::interleaving_boundaries(m));
        CHECK(inv.genus == oracle::interleaving_genus(m));
        CHECK(inv.euler_characteristic == 1 - n);
        CHECK(2 * inv.genus + inv.boundary_components == 1 + n);
        CHECK(inv.euler_characteristic == 2 - 2 * inv.genus - inv.boundary_components);
      }
    }
  }

  TEST_CASE("boundary walk agrees with the interleaving form on random matchings") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
      std::vector<int> pos(2 * n);
      std::iota(pos.begin(), pos.end(), 1);
      std::shuffle(pos.begin(), pos.end(), rng);
      std::vector<std::array<int, 2>> pairs;
      for (int i = 0; i < n; ++i) pairs.push_back({pos[2 * i], pos[2 * i + 1]});
      const auto inv = validate_surface(PointedMatchedCircle(pairs, CircleMode::single));
      CHECK(inv.boundary_components == oracle::interleaving_boundaries(pairs));
      CHECK(inv.euler_characteristic == 1 - n);
    }
  }

  TEST_CASE("standard matchings present a genus g surface with one boundary") {
    for (int g = 1; g <= 6; ++g) {
      const auto inv = validate_surface(PointedMatchedCircle::standard(g));
      CHECK(inv.boundary_components == 1);
      CHECK(inv.genus == g);
      CHECK(inv.euler_characteristic == 1 - 2 * g);
    }
  }

  TEST_CASE("idempotent classes") {
    const auto s = IdempotentClass::from_labels({3, 1});
    CHECK(s.labels() == std::vector<int>{1, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(IdempotentClass::from_labels({1, 2}) < IdempotentClass::from_labels({1, 3}));
    CHECK(IdempotentClass::from_labels({1, 4}) < IdempotentClass::from_labels({2, 3}));
    CHECK(IdempotentClass::from_labels({1}) < IdempotentClass::from_labels({1, 2}));
    CHECK_THROWS_AS(IdempotentClass::from_labels({1, 1}), std::invalid_argument);
  }

  TEST_CASE("idempotent and thimble counts match binomials") {
    for (int g = 1; g <= 6; ++g) {
      const auto pmc = PointedMatchedCircle::standard(g);
      for (int k = 0; k <= 2 * g; ++k) {
        const auto idems = idempotents(pmc, k);
        CHECK(idems.size() == oracle::binomial(2 * g, k));
        CHECK(std::is_sorted(idems.begin(), idems.end()));
        for (const auto& s : idems) CHECK(s.size() == k);
      }
      for (int k = 0; k <= 2 * g + 1; ++k) {
        CHECK(thimble_indices(pmc, k).size() == oracle::binomial(2 * g + 1, k));
      }
    }
  }

  TEST_CASE("idempotent examples") {
    CHECK(idempotents(PointedMatchedCircle::standard(2), 2).size() == 6);
    const auto g1 = idempotents(PointedMatchedCircle::standard(1), 1);
    REQUIRE(g1.size() == 2);
    CHECK(g1[0].labels() == std::vector<int>{1});
    CHECK(g1[1].labels() == std::vector<int>{2});
    const auto empty = idempotents(PointedMatchedCircle::standard(3), 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].labels().empty());
    CHECK_THROWS_AS(idempotents(PointedMatchedCircle::standard(1), 3), std::out_of_range);
    CHECK_THROWS_AS(idempotents(PointedMatchedCircle::standard(1), -1), std::out_of_range);
  }
}
