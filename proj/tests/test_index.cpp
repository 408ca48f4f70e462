#include <doctest.h>

#include <random>

#include "strandfloer/index.hpp"

using namespace strandfloer;

TEST_SUITE("index") {
  TEST_CASE("quarters") {
    CHECK(Quarters::of(1, 2).q == 2);
    CHECK(Quarters::of(3, 4).str() == "3/4");
    CHECK(Quarters::of(-1, 2).str() == "-1/2");
    CHECK(Quarters::whole(3).str() == "3");
    CHECK(Quarters::of(2, 4) == Quarters::of(1, 2));
    CHECK(Quarters::of(1, 4) < Quarters::of(1, 2));
    CHECK((Quarters::of(1, 4) * 4).is_integer());
    CHECK_FALSE(Quarters::of(3, 2).is_integer());
    CHECK_THROWS_AS(Quarters::of(1, 3), std::invalid_argument);
  }

  TEST_CASE("Euler measure of basic pieces") {
    CHECK(euler_measure({{Piece::rectangle()}}) == Quarters{});
    CHECK(euler_measure({{Piece::triangle()}}) == Quarters::of(1, 4));
    CHECK(euler_measure({{Piece::polygon(2)}}) == Quarters::of(1, 2));
    CHECK(euler_measure({{Piece::polygon(6)}}) == Quarters::of(-1, 2));
    CHECK(euler_measure({{Piece::triangle(), Piece::triangle(), Piece::polygon(5)}}) == Quarters::of(1, 4));
  }

  TEST_CASE("Euler measure and Maslov index add under disjoint union") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      auto random_domain = [&] {
        Domain d;
        d.inputs = 3;
        const int n = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int i = 0; i < n; ++i) d.pieces.push_back(Piece::polygon(std::uniform_int_distribution<int>(2, 8)(rng)));
        d.diag_intersections = std::uniform_int_distribution<int>(0, 4)(rng);
        d.k = std::uniform_int_distribution<int>(0, 4)(rng);
        return d;
      };
      const Domain a = random_domain();
      const Domain b = random_domain();
      const Domain u = disjoint_union(a, b);
      CHECK(euler_measure(u) == euler_measure(a) + euler_measure(b));
      CHECK(maslov(u) == maslov(a) + maslov(b));
    }
    Domain two;
    two.inputs = 2;
    CHECK_THROWS_AS(disjoint_union(Domain{}, two), std::invalid_argument);
  }

  TEST_CASE("Maslov index examples") {
    Domain d;
    d.pieces = {Piece::triangle(), Piece::triangle()};
    d.inputs = 2;
    d.k = 2;
    CHECK(maslov(d) == Quarters{});
    d.diag_intersections = 1;
    CHECK(maslov(d) == Quarters::whole(1));

    Domain three;
    three.pieces = {Piece::triangle(), Piece::triangle()};
    three.inputs = 3;
    three.k = 1;
    CHECK(maslov(three) == Quarters{});
    three.pieces.pop_back();
    CHECK(maslov(three) == Quarters::of(-1, 2));
  }

  TEST_CASE("rectangle domains count interior points") {
    const GridSpec spec(PointedMatchedCircle::standard(2), GridMode::wrapped);
    const auto x = make_floer_generator(spec, {{1, 8}, {3, 5}, {2, 7}});
    const Domain blocked = rectangle_domain(spec, x, {1, 3, 5, 8});
    CHECK(blocked.diag_intersections == 1);
    CHECK(maslov(blocked) == Quarters::whole(1));
    for (const auto& term : empty_rectangles(spec, x)) {
      CHECK(maslov(rectangle_domain(spec, x, term.rectangle)) == Quarters{});
    }
  }

  TEST_CASE("product domains have Maslov index equal to the forbidden pairs") {
    const GridSpec spec(PointedMatchedCircle::standard(2), GridMode::wrapped);
    for (int k = 1; k <= 3; ++k) {
      const auto ids = idempotents(spec.circle(), k);
      for (const auto& s : ids) {
        for (const auto& t : ids) {
          for (const auto& u : ids) {
            for (const auto& x : enumerate_floer_generators(spec, s, t)) {
              for (const auto& y : enumerate_floer_generators(spec, t, u)) {
                const auto tuple = triangle_tuple(spec, x, y);
                if (!tuple) continue;
                const Domain d = product_domain(spec, *tuple);
                CHECK(euler_measure(d) == Quarters::of(k, 4));
                CHECK(maslov(d).is_integer());
                CHECK((maslov(d) == Quarters{}) == !floer_product(spec, x, y).empty());
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("chain domains") {
    const GridSpec spec(PointedMatchedCircle::standard(1), GridMode::wrapped);
    const auto a = make_floer_generator(spec, {{1, 2}});
    const auto b = make_floer_generator(spec, {{2, 3}});
    const auto c = make_floer_generator(spec, {{3, 4}});
    const auto two = chain_domain(spec, {a, b});
    REQUIRE(two.has_value());
    CHECK(two->pieces.size() == 1);
    CHECK(two->diag_intersections == 0);
    CHECK(maslov(*two) == Quarters{});

    const auto three = chain_domain(spec, {a, b, c});
    REQUIRE(three.has_value());
    CHECK(three->inputs == 3);
    CHECK(euler_measure(*three) == Quarters::of(1, 2));
    CHECK(maslov(*three) == Quarters{});
    CHECK_FALSE(chain_domain(spec, {b, a}).has_value());
    CHECK_FALSE(chain_domain(spec, {a}).has_value());

    const ChainCheck check = check_chain(spec, {a, b, c});
    CHECK(check.domain);
    CHECK(check.counted);
    CHECK(check.violation.empty());
    CHECK_THROWS_AS(check_chain(spec, {a}), std::invalid_argument);
  }

  TEST_CASE("chains with forbidden overlaps are not counted") {
    const GridSpec spec(PointedMatchedCircle::standard(2), GridMode::wrapped);
    // (1,4) and (2,3) both continue upward and cross twice.
    const auto x = make_floer_generator(spec, {{1, 4}, {2, 3}});
    const auto y = make_floer_generator(spec, {{4, 5}, {3, 6}});
    const auto tuple = triangle_tuple(spec, x, y);
    REQUIRE(tuple.has_value());
    CHECK(floer_product(spec, x, y).empty());
    const ChainCheck check = check_chain(spec, {x, y});
    CHECK(check.domain);
    CHECK_FALSE(check.counted);
    CHECK(check.violation.empty());
  }

  TEST_CASE("rigidity holds on small diagrams") {
    for (GridMode mode : {GridMode::wrapped, GridMode::half}) {
      for (int g = 1; g <= 2; ++g) {
        const GridSpec spec(PointedMatchedCircle::standard(g), mode);
        for (int k = 1; k <= std::min(2 * g, 3); ++k) {
          const auto report = verify_rigidity(spec, k, 3, 2);
          CHECK_MESSAGE(report.ok(), "g=" << g << " k=" << k << " " << to_string(mode) << ": "
                                          << (report.violations.empty() ? "" : report.violations.front()));
          CHECK(report.checked >= report.counted);
          if (mode == GridMode::wrapped) CHECK(report.counted > 0);
        }
      }
    }
    CHECK_THROWS_AS(verify_rigidity(GridSpec(PointedMatchedCircle::standard(1), GridMode::half), 1, 1),
                    std::invalid_argument);
  }

  TEST_CASE("rigidity is independent of the thread count") {
    const GridSpec spec(PointedMatchedCircle::standard(2), GridMode::wrapped);
    const auto one = verify_rigidity(spec, 2, 3, 1);
    const auto four = verify_rigidity(spec, 2, 3, 4);
    CHECK(one.checked == four.checked);
    CHECK(one.counted == four.counted);
    CHECK(one.violations == four.violations);
  }
}
