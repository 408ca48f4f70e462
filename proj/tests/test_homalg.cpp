#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "strandfloer/homalg.hpp"
#include "strandfloer/linalg.hpp"

using namespace strandfloer;

namespace {

BooleanMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  BooleanMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng() & 1U) m.set(i, j);
    }
  }
  return m;
}

std::vector<std::uint32_t> packed_rows(const BooleanMatrix& m) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint32_t r = 0;
    for (int j : m.row(i)) r |= 1U << j;
    out.push_back(r);
  }
  return out;
}

std::size_t count_at(const RightDGModule& m, int s) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < m.dim(); ++x) n += m.idempotent(x) == s ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("homalg") {
  TEST_CASE("bit vectors") {
    BitVector v(130);
    v.set(3);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.first_set() == 3);
    CHECK(v.next_set(4) == 64);
    CHECK(v.next_set(130) == 130);
    CHECK(v.indices() == std::vector<int>{3, 64, 129});
    v ^= BitVector::from_indices(130, {3, 129});
    CHECK(v == BitVector::unit(130, 64));
    v.flip(64);
    CHECK_FALSE(v.any());
    CHECK(v.first_set() == 130);
  }

  TEST_CASE("matrix algebra") {
    const auto m = BooleanMatrix::from_columns(3, {{0, 2}, {1}, {}});
    CHECK(m.get(0, 0));
    CHECK(m.get(2, 0));
    CHECK_FALSE(m.get(2, 1));
    CHECK(m.nonzeros() == 3);
    CHECK(m.apply(BitVector::unit(3, 0)) == BitVector::from_indices(3, {0, 2}));
    CHECK(m.transpose().transpose() == m);
    CHECK(BooleanMatrix::identity(3) * m == m);
    CHECK((m + m).is_zero());
    CHECK(rank(m) == 2);
  }

  TEST_CASE("rank and nullspace agree with brute force") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
      const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
      const auto m = random_matrix(rng, rows, cols);
      const std::size_t r = rank(m);
      CHECK(static_cast<int>(r) == oracle::span_rank(packed_rows(m)));
      const auto kernel = nullspace(m);
      CHECK(kernel.size() == cols - r);
      for (const auto& v : kernel) {
        CHECK(v.any());
        CHECK_FALSE(m.apply(v).any());
      }
      std::vector<std::uint32_t> packed;
      for (const auto& v : kernel) {
        std::uint32_t p = 0;
        for (int i : v.indices()) p |= 1U << i;
        packed.push_back(p);
      }
      CHECK(static_cast<std::size_t>(oracle::span_rank(packed)) == kernel.size());
    }
  }

  TEST_CASE("echelon basis records provenance") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t dim = 12;
      const std::size_t count = 8;
      std::vector<BitVector> inserted;
      EchelonBasis basis(dim, count);
      for (std::size_t t = 0; t < count; ++t) {
        BitVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          if (rng() % 3 == 0) v.set(i);
        }
        inserted.push_back(v);
        basis.insert(v, t);
      }
      BitVector target(dim);
      for (std::size_t t = 0; t < count; ++t) {
        if (rng() & 1U) target ^= inserted[t];
      }
      const auto tag = basis.express(target);
      REQUIRE(tag.has_value());
      BitVector rebuilt(dim);
      for (int t : tag->indices()) rebuilt ^= inserted[static_cast<std::size_t>(t)];
      CHECK(rebuilt == target);
      CHECK(basis.contains(target));
    }
    EchelonBasis small(3, 1);
    CHECK(small.insert(BitVector::unit(3, 1), std::size_t{0}));
    CHECK_FALSE(small.insert(BitVector::unit(3, 1), std::size_t{0}));
    CHECK_FALSE(small.express(BitVector::unit(3, 2)).has_value());
  }

  TEST_CASE("homology of small complexes") {
    ChainComplex acyclic{{"a", "b"}, BooleanMatrix::from_columns(2, {{1}, {}})};
    CHECK(homology_rank(acyclic) == 0);
    ChainComplex zero{{"a", "b", "c"}, BooleanMatrix(3, 3)};
    CHECK(homology_rank(zero) == 3);
    ChainComplex bad{{"a", "b"}, BooleanMatrix::from_columns(2, {{1}, {0}})};
    CHECK_THROWS_AS(homology_rank(bad), std::logic_error);
  }

  TEST_CASE("hom complexes of the genus one algebra") {
    const StrandsAlgebra alg(PointedMatchedCircle::standard(1), 1, Variant::full);
    CHECK(hom_complex(alg, 0, 1).dim() == 3);
    CHECK(homology_rank(hom_complex(alg, 0, 1)) == 3);
    CHECK(homology_rank(hom_complex(alg, 1, 0)) == 1);
    const StrandsAlgebra two(PointedMatchedCircle::standard(2), 2, Variant::full);
    std::size_t total = 0;
    for (int s = 0; s < two.num_idempotents(); ++s) {
      for (int t = 0; t < two.num_idempotents(); ++t) {
        const auto c = hom_complex(two, s, t);
        CHECK(c.dim() == static_cast<std::size_t>(two.dim(s, t)));
        total += c.dim();
        CHECK(homology_rank(c) <= c.dim());
      }
    }
    CHECK(total == 274);
  }

  TEST_CASE("projective and simple modules satisfy the axioms") {
    for (int g = 1; g <= 2; ++g) {
      for (Variant v : {Variant::full, Variant::half}) {
        StrandsAlgebra alg(PointedMatchedCircle::standard(g), std::min(g, 2), v);
        alg.build_product_table();
        for (int s = 0; s < alg.num_idempotents(); ++s) {
          const auto p = projective_module(alg, s);
          CHECK(p.dim() == static_cast<std::size_t>(alg.row_dim(s)));
          const auto report = verify_module_axioms(p);
          CHECK_MESSAGE(report.ok(), (report.failures.empty() ? "" : report.failures.front()));
          CHECK(report.checked > 0);
          CHECK(verify_module_axioms(simple_module(alg, s)).ok());
        }
      }
    }
  }

  TEST_CASE("a module with a broken action fails the axioms") {
    const StrandsAlgebra alg(PointedMatchedCircle::standard(1), 1, Variant::full);
    std::vector<BooleanMatrix> actions(alg.size(), BooleanMatrix(1, 1));
    const RightDGModule no_unit(alg, {"x"}, {0}, BooleanMatrix(1, 1), actions);
    CHECK_FALSE(verify_module_axioms(no_unit).ok());
    CHECK_THROWS_AS(RightDGModule(alg, {"x"}, {0}, BooleanMatrix(2, 2), actions), std::invalid_argument);
  }

  TEST_CASE("maps out of a projective are its value on the generator") {
    StrandsAlgebra alg(PointedMatchedCircle::standard(2), 2, Variant::full);
    alg.build_product_table();
    for (int s = 0; s < alg.num_idempotents(); ++s) {
      const auto p = projective_module(alg, s);
      for (int t = 0; t < alg.num_idempotents(); ++t) {
        const auto q = projective_module(alg, t);
        const auto mor = mor_complex(p, q);
        CHECK(mor.module_generators == 1);
        CHECK(mor.relations == 0);
        CHECK(mor.complex.dim() == count_at(q, s));
        CHECK(mor.complex.dim() == static_cast<std::size_t>(alg.dim(t, s)));
        CHECK(mor_complex(p, simple_module(alg, t)).complex.dim() == (s == t ? 1U : 0U));
      }
    }
  }

  TEST_CASE("maps between simple modules") {
    StrandsAlgebra alg(PointedMatchedCircle::standard(1), 1, Variant::full);
    alg.build_product_table();
    for (int s = 0; s < alg.num_idempotents(); ++s) {
      for (int t = 0; t < alg.num_idempotents(); ++t) {
        const auto mor = mor_complex(simple_module(alg, s), simple_module(alg, t));
        CHECK(mor.module_generators == 1);
        CHECK(mor.complex.dim() == (s == t ? 1U : 0U));
        CHECK(homology_rank(mor.complex) == (s == t ? 1U : 0U));
      }
    }
    const StrandsAlgebra other(PointedMatchedCircle::standard(1), 1, Variant::half);
    CHECK_THROWS_AS(mor_complex(simple_module(alg, 0), simple_module(other, 0)), std::invalid_argument);
  }

  TEST_CASE("maps out of a simple module into a projective") {
    StrandsAlgebra alg(PointedMatchedCircle::standard(2), 1, Variant::full);
    alg.build_product_table();
    for (int s = 0; s < alg.num_idempotents(); ++s) {
      const auto m = simple_module(alg, s);
      for (int t = 0; t < alg.num_idempotents(); ++t) {
        const auto mor = mor_complex(m, projective_module(alg, t));
        CHECK(mor.module_generators == 1);
        CHECK(mor.complex.dim() <= static_cast<std::size_t>(alg.dim(t, s)));
        CHECK_NOTHROW(homology_rank(mor.complex));
      }
    }
  }

  TEST_CASE("Yoneda on the genus one algebra") {
    StrandsAlgebra alg(PointedMatchedCircle::standard(1), 1, Variant::full);
    alg.build_product_table();
    const std::size_t expected[2][2] = {{2, 1}, {3, 2}};
    for (int s = 0; s < 2; ++s) {
      for (int t = 0; t < 2; ++t) {
        const auto r = yoneda_check(alg, s, t);
        CHECK(r.ok());
        CHECK(r.mor_rank == expected[s][t]);
        CHECK(r.algebra_rank == homology_rank(hom_complex(alg, t, s)));
      }
    }
  }

  TEST_CASE("Yoneda up to genus two") {
    for (int k = 0; k <= 4; ++k) {
      for (Variant v : {Variant::full, Variant::half}) {
        StrandsAlgebra alg(PointedMatchedCircle::standard(2), k, v, 2);
        if (alg.size() > 700) continue;
        alg.build_product_table(2);
        for (int s = 0; s < alg.num_idempotents(); ++s) {
          for (int t = 0; t < alg.num_idempotents(); ++t) {
            const auto r = yoneda_check(alg, s, t);
            CHECK_MESSAGE(r.ok(), "k=" << k << " " << to_string(v) << " s=" << s << " t=" << t);
          }
        }
      }
    }
  }
}
