#include "catch_amalgamated.hpp"

#include "pseudoquotient/pseudoquotient.hpp"

#include "test_support.hpp"

using namespace pseudoquotient;
using namespace pseudoquotient::testing;

namespace {
  AffineLatticeMap aff1(long m, long b) {
    return AffineLatticeMap(IntMatrix::from_rows({{m}}), IntVector{b});
  }
}  // namespace

TEST_CASE("integer matrices", "[affine-lattice]") {
  auto A = IntMatrix::from_rows({{2, -1, 0}, {1, 3, 4}, {0, 5, -2}});
  CHECK(A.determinant() == -54);
  auto adj = A.adjugate();
  CHECK(A * adj == IntMatrix::identity(3).scaled(A.determinant()));
  CHECK(adj * A == IntMatrix::identity(3).scaled(A.determinant()));
  CHECK(IntMatrix::from_rows({{7}}).adjugate() == IntMatrix::from_rows({{1}}));
  CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto M   = Gen<AffineLattice>::matrix(rng, dim, 5);
    REQUIRE(M * M.adjugate() == IntMatrix::identity(dim).scaled(M.determinant()));
  }
}

TEST_CASE("affine-lattice domain errors", "[affine-lattice]") {
  CHECK_THROWS_AS(AffineLatticeMap(IntMatrix::from_rows({{1, 0}, {0, 0}}),
                                   IntVector{0, 0}),
                  usage_error);
  CHECK_THROWS_AS(AffineLatticeMap(IntMatrix::from_rows({{1}}), IntVector{0, 0}),
                  usage_error);
  AffineLattice in(2);
  CHECK_THROWS_AS(in.apply(aff1(2, 1), IntVector{1, 1}), usage_error);
  CHECK_THROWS_AS(in.apply(AffineLatticeMap::identity(2), IntVector{1}),
                  usage_error);
  CHECK_THROWS_AS(AffineLattice(0), usage_error);
}

TEST_CASE("affine-lattice Ore witness", "[affine-lattice]") {
  SECTION("dimension 1") {
    AffineLattice in(1);
    auto          w = in.ore_complete(aff1(2, 1), aff1(3, 0));
    CHECK(w.f_prime == aff1(2, 3));
    CHECK(w.g_prime == aff1(3, 0));
    CHECK(in.compose(w.f_prime, aff1(3, 0)) == aff1(6, 3));
    CHECK(in.compose(w.g_prime, aff1(2, 1)) == aff1(6, 3));

    auto s = in.ore_complete(aff1(-2, 5), aff1(-2, 5));
    CHECK(s.f_prime == s.g_prime);
  }
  SECTION("dimension 2") {
    AffineLattice in(2);
    AffineLatticeMap f(IntMatrix::from_rows({{1, 1}, {0, 1}}), IntVector{0, 0});
    AffineLatticeMap g(IntMatrix::from_rows({{2, 0}, {0, 1}}), IntVector{1, 0});
    auto             w = in.ore_complete(f, g);
    CHECK(is_ore_witness(in, f, g, w));
    for (long a = -3; a <= 3; ++a) {
      for (long b = -3; b <= 3; ++b) {
        IntVector x{a, b};
        REQUIRE(in.apply(w.f_prime, in.apply(g, x))
                == in.apply(w.g_prime, in.apply(f, x)));
      }
    }
  }
  SECTION("integral for entries in [-5, 5], dimension <= 3") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      AffineLattice in(static_cast<std::size_t>(uniform(rng, 1, 3)));
      auto          f = Gen<AffineLattice>::element(rng, in, 5);
      auto          g = Gen<AffineLattice>::element(rng, in, 5);
      auto          w = in.ore_complete(f, g);
      // entries are integers by type; check against the rational formulas
      auto m1 = Rational(f.matrix().determinant());
      auto m2 = Rational(g.matrix().determinant());
      for (std::size_t r = 0; r < in.dim(); ++r) {
        IntVector e(in.dim());
        e[r] = 1;
        // column r of m1 m2 M2^-1 is m1 m2 times the solution of M2 y = e_r
        auto y = affine_solve(AffineLatticeMap(g.matrix(), IntVector(in.dim())), e);
        for (std::size_t c = 0; c < in.dim(); ++c) {
          REQUIRE(Rational(w.f_prime.matrix().at(c, r)) == m1 * m2 * y[c]);
        }
      }
      auto fb = affine_solve(AffineLatticeMap(f.matrix(), IntVector(in.dim())),
                             f.offset());
      for (std::size_t c = 0; c < in.dim(); ++c) {
        REQUIRE(Rational(w.f_prime.offset()[c]) == m1 * m2 * fb[c]);
      }
      REQUIRE(is_ore_witness(in, f, g, w));
    }
  }
}

TEST_CASE("affine-lattice canonical values", "[affine-lattice]") {
  AffineLattice in(1);
  using P = pq_t<AffineLattice>;
  CHECK(canonical_value(in, P{{5}, aff1(2, 1)}) == RationalVector{Rational(2)});
  CHECK(canonical_value(in, P{{7}, aff1(3, 1)}) == RationalVector{Rational(2)});
  CHECK(canonical_value(in, P{{4}, aff1(3, 4)}) == RationalVector{Rational(0)});
  CHECK(canonical_value(in, P{{4}, aff1(-3, 0)})
        == RationalVector{Rational(-4, 3)});

  AffineLattice in2(2);
  AffineLatticeMap f(IntMatrix::from_rows({{1, 2}, {3, 4}}), IntVector{1, -1});
  CHECK(canonical_value(in2, P{f.offset(), f}) == RationalVector(2));
}

TEST_CASE("affine-lattice canonical identification", "[affine-lattice]") {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    AffineLattice in(static_cast<std::size_t>(uniform(rng, 1, 3)));
    using P = pq_t<AffineLattice>;
    P    p{Gen<AffineLattice>::point(rng, in), Gen<AffineLattice>::element(rng, in)};
    auto q = i % 2 == 0
                 ? pq_left_multiply(in, p, Gen<AffineLattice>::element(rng, in))
                 : P{Gen<AffineLattice>::point(rng, in),
                     Gen<AffineLattice>::element(rng, in)};
    auto xp = affine_solve(p.denominator, p.numerator);
    auto xq = affine_solve(q.denominator, q.numerator);
    REQUIRE(canonical_value(in, p) == xp);
    bool eq = pq_equivalent(in, p, q);
    REQUIRE(eq == (xp == xq));
    REQUIRE(eq == (canonical_value(in, p) == canonical_value(in, q)));

    // embed is the identity on canonical values
    auto x = Gen<AffineLattice>::point(rng, in);
    RationalVector xr;
    for (auto const& v : x) {
      xr.emplace_back(v);
    }
    REQUIRE(canonical_value(in, embed(in, x)) == xr);

    // g~ acts on canonical values as the rational affine map
    auto g  = Gen<AffineLattice>::element(rng, in);
    auto gp = canonical_value(in, extend_apply(in, g, p));
    for (std::size_t r = 0; r < in.dim(); ++r) {
      Rational s(g.offset()[r]);
      for (std::size_t c = 0; c < in.dim(); ++c) {
        s += Rational(g.matrix().at(r, c)) * xp[c];
      }
      REQUIRE(gp[r] == s);
    }
  }
}
