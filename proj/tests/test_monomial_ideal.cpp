#include <catch2/catch_amalgamated.hpp>

#include "boxmod/monomial_ideal.hpp"
#include "boxmod/random_instances.hpp"

using namespace boxmod;

namespace {

MonomialIdeal ideal(int n, std::vector<ExponentVector> gens) {
  return MonomialIdeal::from_generators(n, std::move(gens));
}

}  // namespace

TEST_CASE("minimalize prunes divisible generators") {
  // {x^2 y, x y, y} -> (y)
  auto I = ideal(2, {{2, 1}, {1, 1}, {0, 1}});
  REQUIRE(I.generators().size() == 1);
  CHECK(I.generators()[0] == ExponentVector{0, 1});

  auto J = ideal(2, {{2, 0}, {0, 2}});
  CHECK(J.generators().size() == 2);

  CHECK(ideal(2, {}).is_zero());
  CHECK(ideal(2, {{0, 0}, {1, 0}}).is_unit());
}

TEST_CASE("membership") {
  auto zero = MonomialIdeal::zero(2);
  CHECK_FALSE(zero.contains(ExponentVector{5, 5}));

  auto I = ideal(2, {{2, 0}, {1, 1}});
  CHECK(I.contains(ExponentVector{2, 0}));
  CHECK_FALSE(I.contains(ExponentVector{1, 0}));
  CHECK(I.contains(ExponentVector{3, 7}));
}

TEST_CASE("colon ideals") {
  auto I = ideal(2, {{2, 1}});  // (x^2 y)
  CHECK(I.colon(ExponentVector{0, 0}) == I);
  CHECK(I.colon(ExponentVector{1, 1}) == ideal(2, {{1, 0}}));
  auto P = ideal(2, {{1, 0}});
  CHECK(P.colon(ExponentVector{5, 0}).is_unit());
}

TEST_CASE("radical, direct route") {
  auto sqfree = ideal(3, {{1, 1, 0}, {0, 0, 1}});
  CHECK(sqfree.radical() == sqfree);

  CHECK(ideal(2, {{2, 0}, {1, 1}}).radical() == ideal(2, {{1, 0}}));

  // the worked example from the quotient fixture: vars a,b,c,d
  auto I = ideal(4, {{4, 0, 0, 4}, {2, 3, 0, 0}, {0, 3, 2, 0}, {0, 3, 0, 1}});
  auto expected = ideal(4, {{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  CHECK(I.radical() == expected);
  CHECK(radical_by_degree_criterion(I, I.tight_bound()) == expected);
}

TEST_CASE("t-determinedness") {
  auto I = ideal(2, {{2, 0}, {1, 1}});
  CHECK(I.is_t_determined(BoundVector{2, 1}));
  CHECK_FALSE(ideal(2, {{3, 0}}).is_t_determined(BoundVector{2, 5}));
  CHECK(I.is_t_determined(I.tight_bound()));
  CHECK(I.tight_bound().vec() == ExponentVector{2, 1});
}

TEST_CASE("dimension and minimal primes") {
  auto zero = MonomialIdeal::zero(3);
  auto dp = zero.dim_and_minimal_primes();
  CHECK(dp.dim == 3);
  REQUIRE(dp.prime_faces.size() == 1);
  CHECK(dp.prime_faces[0] == std::vector<int>{0, 1, 2});

  auto edge = ideal(2, {{1, 1}});  // (xy): primes (x), (y)
  auto dpe = edge.dim_and_minimal_primes();
  CHECK(dpe.dim == 1);
  CHECK(dpe.prime_faces.size() == 2);

  auto I = ideal(2, {{2, 0}, {1, 1}});  // radical (x): single prime
  auto dpi = I.dim_and_minimal_primes();
  CHECK(dpi.dim == 1);
  REQUIRE(dpi.prime_faces.size() == 1);
  CHECK(dpi.prime_faces[0] == std::vector<int>{1});

  CHECK_THROWS_AS(MonomialIdeal::unit(2).dim_and_minimal_primes(), std::invalid_argument);
}

TEST_CASE("radical properties on random ideals") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 4);
    ExponentVector t = random_bound(rng, n, 3);
    MonomialIdeal I = random_ideal(rng, n, t, 1, 5);
    MonomialIdeal R = I.radical();
    CHECK(R.radical() == R);
    CHECK(R.is_t_determined(BoundVector(ExponentVector::ones(n))));
    for (const auto& g : I.generators()) CHECK(R.contains(g));
    CHECK(radical_by_degree_criterion(I, BoundVector(t)) == R);
    // criterion is independent of the chosen bound
    ExponentVector t2 = t + ExponentVector::ones(n);
    CHECK(radical_by_degree_criterion(I, BoundVector(t2)) == R);
  }
}

TEST_CASE("t-determined membership saturates") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(1, 3);
    ExponentVector t = random_bound(rng, n, 3);
    MonomialIdeal I = random_ideal(rng, n, t, 1, 4);
    BoundVector tb(t);
    for (const auto& a : box_enumerate(ExponentVector::zero(n), t + ExponentVector::ones(n)))
      CHECK(I.contains(a) == I.contains(map_p(a, tb)));
  }
}
