#include <catch2/catch_amalgamated.hpp>

#include "boxmod/exponent_vector.hpp"

using namespace boxmod;

TEST_CASE("componentwise order") {
  CHECK(leq(ExponentVector{0, 0}, ExponentVector{0, 0}));
  CHECK_FALSE(leq(ExponentVector{1, 2}, ExponentVector{2, 1}));
  CHECK(leq(ExponentVector{1, 1}, ExponentVector{4, 3}));
  CHECK_THROWS_AS(leq(ExponentVector{1}, ExponentVector{1, 2}), std::invalid_argument);
}

TEST_CASE("map_r forced values") {
  BoundVector t{2, 3, 4};
  CHECK(map_r(ExponentVector{0, 0, 0}, t) == ExponentVector{0, 0, 0});
  CHECK(map_r(ExponentVector{1, 0, 5}, t) == ExponentVector{2, 0, 4});
  BoundVector t2{3, 3};
  CHECK(map_r(map_r(ExponentVector{1, 2}, t2), t2) == ExponentVector{3, 3});
  CHECK_THROWS_AS(map_r(ExponentVector{-1, 0, 0}, t), std::invalid_argument);
}

TEST_CASE("map_sqrt") {
  CHECK(map_sqrt(ExponentVector{0, 0}) == ExponentVector{0, 0});
  CHECK(map_sqrt(ExponentVector{4, 0, 2}) == ExponentVector{1, 0, 1});
  // sqrt is r with t = 1
  BoundVector one{1, 1, 1};
  ExponentVector a{3, 1, 0};
  CHECK(map_sqrt(a) == map_r(a, one));
  CHECK(map_sqrt(a) == ExponentVector{1, 1, 0});
}

TEST_CASE("map_s") {
  BoundVector t{2, 3};
  CHECK(map_s(ExponentVector{0, 0}, t) == ExponentVector{1, 2});
  CHECK(map_s(ExponentVector{1, 0}, t) == ExponentVector{2, 2});
  // a + t - 1 >= s(a)
  ExponentVector a{2, 0};
  BoundVector t22{2, 2};
  CHECK(leq(map_s(a, t22), a + t22.vec() - ExponentVector::ones(2)));
}

TEST_CASE("map_p") {
  BoundVector t{2, 3};
  CHECK(map_p(ExponentVector{1, 2}, t) == ExponentVector{1, 2});
  CHECK(map_p(ExponentVector{5, 0}, t) == ExponentVector{2, 0});
}

// r(-p_1(a)+1) = -p_t(r(a))+t for 0 <= a <= 1, exhaustively for n <= 4
TEST_CASE("p and r compatibility identity") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> tv(n);
    for (int trial = 0; trial < 3; ++trial) {
      for (int i = 0; i < n; ++i) tv[i] = 1 + (trial + i) % 3;
      BoundVector t{ExponentVector(tv)};
      BoundVector one{ExponentVector::ones(n)};
      for (const auto& a : box_enumerate(ExponentVector::zero(n), ExponentVector::ones(n))) {
        ExponentVector lhs = map_r(ExponentVector::ones(n) - map_p(a, one), t);
        ExponentVector rhs = t.vec() - map_p(map_r(a, t), t);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("supports") {
  BoundVector t11{1, 1};
  auto [s0, st0] = supports(ExponentVector{0, 0}, t11);
  CHECK(s0.empty());
  CHECK(st0.empty());

  BoundVector t23{2, 3};
  auto [s1, st1] = supports(ExponentVector{1, 3}, t23);
  CHECK(s1 == std::vector<int>{0, 1});
  CHECK(st1 == std::vector<int>{1});

  auto [s2, st2] = supports(t23.vec(), t23);
  CHECK(s2 == std::vector<int>{0, 1});
  CHECK(st2 == std::vector<int>{0, 1});
}

TEST_CASE("box enumeration") {
  auto single = box_enumerate(ExponentVector{0, 0}, ExponentVector{0, 0});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == ExponentVector{0, 0});

  auto four = box_enumerate(ExponentVector{0, 0}, ExponentVector{1, 1});
  REQUIRE(four.size() == 4);
  CHECK(four.front() == ExponentVector{0, 0});
  CHECK(four.back() == ExponentVector{1, 1});

  CHECK(box_enumerate(ExponentVector{0, 0, 0}, ExponentVector{2, 1, 1}).size() == 12);

  // lex ascending is a linear extension of the componentwise order
  auto box = box_enumerate(ExponentVector{0, 0, 0}, ExponentVector{2, 2, 1});
  for (std::size_t i = 0; i + 1 < box.size(); ++i) CHECK(lex_less(box[i], box[i + 1]));

  CHECK_THROWS_AS(box_enumerate(ExponentVector{1, 0}, ExponentVector{0, 1}), std::invalid_argument);
}

TEST_CASE("window indexing round-trips") {
  Window w(ExponentVector{-1, 0, 2}, ExponentVector{1, 2, 3});
  REQUIRE(w.count() == 3 * 3 * 2);
  for (long i = 0; i < w.count(); ++i) CHECK(w.index_of(w.degree_at(i)) == i);
  CHECK_FALSE(w.contains(ExponentVector{0, 0, 0}));
  CHECK(w.contains(ExponentVector{0, 0, 2}));
}

TEST_CASE("degree maps are order preserving") {
  BoundVector t{2, 3};
  auto box = box_enumerate(ExponentVector{0, 0}, ExponentVector{3, 4});
  for (const auto& a : box)
    for (const auto& b : box) {
      if (!leq(a, b)) continue;
      CHECK(leq(map_r(a, t), map_r(b, t)));
      CHECK(leq(map_sqrt(a), map_sqrt(b)));
      CHECK(leq(map_s(a, t), map_s(b, t)));
      CHECK(leq(map_p(a, t), map_p(b, t)));
    }
}

TEST_CASE("r is idempotent and factors through sqrt") {
  BoundVector t{3, 2, 2};
  for (const auto& a : box_enumerate(ExponentVector::zero(3), ExponentVector{3, 3, 3})) {
    CHECK(map_r(map_r(a, t), t) == map_r(a, t));
    CHECK(map_r(a, t) == cwise_mul(map_sqrt(a), t.vec()));
  }
}

TEST_CASE("bound vector must be positive") {
  CHECK_THROWS_AS(BoundVector(ExponentVector{1, 0}), std::invalid_argument);
}
