#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "leibal/linmap.hpp"

using namespace leibal;
using fixtures::vec;

TEST_CASE("span of the standard basis is the full plane") {
  Subspace s = span_dense(Field::rationals(), {{1, 0}, {0, 1}});
  CHECK(s.dim() == 2);
  CHECK(s.is_full());
}

TEST_CASE("span normalizes scalings") {
  Subspace s = span_dense(Field::rationals(), {{2, 4}});
  CHECK(s.dim() == 1);
  CHECK(s.rows()[0] == vec({1, 2}));
}

TEST_CASE("empty span is the zero subspace") {
  Subspace s = span(Field::rationals(), 2, {});
  CHECK(s.dim() == 0);
  CHECK(s.is_zero());
}

TEST_CASE("span rejects mixed ambient dimensions") {
  CHECK_THROWS_AS(span_dense(Field::rationals(), {{1, 0}, {1, 0, 0}}),
                  dim_mismatch);
}

TEST_CASE("canonicality: span of echelon rows reproduces the subspace") {
  Field f = Field::rationals();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    size_t ambient = 1 + rng() % 6;
    std::vector<SVec> vs;
    for (size_t i = 0, n = 1 + rng() % 4; i < n; ++i) {
      std::vector<mpq_class> coords(ambient);
      for (auto& c : coords)
        c = mpq_class(static_cast<long>(rng() % 7) - 3);
      vs.push_back(sv_from_dense(f, coords));
    }
    Subspace s = span(f, ambient, vs);
    CHECK(span(f, ambient, s.rows()) == s);
  }
}

TEST_CASE("sum and intersection of transverse lines") {
  Field f = Field::rationals();
  auto [sum_ab, meet_ab] = sum_intersect(span_dense(f, {{1, 0}}),
                                         span_dense(f, {{0, 1}}));
  CHECK(sum_ab.dim() == 2);
  CHECK(meet_ab.dim() == 0);
}

TEST_CASE("sum and intersection are idempotent on equal inputs") {
  Field f = Field::rationals();
  Subspace a = span_dense(f, {{1, 2, 0}, {0, 0, 3}});
  auto [s, m] = sum_intersect(a, a);
  CHECK(s == a);
  CHECK(m == a);
}

TEST_CASE("intersection of a plane with a line inside it") {
  Field f = Field::rationals();
  Subspace a = span_dense(f, {{1, 0}, {0, 1}});
  Subspace b = span_dense(f, {{1, 1}});
  CHECK(intersect(a, b) == b);
}

TEST_CASE("sum/intersection rejects ambient mismatch") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(sum_intersect(span_dense(f, {{1, 0}}), span_dense(f, {{1, 0, 0}})),
                  dim_mismatch);
}

TEST_CASE("modular law on randomized subspace pairs") {
  Field f = Field::rationals();
  std::mt19937_64 rng(2024);
  for (size_t ambient = 1; ambient <= 8; ++ambient) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto draw = [&]() {
        std::vector<SVec> vs;
        for (size_t i = 0, n = rng() % (ambient + 1); i < n; ++i) {
          std::vector<mpq_class> coords(ambient);
          for (auto& c : coords)
            c = mpq_class(static_cast<long>(rng() % 5) - 2);
          vs.push_back(sv_from_dense(f, coords));
        }
        return span(f, ambient, vs);
      };
      Subspace a = draw(), b = draw();
      // sum_intersect asserts dim(sum) + dim(meet) == dim a + dim b internally
      auto [s, m] = sum_intersect(a, b);
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(a.contains(m));
      CHECK(b.contains(m));
    }
  }
}

TEST_CASE("quotient representatives for a line in the plane") {
  Field f = Field::rationals();
  auto reps = quotient_basis(Subspace::full(f, 2), span_dense(f, {{1, 0}}));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == vec({0, 1}));
}

TEST_CASE("quotient by the whole space is empty") {
  Field f = Field::rationals();
  Subspace s = span_dense(f, {{1, 2}, {0, 1}});
  CHECK(quotient_basis(s, s).empty());
}

TEST_CASE("quotient counts representatives by rank") {
  Field f = Field::rationals();
  Subspace whole = Subspace::full(f, 3);
  Subspace sub = span_dense(f, {{1, 1, 0}});
  CHECK(quotient_basis(whole, sub).size() == 2);
}

TEST_CASE("quotient_basis enforces containment") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(quotient_basis(span_dense(f, {{1, 0, 0}}),
                                 span_dense(f, {{0, 1, 0}})),
                  containment_error);
}

TEST_CASE("membership solve: zero map against the zero space") {
  Field f = Field::rationals();
  LinMap zero(f, 2, 2);
  CHECK(solve_membership({zero}, Subspace::zero(f, 2)).is_full());
}

TEST_CASE("membership solve: identity map against the zero space") {
  Field f = Field::rationals();
  CHECK(solve_membership({LinMap::identity(f, 2)}, Subspace::zero(f, 2)).is_zero());
}

TEST_CASE("membership solve: image already inside the target") {
  Field f = Field::rationals();
  // (x, y) -> (y, 0), target <(1,0)>
  LinMap m = LinMap::from_rows(f, 2, {vec({0, 1}), SVec{}});
  Subspace target = span_dense(f, {{1, 0}});
  CHECK(solve_membership({m}, target).is_full());
}

TEST_CASE("quotient frame coordinates invert lift") {
  Field f = Field::rationals();
  Subspace X = span_dense(f, {{1, 0, 0, 2}, {0, 1, 0, 0}, {0, 0, 1, -1}});
  Subspace Y = span_dense(f, {{0, 1, 0, 0}});
  QuotientFrame frame(X, Y);
  CHECK(frame.dim() == 2);
  std::vector<mpq_class> c{mpq_class(3), mpq_class(-2)};
  SVec coords = sv_from_dense(f, c);
  CHECK(frame.coords(frame.lift(coords)) == coords);
}

TEST_CASE("linear map inverse and particular solve") {
  Field f = Field::rationals();
  LinMap a = LinMap::from_rows(f, 2, {vec({1, 2}), vec({3, 5})});
  LinMap ainv = inverse(a);
  CHECK(a.compose(ainv) == LinMap::identity(f, 2));
  SVec b = vec({1, 1});
  auto x = solve_particular(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == b);
  CHECK_THROWS_AS(inverse(LinMap::from_rows(f, 2, {vec({1, 2}), vec({2, 4})})),
                  error);
}

TEST_CASE("prime fields agree with the rationals away from bad primes") {
  Field q = Field::rationals();
  Field f101 = Field::prime(101);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    size_t ambient = 2 + rng() % 5;
    std::vector<std::vector<mpq_class>> dense;
    for (size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
      std::vector<mpq_class> coords(ambient);
      for (auto& c : coords)
        c = mpq_class(static_cast<long>(rng() % 3) - 1); // entries in {-1,0,1}
      dense.push_back(coords);
    }
    std::vector<SVec> vq, vp;
    for (const auto& d : dense) {
      vq.push_back(sv_from_dense(q, d));
      vp.push_back(sv_from_dense(f101, d));
    }
    // small integer matrices of this size cannot meet multiples of 101 in
    // fraction-free elimination, so the ranks agree
    CHECK(span(q, ambient, vq).dim() == span(f101, ambient, vp).dim());
  }
}

TEST_CASE("field rejects characteristic 2 and composites") {
  CHECK_THROWS_AS(Field::prime(2), error);
  CHECK_THROWS_AS(Field::prime(9), error);
  CHECK_NOTHROW(Field::prime(7));
}

TEST_CASE("prime field arithmetic is exact") {
  Field f7 = Field::prime(7);
  mpq_class half = f7.reduce(mpq_class(1, 2));
  CHECK(half == 4); // 2 * 4 = 8 = 1 mod 7
  CHECK(f7.mul(half, mpq_class(2)) == 1);
  CHECK(f7.add(mpq_class(5), mpq_class(4)) == 2);
  CHECK_THROWS_AS(f7.reduce(mpq_class(1, 7)), error);
}
