#include <doctest.h>

#include <random>
#include <thread>

#include "fixtures.hpp"
#include "leibal/catalog.hpp"
#include "leibal/free_leibniz.hpp"

using namespace leibal;
using fixtures::vec;

TEST_CASE("truncated dimension is the geometric sum") {
  Field f = fixtures::Q();
  CHECK(TruncatedFreeAlgebra(f, 1, 5).dim() == 5);
  CHECK(TruncatedFreeAlgebra(f, 2, 3).dim() == 2 + 4 + 8);
  CHECK(TruncatedFreeAlgebra(f, 3, 4).dim() == 3 + 9 + 27 + 81);
  CHECK(TruncatedFreeAlgebra(f, 0, 3).dim() == 0);
}

TEST_CASE("word indexing round-trips") {
  TruncatedFreeAlgebra F(fixtures::Q(), 3, 4);
  for (size_t i = 0; i < F.dim(); ++i)
    CHECK(F.word_index(F.word(i)) == i);
  CHECK(F.word_label(0) == "x");
  CHECK(F.word_label(F.word_index({0, 1})) == "xy");
}

TEST_CASE("one-generator brackets: squares and truncation") {
  TruncatedFreeAlgebra F(fixtures::Q(), 1, 5);
  // indices: x=0, x^2=1, ..., x^5=4
  CHECK(F.bracket_words(0, 0) == SVec::unit(1));
  CHECK(F.bracket_words(0, 1).is_zero()); // [x, x^2] = 0
  for (size_t a = 0; a < 5; ++a) {
    if (a + 2 <= 5)
      CHECK(F.bracket_words(a, 0) == SVec::unit(a + 1)); // [x^a, x] = x^{a+1}
    else
      CHECK(F.bracket_words(a, 0).is_zero());
    for (size_t b = 1; b < 5; ++b)
      CHECK(F.bracket_words(a, b).is_zero()); // [x^a, x^b] = 0 for b >= 2
  }
}

TEST_CASE("two-generator expansion [x, xy] = xxy - xyx") {
  TruncatedFreeAlgebra F(fixtures::Q(), 2, 3);
  size_t x = 0, xy = F.word_index({0, 1});
  size_t xxy = F.word_index({0, 0, 1}), xyx = F.word_index({0, 1, 0});
  SVec expect;
  expect.t.emplace_back(static_cast<uint32_t>(xxy), mpq_class(1));
  expect.t.emplace_back(static_cast<uint32_t>(xyx), mpq_class(-1));
  CHECK(F.bracket_words(x, xy) == expect);
}

TEST_CASE("brackets vanish above the truncation level") {
  TruncatedFreeAlgebra F(fixtures::Q(), 2, 3);
  size_t xy = F.word_index({0, 1}), yx = F.word_index({1, 0});
  CHECK(F.bracket_words(xy, yx).is_zero());
}

TEST_CASE("the truncated bracket satisfies the Leibniz identity") {
  Field f = fixtures::Q();
  std::mt19937_64 rng(5);
  for (size_t n = 1; n <= 3; ++n)
    for (size_t level = 2; level <= 4; ++level) {
      TruncatedFreeAlgebra F(f, n, level);
      for (int trial = 0; trial < 60; ++trial) {
        SVec u = SVec::unit(rng() % F.dim());
        SVec v = SVec::unit(rng() % F.dim());
        SVec w = SVec::unit(rng() % F.dim());
        SVec lhs = F.bracket(u, F.bracket(v, w));
        SVec rhs = sv_sub(f, F.bracket(F.bracket(u, v), w),
                          F.bracket(F.bracket(u, w), v));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("the bracket memo behaves under concurrent readers") {
  Field f = fixtures::Q();
  TruncatedFreeAlgebra serial(f, 2, 4);
  std::vector<SVec> expected;
  for (size_t i = 0; i < serial.dim(); ++i)
    for (size_t j = 0; j < serial.dim(); ++j)
      expected.push_back(serial.bracket_words(i, j));

  TruncatedFreeAlgebra shared(f, 2, 4);
  std::vector<std::vector<SVec>> got(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t]() {
      for (size_t i = 0; i < shared.dim(); ++i)
        for (size_t j = 0; j < shared.dim(); ++j)
          got[static_cast<size_t>(t)].push_back(shared.bracket_words(i, j));
    });
  for (auto& w : workers)
    w.join();
  for (const auto& g : got)
    CHECK(g == expected);
}

TEST_CASE("minimal generators of the worked examples") {
  auto gens = minimal_generators(fixtures::a2());
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == vec({0, 1}));

  CHECK(minimal_generators(fixtures::abelian(3)).size() == 3);

  // chain written with products from the left; the product span is still
  // <a2,a3,a4> so a1 generates
  LeibnizAlgebra left_chain(fixtures::Q(), 4, {},
                            {{0, 0, 1, 1}, {0, 1, 2, 1}, {0, 2, 3, 1}});
  auto lg = minimal_generators(left_chain);
  REQUIRE(lg.size() == 1);
  CHECK(lg[0] == vec({1, 0, 0, 0}));
}

TEST_CASE("minimal generators refuse non-nilpotent input") {
  CHECK_THROWS_AS(minimal_generators(remark5_algebra()), unsupported_input);
  try {
    minimal_generators(remark5_algebra());
  } catch (const unsupported_input& e) {
    CHECK(std::string(e.what()).find("stabilizes") != std::string::npos);
  }
}

TEST_CASE("presentation of the two-dimensional row at level 5") {
  Presentation p = present(fixtures::a2(), 5);
  CHECK(p.free->dim() == 5);
  CHECK(p.kernel == span(fixtures::Q(), 5,
                         {SVec::unit(2), SVec::unit(3), SVec::unit(4)}));
  CHECK(p.eval_of(SVec::unit(0)) == vec({0, 1})); // x -> a2
  CHECK(p.eval_of(SVec::unit(1)) == vec({1, 0})); // x^2 -> a1
}

TEST_CASE("presentation kernels of abelian algebras") {
  Presentation p1 = present(fixtures::abelian(1), 3);
  CHECK(p1.kernel == span(fixtures::Q(), 3, {SVec::unit(1), SVec::unit(2)}));

  Presentation p2 = present(fixtures::abelian(2), 2);
  CHECK(p2.kernel.dim() == 4); // all degree-2 words
  CHECK(p2.kernel.dim() == p2.free->dim() - 2);
}

TEST_CASE("presentation kernel dimension matches the rank formula") {
  for (const LeibnizAlgebra& g :
       {fixtures::a2(), fixtures::cyclic(3), fixtures::abelian(2)}) {
    size_t c = *ordinary_class(g);
    Presentation p = present(g, 2 * c + 1);
    CHECK(p.kernel.dim() == p.free->dim() - g.dim());
  }
}

TEST_CASE("presentations reject non-generating sets") {
  CHECK_THROWS_AS(present_with(fixtures::a2(), {vec({1, 0})}, 3),
                  bad_homomorphism);
}

TEST_CASE("presentation of the zero algebra is empty") {
  Presentation p = present(fixtures::abelian(0), 1);
  CHECK(p.free->dim() == 0);
  CHECK(p.kernel.dim() == 0);
}

TEST_CASE("preimage of an ideal contains the kernel") {
  LeibnizAlgebra g = fixtures::a2();
  Presentation p = present(g, 5);
  Subspace pre = p.preimage(span_dense(fixtures::Q(), {{1, 0}}));
  CHECK(pre.contains(p.kernel));
  CHECK(pre.dim() == p.kernel.dim() + 1);
  CHECK(pre.contains(SVec::unit(1))); // x^2 maps to a1
}
