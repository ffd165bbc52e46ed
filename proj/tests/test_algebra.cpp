#include <doctest.h>

#include "fixtures.hpp"

using namespace leibal;
using fixtures::vec;

TEST_CASE("bracket on the two-dimensional row") {
  LeibnizAlgebra g = fixtures::a2();
  CHECK(g.bracket(vec({0, 1}), vec({0, 1})) == vec({1, 0}));
  CHECK(g.bracket(vec({1, 0}), vec({0, 1})).is_zero());
  CHECK(g.bracket(vec({0, 1}), SVec{}).is_zero());
}

TEST_CASE("bracket rejects operands outside the algebra") {
  LeibnizAlgebra g = fixtures::a2();
  CHECK_THROWS_AS(g.bracket(SVec::unit(2), SVec::unit(0)), dim_mismatch);
}

TEST_CASE("structure constants reject duplicates and bad indices") {
  Field f = Field::rationals();
  CHECK_THROWS_AS(LeibnizAlgebra(f, 2, {}, {{1, 1, 0, 1}, {1, 1, 0, 2}}), error);
  CHECK_THROWS_AS(LeibnizAlgebra(f, 2, {}, {{2, 0, 0, 1}}), dim_mismatch);
}

TEST_CASE("identity check accepts the catalog row and Lie algebras") {
  CHECK(check_leibniz(fixtures::a2()).ok);
  // Heisenberg: [e1,e2] = e3 = -[e2,e1]
  LeibnizAlgebra h(fixtures::Q(), 3, {"e1", "e2", "e3"},
                   {{0, 1, 2, 1}, {1, 0, 2, -1}});
  CHECK(check_leibniz(h).ok);
}

TEST_CASE("identity check finds the first failing triple") {
  LeibnizVerdict v = check_leibniz(fixtures::not_leibniz());
  REQUIRE(!v.ok);
  REQUIRE(v.witness);
  CHECK(v.witness->i == 1); // (a2, a1, a1)
  CHECK(v.witness->j == 0);
  CHECK(v.witness->k == 0);
  CHECK(v.witness->lhs == vec({1, 0}));
  CHECK(v.witness->rhs.is_zero());
}

TEST_CASE("ideal closure fixes ideals and grows non-ideals") {
  LeibnizAlgebra g = fixtures::a2();
  Field f = fixtures::Q();
  CHECK(ideal_closure(g, span_dense(f, {{1, 0}})).space ==
        span_dense(f, {{1, 0}}));
  CHECK(ideal_closure(g, span_dense(f, {{0, 1}})).space.is_full());
  CHECK(ideal_closure(g, g.zero_space()).space.is_zero());
}

TEST_CASE("annihilator span of the basic examples") {
  CHECK(ann_ideal(fixtures::a2()).space == span_dense(fixtures::Q(), {{1, 0}}));
  CHECK(ann_ideal(fixtures::abelian(3)).space.is_zero());
  LeibnizAlgebra h(fixtures::Q(), 3, {}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
  CHECK(ann_ideal(h).space.is_zero()); // Lie algebras have no squares

  // one-sided chain: squares span everything above the generator
  LeibnizAlgebra c4(fixtures::Q(), 4, {},
                    {{0, 0, 1, 1}, {0, 1, 2, 1}, {0, 2, 3, 1}});
  CHECK(ann_ideal(c4).space ==
        span_dense(fixtures::Q(), {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("quotient algebra of the row by its annihilator") {
  LeibnizAlgebra g = fixtures::a2();
  Quotient q = quotient_algebra(g, ann_ideal(g));
  CHECK(q.alg.dim() == 1);
  CHECK(q.alg.basis_bracket(0, 0).is_zero());
  CHECK(q.alg.labels()[0] == "a2");
}

TEST_CASE("quotient by zero and by everything") {
  LeibnizAlgebra g = fixtures::a2();
  Quotient q0 = quotient_algebra(g, {g.zero_space(), true});
  CHECK(q0.alg == g);
  Quotient qg = quotient_algebra(g, {g.full_space(), true});
  CHECK(qg.alg.dim() == 0);
}

TEST_CASE("quotient rejects non-ideals") {
  LeibnizAlgebra g = fixtures::a2();
  CHECK_THROWS_AS(quotient_algebra(g, {span_dense(fixtures::Q(), {{0, 1}}), true}),
                  not_an_ideal);
}

TEST_CASE("liezation collapses squares and is idempotent") {
  LeibnizAlgebra g = fixtures::a2();
  Quotient lie = liezation(g);
  CHECK(lie.alg.dim() == 1);

  Quotient again = liezation(lie.alg);
  CHECK(again.alg == lie.alg);

  Quotient table = liezation(fixtures::cyclic3_table());
  CHECK(table.alg.dim() == 1); // ann = <a1, a2>

  LeibnizAlgebra h(fixtures::Q(), 3, {}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
  CHECK(liezation(h).alg == h);
}

TEST_CASE("centers of the basic examples") {
  Field f = fixtures::Q();
  Centers c = centers(fixtures::a2());
  CHECK(c.center.space == span_dense(f, {{1, 0}}));
  CHECK(c.right_center.space == span_dense(f, {{1, 0}}));
  CHECK(c.lie_center.space == span_dense(f, {{1, 0}}));

  Centers ab = centers(fixtures::abelian(2));
  CHECK(ab.center.space.is_full());
  CHECK(ab.right_center.space.is_full());
  CHECK(ab.lie_center.space.is_full());

  Centers cy = centers(fixtures::cyclic3_table());
  CHECK(cy.lie_center.space == span_dense(f, {{0, 1, 0}}));
  CHECK(cy.center.space == span_dense(f, {{0, 1, 0}}));
  CHECK(cy.right_center.space == span_dense(f, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("annihilator sits inside the right center") {
  for (const LeibnizAlgebra& g :
       {fixtures::a2(), fixtures::cyclic3_table(), fixtures::cyclic(4)}) {
    Subspace ann = ann_ideal(g).space;
    Subspace zr = centers(g).right_center.space;
    CHECK(zr.contains(ann));
    for (uint32_t x = 0; x < g.dim(); ++x)
      for (const SVec& w : ann.rows())
        CHECK(g.bracket(SVec::unit(x), w).is_zero());
  }
}

TEST_CASE("ordinary lower series and class") {
  CHECK(ordinary_class(fixtures::a2()) == 2);
  CHECK(ordinary_class(fixtures::abelian(3)) == 1);
  CHECK(ordinary_class(fixtures::abelian(0)) == 0);
  CHECK(ordinary_class(fixtures::cyclic(4)) == 4);
  CHECK(!ordinary_class(fixtures::cyclic3_table()).has_value() ==
        false); // the table row is ordinary-nilpotent of class 3
  CHECK(ordinary_class(fixtures::cyclic3_table()) == 3);
}

TEST_CASE("zero-dimensional algebra is admitted everywhere") {
  LeibnizAlgebra z = fixtures::abelian(0);
  CHECK(check_leibniz(z).ok);
  CHECK(ann_ideal(z).space.is_zero());
  Centers c = centers(z);
  CHECK(c.lie_center.space.dim() == 0);
  CHECK(liezation(z).alg.dim() == 0);
}
