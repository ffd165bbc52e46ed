#include <doctest.h>

#include "fixtures.hpp"
#include "leibal/catalog.hpp"
#include "leibal/relative.hpp"

using namespace leibal;

TEST_CASE("every classification row verifies at the default parameters") {
  CHECK(catalog_entries().size() == 41);
  for (const CatalogEntry& e : catalog_entries()) {
    CatalogVerifyReport rep = verify_entry(e);
    INFO(e.id);
    CHECK(rep.leibniz_ok);
    CHECK(rep.non_lie_ok);
    CHECK(rep.class_ok);
  }
}

TEST_CASE("parameter instantiation follows the admissible sets") {
  const CatalogEntry& gamma_row = catalog_entry("d3_r1");
  LeibnizAlgebra g = instantiate(gamma_row, {{"gamma", mpq_class(2)}});
  CHECK(check_leibniz(g).ok);
  CHECK(lie_central_series(g).class_value == 2);

  const CatalogEntry& c_row = catalog_entry("d4_r5");
  LeibnizAlgebra h = instantiate(c_row, {{"c", mpq_class(3)}});
  CHECK(lie_central_series(h).class_value == 2);
  CHECK_THROWS_AS(instantiate(c_row, {{"c", mpq_class(1)}}), admissibility_error);
  CHECK_THROWS_AS(instantiate(c_row, {{"c", mpq_class(-1)}}), admissibility_error);

  const CatalogEntry& lambda_row = catalog_entry("d4_r28");
  CHECK_THROWS_AS(instantiate(lambda_row, {{"lambda", mpq_class(0)}}),
                  admissibility_error);
  CHECK_THROWS_AS(instantiate(gamma_row, {{"nosuch", mpq_class(1)}}), error);
}

TEST_CASE("parameterized rows keep their class on other admissible samples") {
  CHECK(verify_entry(catalog_entry("d3_r1"), {{"gamma", mpq_class(-5)}}).all_ok());
  CHECK(verify_entry(catalog_entry("d4_r5"), {{"c", mpq_class(2)}}).all_ok());
  CHECK(verify_entry(catalog_entry("d4_r17"), {{"alpha", mpq_class(1, 2)}}).all_ok());
  CHECK(verify_entry(catalog_entry("d4_r28"), {{"lambda", mpq_class(7)}}).all_ok());
  CHECK(verify_entry(catalog_entry("d4_r30"), {{"mu2", mpq_class(-1)}}).all_ok());
}

TEST_CASE("the unsupported tag matches ordinary nilpotency") {
  for (const CatalogEntry& e : catalog_entries()) {
    LeibnizAlgebra g = instantiate(e);
    INFO(e.id);
    CHECK(e.multiplier_unsupported == !ordinary_class(g).has_value());
  }
}

TEST_CASE("specific expected classes from the table") {
  CHECK(verify_entry(catalog_entry("d2_r1")).computed_class == 2);
  CHECK(verify_entry(catalog_entry("d3_r5")).computed_class == 3);
  CHECK(verify_entry(catalog_entry("d4_r7")).computed_class == 4);
  CHECK(verify_entry(catalog_entry("d4_r20")).computed_class == 3);
  CHECK(verify_entry(catalog_entry("d4_r35")).computed_class == 3);
}

TEST_CASE("every row has a nonzero Lie-center") {
  for (const CatalogEntry& e : catalog_entries()) {
    LeibnizAlgebra g = instantiate(e);
    INFO(e.id);
    CHECK(!centers(g).lie_center.space.is_zero());
  }
}

TEST_CASE("polarization identity across the catalog") {
  for (const CatalogEntry& e : catalog_entries()) {
    LeibnizAlgebra g = instantiate(e);
    CHECK(lie_commutator(g, g.full_space(), g.full_space()).space ==
          ann_ideal(g).space);
  }
}

TEST_CASE("upper and lower class agree on every row") {
  for (const CatalogEntry& e : catalog_entries()) {
    CentralSeries s = lie_central_series(instantiate(e));
    INFO(e.id);
    CHECK(s.classes_agree);
  }
}

TEST_CASE("quotient by the Lie-center drops the class by one") {
  for (const char* id : {"d2_r1", "d3_r5", "d4_r7"}) {
    LeibnizAlgebra g = instantiate(catalog_entry(id));
    Centers c = centers(g);
    Quotient q = quotient_algebra(g, c.lie_center);
    CHECK(lie_central_series(q.alg).lower.lie_nilpotent);
    CHECK(*lie_central_series(g).class_value ==
          *lie_central_series(q.alg).class_value + 1);
  }
}

TEST_CASE("the remark algebra verifies and feeds the normalizer example") {
  const LeibnizAlgebra& g = remark5_algebra();
  CHECK(g.dim() == 5);
  CHECK(check_leibniz(g).ok);
  Subspace m = span(g.field(), 5, {SVec::unit(0)});
  CHECK(lie_normalizer(g, m).dim() == 4);
}
