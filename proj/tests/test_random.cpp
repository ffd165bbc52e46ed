#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "leibal/covers.hpp"
#include "leibal/free_leibniz.hpp"
#include "leibal/relative.hpp"

using namespace leibal;

namespace {

// Quotients of a truncated free algebra by random ideals are genuine
// Leibniz algebras and always nilpotent, which makes them a generator for
// end-to-end property tests of the whole pipeline.
LeibnizAlgebra random_quotient(std::mt19937_64& rng, size_t n, size_t level) {
  Field f = Field::rationals();
  TruncatedFreeAlgebra F(f, n, level);

  EchelonBuilder b(f, F.dim());
  size_t seeds = 1 + rng() % 2;
  for (size_t s = 0; s < seeds; ++s) {
    std::vector<mpq_class> coords(F.dim());
    for (size_t j = n; j < F.dim(); ++j) // keep the generators alive
      coords[j] = mpq_class(static_cast<long>(rng() % 5) - 2);
    b.absorb(sv_from_dense(f, coords));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SVec> rows = b.rows();
    for (const SVec& u : rows)
      for (uint32_t w = 0; w < F.dim(); ++w) {
        SVec word = SVec::unit(w);
        if (b.absorb(F.bracket(u, word)))
          grew = true;
        if (b.absorb(F.bracket(word, u)))
          grew = true;
      }
  }
  Subspace S = b.take();

  QuotientFrame Q(F.full_space(), S);
  std::vector<BracketEntry> entries;
  for (uint32_t a = 0; a < Q.dim(); ++a)
    for (uint32_t c = 0; c < Q.dim(); ++c) {
      SVec img = Q.coords(F.bracket(Q.reps()[a], Q.reps()[c]));
      for (const auto& [k, cc] : img.t)
        entries.push_back({a, c, k, cc});
    }
  return LeibnizAlgebra(f, Q.dim(), {}, entries);
}

} // namespace

TEST_CASE("random free-algebra quotients satisfy every pipeline invariant") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    size_t n = 1 + rng() % 2;
    LeibnizAlgebra g = random_quotient(rng, n, 3);
    CAPTURE(trial);
    CAPTURE(g.dim());

    REQUIRE(check_leibniz(g).ok);
    REQUIRE(ordinary_class(g).has_value());

    // polarization and series agreement
    CHECK(lie_commutator(g, g.full_space(), g.full_space()).space ==
          ann_ideal(g).space);
    CentralSeries s = lie_central_series(g);
    CHECK(s.classes_agree);

    // multiplier is stable across one level
    MultiplierOptions opts;
    opts.stabilize = true;
    MultiplierResult m = schur_lie_multiplier(g, opts);
    CHECK(m.stabilized);

    // the sequence is exact for the Lie-center and the annihilator span
    for (IdealWitness n_ideal :
         {centers(g).lie_center, ann_ideal(g),
          IdealWitness{g.zero_space(), true}}) {
      FourTermReport ft = four_term_sequence(g, n_ideal);
      CHECK(ft.exact);
      CHECK(ft.dims_identity);
      CHECK(ft.dims[3] == ft.t4_direct);
    }

    // cover construction and classification
    CoverResult cover = stem_cover(g);
    REQUIRE(cover.complement_found);
    CHECK(cover.ext->total.dim() == g.dim() + m.dim);
    ExtensionFlags flags = classify_extension(*cover.ext);
    CHECK(flags.lie_central);
    CHECK(flags.stem);
    CHECK(flags.cover);

    // capability equivalences on the Lie-center are internally consistent
    EquivalenceReport eq = capability_equivalences(g, centers(g).lie_center);
    CHECK(eq.equivalent);
  }
}

TEST_CASE("multiplier dimensions agree over Q and a large prime field") {
  // the same integer tables over F_101: small-integer eliminations cannot
  // divide by the modulus at these sizes, so every dimension must agree
  Field f101 = Field::prime(101);
  auto over = [&](const LeibnizAlgebra& g) {
    std::vector<BracketEntry> entries = g.entries();
    return LeibnizAlgebra(f101, g.dim(), g.labels(), entries);
  };
  for (const LeibnizAlgebra& g :
       {fixtures::a2(), fixtures::cyclic(3), fixtures::abelian(2),
        fixtures::cyclic3_table()}) {
    LeibnizAlgebra h = over(g);
    CHECK(schur_lie_multiplier(h).dim == schur_lie_multiplier(g).dim);
    CHECK(lie_central_series(h).class_value ==
          lie_central_series(g).class_value);
    CHECK(centers(h).lie_center.space.dim() ==
          centers(g).lie_center.space.dim());
    CoverResult ch = stem_cover(h), cg = stem_cover(g);
    REQUIRE(ch.complement_found);
    REQUIRE(cg.complement_found);
    CHECK(ch.ext->total.dim() == cg.ext->total.dim());
  }
}
