#include "leibal/covers.hpp"

#include <random>
#include <stdexcept>

#include "leibal/relative.hpp"

namespace leibal {

ExtensionFlags classify_extension(const Extension& ext) {
  ExtensionFlags flags;
  flags.lie_central = !lie_central_failure(ext).has_value();
  if (!flags.lie_central)
    return flags;
  flags.stem = ann_ideal(ext.total).space.contains(ext.kernel.space);
  if (!flags.stem)
    return flags;
  flags.cover =
      ext.kernel.space.dim() == schur_lie_multiplier(ext.quotient).dim;
  return flags;
}

CoverResult stem_cover(const LeibnizAlgebra& g, uint64_t seed) {
  const Field& f = g.field();
  std::optional<size_t> c = ordinary_class(g);
  if (!c)
    throw unsupported_input("stem cover construction needs an "
                            "ordinary-nilpotent algebra");
  size_t level = std::max<size_t>(2 * *c + 1, 1);
  Presentation p = present(g, level);
  const TruncatedFreeAlgebra& F = *p.free;

  Subspace R = p.kernel;
  Subspace B = F.sym_span(R);             // [F, r]_sym
  Subspace FF = F.sym_span_full();        // [F, F]_sym
  Subspace X = intersect(R, FF);          // r ∩ [F, F]_sym
  QuotientFrame V(R, B);                  // r / [F, r]_sym

  // multiplier part of V
  EchelonBuilder mb(f, V.dim());
  for (const SVec& row : X.rows())
    mb.absorb(V.coords(row));
  Subspace M = mb.take();
  const size_t m = M.dim();

  CoverResult out;
  out.multiplier_dim = m;
  out.seed = seed;
  out.level = level;

  // initial complement W: coordinate complement of M in V, optionally
  // sheared into M by the seed
  std::vector<SVec> w_basis = M.coordinate_complement().rows();
  const size_t k = w_basis.size();
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (SVec& w : w_basis)
      for (const SVec& mrow : M.rows()) {
        long r = static_cast<long>(rng() % 5) - 2;
        sv_axpy(f, w, mpq_class(r), mrow);
      }
  }

  // change of basis V -> (W-coordinates | M-coordinates)
  std::vector<SVec> basis_cols = w_basis;
  for (const SVec& mrow : M.rows())
    basis_cols.push_back(mrow);
  LinMap to_parts = inverse(LinMap::from_columns(f, V.dim(), basis_cols));

  auto split = [&](const SVec& v) {
    SVec y = to_parts.apply(v);
    SVec u, b;
    for (const auto& [j, cc] : y.t) {
      if (j < k)
        u.t.emplace_back(j, cc);
      else
        b.t.emplace_back(j - static_cast<uint32_t>(k), cc);
    }
    return std::make_pair(u, b);
  };

  // linear constraints phi(proj_W [f,w]) = proj_M [f,w]
  EchelonBuilder constraints(f, k + m);
  std::vector<SVec> w_lift(k);
  for (size_t j = 0; j < k; ++j)
    w_lift[j] = V.lift(w_basis[j]);
  for (size_t wi = 0; wi < F.dim(); ++wi) {
    SVec word = SVec::unit(static_cast<uint32_t>(wi));
    for (size_t j = 0; j < k; ++j) {
      SVec act = F.bracket(word, w_lift[j]);
      if (act.is_zero())
        continue;
      auto [u, b] = split(V.coords(act));
      SVec eq = u;
      for (const auto& [idx, cc] : b.t)
        eq.t.emplace_back(static_cast<uint32_t>(k) + idx, cc);
      constraints.absorb(std::move(eq));
    }
  }
  for (size_t r = 0; r < constraints.rank(); ++r)
    if (constraints.pivots()[r] >= k) {
      out.complement_found = false; // inconsistent: no invariant complement here
      return out;
    }

  // phi on W-coordinates: pivot columns get the M-part, free columns zero
  std::vector<SVec> phi_of(k); // phi(e_j) in M-coordinates
  for (size_t r = 0; r < constraints.rank(); ++r) {
    const SVec& row = constraints.rows()[r];
    SVec b;
    for (const auto& [idx, cc] : row.t)
      if (idx >= k)
        b.t.emplace_back(idx - static_cast<uint32_t>(k), cc);
    phi_of[constraints.pivots()[r]] = std::move(b);
  }

  // invariant complement C = { w_j + phi(w_j) } lifted back to the free algebra
  EchelonBuilder sb(f, F.dim());
  for (const SVec& row : B.rows())
    sb.absorb(row);
  std::vector<SVec> c_lift(k);
  for (size_t j = 0; j < k; ++j) {
    SVec cj = w_basis[j];
    for (const auto& [a, cc] : phi_of[j].t)
      sv_axpy(f, cj, cc, M.rows()[a]);
    c_lift[j] = V.lift(cj);
    sb.absorb(c_lift[j]);
  }
  Subspace Sbar = sb.take();

  if (!R.contains(Sbar) || Sbar.dim() != B.dim() + k)
    throw std::logic_error("constructed complement left the kernel");
  if (!(intersect(Sbar, X) == B))
    throw std::logic_error("constructed subspace does not complement the "
                           "multiplier part");
  // one-sided bracket invariance on the new generators; the other side
  // follows because symmetrized brackets with kernel elements land in B
  for (size_t wi = 0; wi < F.dim(); ++wi) {
    SVec word = SVec::unit(static_cast<uint32_t>(wi));
    for (size_t j = 0; j < k; ++j) {
      SVec lf = F.bracket(word, c_lift[j]);
      if (!Sbar.contains(lf))
        throw std::logic_error("complement is not bracket-invariant");
      SVec sym = sv_add(f, lf, F.bracket(c_lift[j], word));
      if (!B.contains(sym))
        throw std::logic_error("symmetrized bracket escaped [F,r]");
    }
  }

  // cover algebra F / S
  QuotientFrame Q(F.full_space(), Sbar);
  const size_t q = Q.dim();
  std::vector<std::string> labels;
  for (const SVec& rep : Q.reps())
    labels.push_back(F.word_label(rep.lead()));
  std::vector<BracketEntry> entries;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      SVec img = Q.coords(F.bracket(Q.reps()[a], Q.reps()[b]));
      for (const auto& [kk, cc] : img.t)
        entries.push_back({a, b, kk, cc});
    }
  LeibnizAlgebra cover(f, q, labels, entries);
  if (!check_leibniz(cover).ok)
    throw std::logic_error("cover quotient failed the Leibniz identity");

  // projection cover -> g via evaluation on representatives
  std::vector<SVec> proj_cols;
  for (const SVec& rep : Q.reps())
    proj_cols.push_back(p.eval_of(rep));
  LinMap psi = LinMap::from_columns(f, g.dim(), proj_cols);

  out.ext = make_extension(cover, g, psi);
  if (out.ext->kernel.space.dim() != m)
    throw std::logic_error("cover kernel dimension differs from the multiplier");
  out.complement_found = true;
  return out;
}

IsoclinicProbe covers_isoclinic_check(const LeibnizAlgebra& g, size_t trials,
                                      uint64_t seed) {
  IsoclinicProbe probe;
  probe.seed = seed;
  for (size_t t = 0; t < trials; ++t) {
    CoverResult res = stem_cover(g, seed + t);
    if (!res.complement_found)
      continue;
    const Extension& e = *res.ext;
    probe.covers_built++;
    probe.cover_dims.push_back(e.total.dim());
    probe.commutator_dims.push_back(
        lie_commutator(e.total, e.total.full_space(), e.total.full_space())
            .space.dim());
    Subspace z = centers(e.total).lie_center.space;
    if (!z.contains(e.kernel.space))
      throw std::logic_error("cover kernel is not Lie-central");
    probe.center_quotient_dims.push_back(z.dim() - e.kernel.space.dim());
  }
  probe.pass = probe.covers_built > 0;
  for (size_t i = 1; i < probe.covers_built; ++i) {
    if (probe.cover_dims[i] != probe.cover_dims[0] ||
        probe.commutator_dims[i] != probe.commutator_dims[0] ||
        probe.center_quotient_dims[i] != probe.center_quotient_dims[0])
      probe.pass = false;
  }
  return probe;
}

namespace {

// coordinates of v in the echelon basis of D (v must lie in D)
SVec coords_in(const Subspace& D, const SVec& v) {
  if (!D.contains(v))
    throw containment_error("vector outside the expected commutator subspace");
  SVec out;
  size_t ri = 0;
  for (const auto& [j, c] : v.t) {
    while (ri < D.pivots().size() && D.pivots()[ri] < j)
      ++ri;
    if (ri < D.pivots().size() && D.pivots()[ri] == j)
      out.t.emplace_back(static_cast<uint32_t>(ri), c);
  }
  return out;
}

LinMap section_of(const Extension& e) {
  std::vector<SVec> cols;
  for (uint32_t a = 0; a < e.quotient.dim(); ++a) {
    auto x = solve_particular(e.projection, SVec::unit(a));
    if (!x)
      throw bad_homomorphism("projection admits no section");
    cols.push_back(*x);
  }
  return LinMap::from_columns(e.total.field(), e.total.dim(), cols);
}

SVec commutator_map(const Extension& e, const LinMap& sec, const SVec& u,
                    const SVec& v) {
  const Field& f = e.total.field();
  SVec su = sec.apply(u), sv = sec.apply(v);
  return sv_add(f, e.total.bracket(su, sv), e.total.bracket(sv, su));
}

} // namespace

IsoclinismReport verify_isoclinism(const Extension& e1, const Extension& e2,
                                   const IsoclinismWitness& w) {
  for (const Extension* e : {&e1, &e2})
    if (lie_central_failure(*e))
      throw error("isoclinism is defined between Lie-central extensions");
  const Field& f = e1.total.field();

  Subspace D1 = lie_commutator(e1.total, e1.total.full_space(),
                               e1.total.full_space())
                    .space;
  Subspace D2 = lie_commutator(e2.total, e2.total.full_space(),
                               e2.total.full_space())
                    .space;

  IsoclinismReport rep;
  if (w.eta.cols() != e1.quotient.dim() || w.eta.rows() != e2.quotient.dim())
    throw dim_mismatch("eta shape does not match the quotients");
  if (w.xi.cols() != D1.dim() || w.xi.rows() != D2.dim())
    throw dim_mismatch("xi shape does not match the commutator subspaces");
  if (w.eta.cols() != w.eta.rows() || w.eta.image().dim() != w.eta.rows()) {
    rep.failure = "eta is not invertible";
    return rep;
  }
  if (w.xi.cols() != w.xi.rows() || w.xi.image().dim() != w.xi.rows()) {
    rep.failure = "xi is not invertible";
    return rep;
  }

  LinMap s1 = section_of(e1), s2 = section_of(e2);

  // well-definedness of the commutator maps over the choice of lifts
  for (const Extension* e : {&e1, &e2}) {
    const LinMap& sec = e == &e1 ? s1 : s2;
    if (e->kernel.space.is_zero())
      continue;
    // shift every lift by the first kernel vector: a different section
    std::vector<SVec> scols;
    for (uint32_t a = 0; a < e->quotient.dim(); ++a)
      scols.push_back(sv_add(f, sec.column(a), e->kernel.space.rows().front()));
    LinMap shifted = LinMap::from_columns(f, e->total.dim(), scols);
    for (uint32_t a = 0; a < e->quotient.dim(); ++a)
      for (uint32_t b = 0; b < e->quotient.dim(); ++b) {
        SVec ea = SVec::unit(a), eb = SVec::unit(b);
        SVec c0 = commutator_map(*e, sec, ea, eb);
        SVec c1 = commutator_map(*e, shifted, ea, eb);
        if (!(c0 == c1))
          throw std::logic_error("commutator map depends on the lift choice");
      }
  }

  for (uint32_t a = 0; a < e1.quotient.dim(); ++a)
    for (uint32_t b = 0; b < e1.quotient.dim(); ++b) {
      SVec ea = SVec::unit(a), eb = SVec::unit(b);
      SVec lhs = w.xi.apply(coords_in(D1, commutator_map(e1, s1, ea, eb)));
      SVec rhs = coords_in(
          D2, commutator_map(e2, s2, w.eta.apply(ea), w.eta.apply(eb)));
      if (!(lhs == rhs)) {
        rep.failure = "square does not commute on (" +
                      e1.quotient.labels()[a] + ", " +
                      e1.quotient.labels()[b] + ")";
        return rep;
      }
    }
  rep.verified = true;
  return rep;
}

Subspace precise_lie_center(const LeibnizAlgebra& g) {
  auto image_of_center = [&](uint64_t seed) {
    CoverResult res = stem_cover(g, seed);
    if (!res.complement_found)
      throw unsupported_input("no bracket-invariant complement found; cannot "
                              "construct a stem cover (seed " +
                              std::to_string(seed) + ")");
    Subspace z = centers(res.ext->total).lie_center.space;
    EchelonBuilder img(g.field(), g.dim());
    for (const SVec& row : z.rows())
      img.absorb(res.ext->projection.apply(row));
    return img.take();
  };
  Subspace z0 = image_of_center(0);
  Subspace z1 = image_of_center(1);
  if (!(z0 == z1))
    throw std::logic_error("precise Lie-center depends on the complement seed");
  return z0;
}

CapabilityReport is_lie_capable(const LeibnizAlgebra& g) {
  CapabilityReport rep{.capable = false,
                       .z_star = precise_lie_center(g),
                       .sigma_criterion_ok = true,
                       .sigma_kernel_dims = {}};
  rep.capable = rep.z_star.is_zero();

  // monomorphism criterion sampled on a basis of the Lie-center
  Subspace z = centers(g).lie_center.space;
  for (const SVec& x : z.rows()) {
    IdealWitness nx = ideal_closure(g, span(g.field(), g.dim(), {x}));
    FourTermReport ft = four_term_sequence(g, nx);
    rep.sigma_kernel_dims.push_back(ft.dims[0]);
    if (rep.capable && ft.dims[0] == 0)
      rep.sigma_criterion_ok = false; // capable => every sigma_x has kernel
  }
  for (const SVec& x : rep.z_star.rows()) {
    IdealWitness nx = ideal_closure(g, span(g.field(), g.dim(), {x}));
    if (four_term_sequence(g, nx).dims[0] != 0)
      rep.sigma_criterion_ok = false; // x in Z* => sigma_x injective
  }
  return rep;
}

EquivalenceReport capability_equivalences(const LeibnizAlgebra& g,
                                          const IdealWitness& n) {
  if (!centers(g).lie_center.space.contains(n.space))
    throw error("capability equivalences need a Lie-central ideal");
  FourTermReport ft = four_term_sequence(g, n);

  EquivalenceReport rep;
  rep.m_g = ft.dims[1];
  rep.m_gn = ft.dims[2];
  rep.ker_sigma = ft.dims[0];
  Subspace gg = lie_commutator(g, g.full_space(), g.full_space()).space;
  rep.cap_dim = intersect(n.space, gg).dim();

  rep.a_holds = rep.cap_dim + rep.m_g == rep.m_gn;
  rep.b_holds = precise_lie_center(g).contains(n.space);
  rep.c_holds = rep.ker_sigma == 0;
  rep.equivalent = rep.a_holds == rep.b_holds && rep.b_holds == rep.c_holds;
  return rep;
}

HopfianReport hopfian_check(const Extension& e1, const Extension& e2,
                            const LinMap& eta) {
  HopfianReport rep;
  if (!(e1.quotient == e2.quotient)) {
    rep.failure = "extensions do not cover the same algebra";
    return rep;
  }
  for (const Extension* e : {&e1, &e2}) {
    ExtensionFlags flags = classify_extension(*e);
    if (!flags.cover) {
      rep.failure = "extension is not a stem cover";
      return rep;
    }
  }
  if (eta.cols() != e1.total.dim() || eta.rows() != e2.total.dim())
    throw dim_mismatch("eta shape does not match the covers");
  for (uint32_t i = 0; i < e1.total.dim(); ++i)
    for (uint32_t j = 0; j < e1.total.dim(); ++j) {
      SVec lhs = eta.apply(e1.total.basis_bracket(i, j));
      SVec rhs = e2.total.bracket(eta.apply(SVec::unit(i)),
                                  eta.apply(SVec::unit(j)));
      if (!(lhs == rhs)) {
        rep.failure = "eta is not a homomorphism";
        return rep;
      }
    }
  if (eta.image().dim() != e2.total.dim()) {
    rep.failure = "eta is not surjective";
    return rep;
  }
  for (const SVec& u : e1.kernel.space.rows())
    if (!e2.kernel.space.contains(eta.apply(u))) {
      rep.failure = "eta does not map the first kernel into the second";
      return rep;
    }
  rep.hypotheses_ok = true;
  rep.injective = eta.kernel().is_zero();
  return rep;
}

} // namespace leibal
