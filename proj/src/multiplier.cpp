#include "leibal/multiplier.hpp"

#include <stdexcept>

#include "leibal/relative.hpp"

namespace leibal {

namespace {

size_t default_level(const LeibnizAlgebra& g) {
  std::optional<size_t> c = ordinary_class(g);
  if (!c)
    throw unsupported_input(
        "the Schur multiplier pipeline needs an ordinary-nilpotent algebra");
  return 2 * *c + 1;
}

struct MultiplierCore {
  Presentation pres;
  Subspace FF, FR;
  QuotientFrame frame; // (r ∩ [F,F]) / [F,r]
};

MultiplierCore multiplier_core(const LeibnizAlgebra& g, size_t level) {
  Presentation p = present(g, level);
  Subspace FF = p.free->sym_span_full();
  Subspace FR = p.free->sym_span(p.kernel);
  Subspace X = intersect(p.kernel, FF);
  QuotientFrame frame(X, FR);
  return {std::move(p), std::move(FF), std::move(FR), std::move(frame)};
}

} // namespace

MultiplierResult schur_lie_multiplier(const LeibnizAlgebra& g,
                                      const MultiplierOptions& opts) {
  size_t level = opts.level ? *opts.level : default_level(g);
  if (level == 0)
    level = 1;
  MultiplierCore core = multiplier_core(g, level);

  MultiplierResult res;
  res.dim = core.frame.dim();
  res.representatives = core.frame.reps();
  for (const SVec& r : res.representatives)
    res.representative_labels.push_back(sv_str(r, core.pres.free->labels()));
  res.level_used = level;

  if (opts.stabilize) {
    MultiplierCore next = multiplier_core(g, level + 1);
    if (next.frame.dim() != res.dim)
      throw truncation_error("multiplier dimension changed between levels " +
                             std::to_string(level) + " and " +
                             std::to_string(level + 1));
    res.stabilized = true;
  }
  if (opts.verify_baer) {
    std::vector<SVec> full_basis;
    for (uint32_t i = 0; i < g.dim(); ++i)
      full_basis.push_back(SVec::unit(i));
    Presentation p = present_with(g, full_basis, level);
    Subspace FF = p.free->sym_span_full();
    Subspace FR = p.free->sym_span(p.kernel);
    size_t dim = intersect(p.kernel, FF).dim() - FR.dim();
    if (dim != res.dim)
      throw truncation_error("multiplier dimension depends on the generating "
                             "set; presentation invariance failed");
  }
  return res;
}

FourTermReport four_term_at(const Presentation& p, const IdealWitness& n) {
  const LeibnizAlgebra& g = p.target;
  if (!n.two_sided || two_sided_failure(g, n.space))
    throw not_an_ideal("four-term sequence needs a two-sided ideal");
  const Field& f = g.field();

  Subspace R = p.kernel;
  Subspace S = p.preimage(n.space);
  Subspace FF = p.free->sym_span_full();
  Subspace FR = p.free->sym_span(R);
  Subspace FS = p.free->sym_span(S);

  QuotientFrame t1(intersect(R, FS), FR);
  QuotientFrame t2(intersect(R, FF), FR);
  QuotientFrame t3(intersect(S, FF), FS);
  QuotientFrame t4(intersect(S, sum(FF, R)), sum(FS, R));

  auto map_between = [&](const QuotientFrame& from, const QuotientFrame& to) {
    std::vector<SVec> cols;
    cols.reserve(from.dim());
    for (const SVec& rep : from.reps())
      cols.push_back(to.coords(rep));
    return LinMap::from_columns(f, to.dim(), cols);
  };

  FourTermReport rep{.dims = {t1.dim(), t2.dim(), t3.dim(), t4.dim()},
                     .pi = map_between(t1, t2),
                     .sigma = map_between(t2, t3),
                     .tau = map_between(t3, t4)};
  rep.level = p.free->level();

  bool pi_injective = rep.pi.kernel().is_zero();
  bool tau_surjective = rep.tau.image().dim() == rep.dims[3];
  bool mid1 = rep.pi.image() == rep.sigma.kernel();
  bool mid2 = rep.sigma.image() == rep.tau.kernel();
  rep.exact = pi_injective && mid1 && mid2 && tau_surjective;
  rep.dims_identity = rep.dims[0] + rep.dims[2] == rep.dims[1] + rep.dims[3];

  Subspace gg = lie_commutator(g, g.full_space(), g.full_space()).space;
  Subspace gn = lie_commutator(g, g.full_space(), n.space).space;
  rep.t4_direct = intersect(n.space, gg).dim() - gn.dim();
  return rep;
}

FourTermReport four_term_sequence(const LeibnizAlgebra& g, const IdealWitness& n) {
  size_t level = default_level(g);
  FourTermReport rep = four_term_at(present(g, level), n);
  if (rep.consistent())
    return rep;
  // disagreement between the free-algebra picture and the direct computation
  // means the truncation lost something; escalate once
  rep = four_term_at(present(g, level + 1), n);
  if (!rep.consistent())
    throw truncation_error(
        "four-term sequence cross-checks failed at levels " +
        std::to_string(level) + " and " + std::to_string(level + 1));
  return rep;
}

LadderReport baer_ladder(const LeibnizAlgebra& g, const IdealWitness& b) {
  if (!b.two_sided || two_sided_failure(g, b.space))
    throw not_an_ideal("dimension ladder needs a two-sided ideal");
  size_t level = default_level(g);
  MultiplierCore core = multiplier_core(g, level);
  Subspace S = core.pres.preimage(b.space);

  LadderReport rep;
  rep.dim_m = core.frame.dim();
  rep.dim_q = intersect(S, core.FF).dim() - core.FR.dim();
  rep.dim_quotient = rep.dim_q - rep.dim_m;

  Subspace gg = lie_commutator(g, g.full_space(), g.full_space()).space;
  rep.commutator_cap = intersect(gg, b.space).dim();
  rep.quotient_identity_ok = rep.dim_quotient == rep.commutator_cap;

  rep.m_of_quotient = schur_lie_multiplier(quotient_algebra(g, b).alg).dim;
  rep.epimorphic_bound_ok = rep.m_of_quotient <= rep.dim_q;
  rep.inequality_ok = rep.m_of_quotient <= rep.dim_m + rep.commutator_cap;

  if (centers(g).lie_center.space.contains(b.space)) {
    size_t g_lie_dim = liezation(g).alg.dim();
    rep.central_lhs = rep.dim_m + rep.commutator_cap;
    rep.central_rhs = rep.m_of_quotient + b.space.dim() * g_lie_dim;
    rep.central_bound_ok = rep.central_lhs <= rep.central_rhs;
  }
  return rep;
}

Subspace theta_image(const Extension& ext, bool require_central) {
  if (require_central)
    if (auto w = lie_central_failure(ext))
      throw error("extension is not Lie-central (witness pair: " +
                  sv_str(w->first, ext.total.labels()) + ", " +
                  sv_str(w->second, ext.total.labels()) + ")");
  const LeibnizAlgebra& g = ext.total;
  size_t level = default_level(g);
  Presentation p = present(g, level);
  Subspace S = p.preimage(ext.kernel.space);
  Subspace X = intersect(S, p.free->sym_span_full());

  EchelonBuilder image(g.field(), g.dim());
  for (const SVec& row : X.rows())
    image.absorb(p.eval_of(row));
  Subspace theta = image.take();

  Subspace expected = intersect(ext.kernel.space, ann_ideal(g).space);
  if (!(theta == expected))
    throw std::logic_error("connecting-map image differs from kernel ∩ ann");
  return theta;
}

ClassCheckReport extension_class_check(const Extension& ext, size_t k) {
  if (auto w = lie_central_failure(ext))
    throw error("extension is not Lie-central (witness pair: " +
                sv_str(w->first, ext.total.labels()) + ", " +
                sv_str(w->second, ext.total.labels()) + ")");
  const LeibnizAlgebra& g = ext.total;
  const LeibnizAlgebra& q = ext.quotient;
  const Field& f = g.field();

  size_t level = default_level(g);
  Presentation p = present(g, level);
  Subspace FF = p.free->sym_span_full();

  // M(q) via the composite presentation F ->> g ->> q
  Subspace S = p.preimage(ext.kernel.space);
  Subspace FS = p.free->sym_span(S);
  QuotientFrame mq(intersect(S, FF), FS);

  // q^[k] and its preimage chain
  CentralSeries qs = lie_central_series(q);
  Subspace qk = q.zero_space();
  if (k == 0)
    qk = q.full_space();
  else if (k - 1 < qs.lower.terms.size())
    qk = qs.lower.terms[k - 1]; // terms[i] = q^[i+1]
  Subspace m = solve_membership({ext.projection}, qk);
  Subspace T = p.preimage(m);
  Subspace FT = p.free->sym_span(T);
  QuotientFrame mqk(intersect(T, FF), FT);

  std::vector<SVec> cols;
  for (const SVec& rep : mq.reps())
    cols.push_back(mqk.coords(rep));
  LinMap tau = LinMap::from_columns(f, mqk.dim(), cols);

  Subspace ker_tau = tau.kernel();
  EchelonBuilder theta_img(f, g.dim());
  for (const SVec& kt : ker_tau.rows())
    theta_img.absorb(p.eval_of(mq.lift(kt)));

  // the vanishing criterion decides class(g) <= k only on top of
  // class(q) <= k; below that the kernel of tau is too small to see g
  bool q_class_ok =
      qs.lower.lie_nilpotent && qs.class_value && *qs.class_value <= k;
  ClassCheckReport rep{.class_at_most_k = q_class_ok && theta_img.rank() == 0,
                       .ker_tau_dim = ker_tau.dim(),
                       .theta_on_ker_tau = theta_img.take(),
                       .direct_class = std::nullopt};

  CentralSeries gs = lie_central_series(g);
  rep.direct_class = gs.class_value;
  bool direct_at_most_k = gs.lower.lie_nilpotent && gs.class_value &&
                          *gs.class_value <= k;
  if (rep.class_at_most_k != direct_at_most_k)
    throw truncation_error("class criterion disagrees with the direct series");
  return rep;
}

PerfectQuotientReport perfect_quotient_iso_check(const Extension& ext) {
  PerfectQuotientReport rep;
  rep.g_lie_nilpotent = lie_central_series(ext.total).lower.lie_nilpotent;
  Subspace gg = lie_commutator(ext.total, ext.total.full_space(),
                               ext.total.full_space())
                    .space;
  rep.kernel_in_commutator = gg.contains(ext.kernel.space);
  rep.multiplier_of_quotient = schur_lie_multiplier(ext.quotient).dim;
  rep.applicable = rep.g_lie_nilpotent && rep.kernel_in_commutator &&
                   rep.multiplier_of_quotient == 0;
  rep.is_isomorphism = ext.kernel.space.is_zero();
  if (rep.applicable && !rep.is_isomorphism)
    throw std::logic_error("a surjection with trivial quotient multiplier and "
                           "kernel inside the commutator must be injective");
  return rep;
}

} // namespace leibal
