#include "leibal/relative.hpp"

#include <random>
#include <stdexcept>

namespace leibal {

IdealWitness lie_commutator(const LeibnizAlgebra& g, const Subspace& m,
                            const Subspace& n) {
  if (m.ambient() != g.dim() || n.ambient() != g.dim() ||
      m.field() != g.field() || n.field() != g.field())
    throw dim_mismatch("lie_commutator arguments outside the algebra");
  const Field& f = g.field();
  EchelonBuilder b(f, g.dim());
  for (const SVec& u : m.rows())
    for (const SVec& v : n.rows())
      b.absorb(sv_add(f, g.bracket(u, v), g.bracket(v, u)));
  Subspace space = b.take();
  bool result_ideal = !two_sided_failure(g, space).has_value();
  if (!result_ideal && !two_sided_failure(g, m) && !two_sided_failure(g, n))
    throw std::logic_error("symmetrized bracket of two ideals failed to be an "
                           "ideal; input is not a Leibniz algebra");
  return {std::move(space), result_ideal};
}

IdealWitness lie_centralizer(const LeibnizAlgebra& g, const IdealWitness& m,
                             const IdealWitness& n) {
  for (const IdealWitness* w : {&m, &n}) {
    if (!w->two_sided)
      throw not_an_ideal("lie_centralizer requires two-sided ideals");
    if (auto fail = two_sided_failure(g, w->space))
      throw not_an_ideal("lie_centralizer argument is not two-sided "
                         "(offending pair: " +
                         sv_str(fail->first, g.labels()) + ", " +
                         sv_str(fail->second, g.labels()) + ")");
  }
  Subspace result = g.full_space();
  if (!m.space.is_zero()) {
    std::vector<LinMap> maps;
    maps.reserve(m.space.dim());
    for (const SVec& u : m.space.rows())
      maps.push_back(g.sym_mult(u)); // q -> [u,q] + [q,u]
    result = solve_membership(maps, n.space);
  }
  if (auto fail = two_sided_failure(g, result))
    throw std::logic_error("centralizer of ideals is not a two-sided ideal");
  if (!result.contains(centers(g).center.space))
    throw std::logic_error("centralizer does not contain the center");
  return {std::move(result), true};
}

Subspace lie_normalizer(const LeibnizAlgebra& g, const Subspace& m) {
  if (m.ambient() != g.dim() || m.field() != g.field())
    throw dim_mismatch("lie_normalizer argument outside the algebra");
  if (m.is_zero())
    return g.full_space(); // no conditions to impose
  std::vector<LinMap> maps;
  maps.reserve(m.dim());
  for (const SVec& u : m.rows())
    maps.push_back(g.sym_mult(u));
  Subspace result = solve_membership(maps, m);
  if (!subalgebra_failure(g, m) && !result.contains(m))
    throw std::logic_error("normalizer of a subalgebra must contain it");
  return result;
}

namespace {

SeriesReport finish_report(std::vector<Subspace> terms, bool ascending,
                           const Subspace& full) {
  SeriesReport r;
  r.terms = std::move(terms);
  r.stabilized_at = r.terms.size() - 1;
  if (ascending) {
    r.lie_nilpotent = r.terms.back() == full;
    if (r.lie_nilpotent)
      r.class_value = r.terms.size() - 1; // Z_k = g first at k
  } else {
    r.lie_nilpotent = r.terms.back().is_zero();
    if (r.lie_nilpotent)
      r.class_value = r.terms.size() - 1; // Q^[k+1] = 0 first at index k
  }
  return r;
}

} // namespace

CentralSeries lie_central_series(const LeibnizAlgebra& g) {
  const Subspace full = g.full_space();
  const size_t bound = g.dim() + 1;

  std::vector<Subspace> lower{full};
  while (lower.size() <= bound) {
    Subspace next = lie_commutator(g, lower.back(), full).space;
    if (next == lower.back())
      break;
    lower.push_back(std::move(next));
    if (lower.back().is_zero())
      break;
  }

  std::vector<Subspace> upper{g.zero_space()};
  IdealWitness full_ideal{full, true};
  while (upper.size() <= bound) {
    IdealWitness prev{upper.back(), true};
    Subspace next = lie_centralizer(g, full_ideal, prev).space;
    if (next == upper.back())
      break;
    upper.push_back(std::move(next));
    if (upper.back() == full)
      break;
  }

  CentralSeries out;
  out.lower = finish_report(std::move(lower), false, full);
  out.upper = finish_report(std::move(upper), true, full);
  out.classes_agree = out.lower.lie_nilpotent == out.upper.lie_nilpotent &&
                      out.lower.class_value == out.upper.class_value;
  if (out.classes_agree)
    out.class_value = out.lower.class_value;
  return out;
}

std::vector<Subspace> relative_lower_series(const LeibnizAlgebra& g,
                                            const IdealWitness& n, size_t bound) {
  if (!n.two_sided)
    throw not_an_ideal("relative series needs a two-sided ideal");
  const Subspace full = g.full_space();
  std::vector<Subspace> terms{n.space};
  while (terms.size() < bound) {
    Subspace next = lie_commutator(g, terms.back(), full).space;
    if (next == terms.back())
      break;
    terms.push_back(std::move(next));
    if (terms.back().is_zero())
      break;
  }
  return terms;
}

NormalizerProbe normalizer_condition_probe(const LeibnizAlgebra& g,
                                           size_t trials, uint64_t seed) {
  NormalizerProbe report;
  report.seed = seed;
  if (g.dim() == 0)
    return report; // no proper subalgebras
  std::mt19937_64 rng(seed);
  auto rand_coeff = [&]() { return mpq_class(static_cast<long>(rng() % 5) - 2); };

  for (size_t t = 0; t < trials; ++t) {
    Subspace s = g.zero_space();
    for (int attempt = 0; attempt < 50; ++attempt) {
      size_t count = 1 + rng() % g.dim();
      std::vector<SVec> seeds;
      for (size_t v = 0; v < count; ++v) {
        std::vector<mpq_class> coords(g.dim());
        for (auto& c : coords)
          c = rand_coeff();
        seeds.push_back(sv_from_dense(g.field(), coords));
      }
      Subspace cand = subalgebra_closure(g, seeds);
      if (!cand.is_full()) {
        s = std::move(cand);
        break;
      }
    }
    ++report.tested;
    Subspace norm = lie_normalizer(g, s);
    if (!(norm.contains(s) && norm.dim() > s.dim())) {
      report.pass = false;
      report.counterexample = s;
      return report;
    }
  }
  return report;
}

} // namespace leibal
