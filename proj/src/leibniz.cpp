#include "leibal/leibniz.hpp"

#include <stdexcept>

namespace leibal {

LeibnizAlgebra::LeibnizAlgebra(Field f, size_t dim,
                               std::vector<std::string> labels,
                               const std::vector<BracketEntry>& entries)
    : f_(f), dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(dim_);
    for (size_t i = 0; i < dim_; ++i)
      labels_.push_back("a" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_)
    throw dim_mismatch("label count does not match dimension");
  std::vector<std::vector<std::vector<mpq_class>>> dense(
      dim_, std::vector<std::vector<mpq_class>>(dim_));
  for (const auto& e : entries) {
    if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
      throw dim_mismatch("structure constant index out of range");
    auto& cell = dense[e.i][e.j];
    if (cell.empty())
      cell.assign(dim_, mpq_class(0));
    if (!f_.is_zero(cell[e.k]))
      throw error("duplicate structure constant for ([" + std::to_string(e.i + 1) +
                  "," + std::to_string(e.j + 1) + "], " + std::to_string(e.k + 1) + ")");
    cell[e.k] = f_.reduce(e.c);
  }
  table_.assign(dim_, std::vector<SVec>(dim_));
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j)
      if (!dense[i][j].empty())
        table_[i][j] = sv_from_dense(f_, dense[i][j]);
}

SVec LeibnizAlgebra::bracket(const SVec& u, const SVec& v) const {
  if ((!u.is_zero() && u.t.back().first >= dim_) ||
      (!v.is_zero() && v.t.back().first >= dim_))
    throw dim_mismatch("bracket operand outside the algebra");
  SVec out;
  for (const auto& [i, cu] : u.t)
    for (const auto& [j, cv] : v.t)
      sv_axpy(f_, out, f_.mul(cu, cv), table_[i][j]);
  return out;
}

LinMap LeibnizAlgebra::left_mult(const SVec& u) const {
  std::vector<SVec> cols(dim_);
  for (uint32_t j = 0; j < dim_; ++j)
    cols[j] = bracket(u, SVec::unit(j));
  return LinMap::from_columns(f_, dim_, cols);
}

LinMap LeibnizAlgebra::right_mult(const SVec& u) const {
  std::vector<SVec> cols(dim_);
  for (uint32_t j = 0; j < dim_; ++j)
    cols[j] = bracket(SVec::unit(j), u);
  return LinMap::from_columns(f_, dim_, cols);
}

LinMap LeibnizAlgebra::sym_mult(const SVec& u) const {
  std::vector<SVec> cols(dim_);
  for (uint32_t j = 0; j < dim_; ++j) {
    SVec ej = SVec::unit(j);
    cols[j] = sv_add(f_, bracket(u, ej), bracket(ej, u));
  }
  return LinMap::from_columns(f_, dim_, cols);
}

std::vector<BracketEntry> LeibnizAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (uint32_t i = 0; i < dim_; ++i)
    for (uint32_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : table_[i][j].t)
        out.push_back({i, j, k, c});
  return out;
}

LeibnizVerdict check_leibniz(const LeibnizAlgebra& g) {
  const Field& f = g.field();
  const size_t n = g.dim();
  // iteration order chosen so the first failure reported is the one with the
  // smallest (k, j, i)
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) {
        SVec ei = SVec::unit(static_cast<uint32_t>(i));
        SVec lhs = g.bracket(ei, g.basis_bracket(j, k));
        SVec rhs = sv_sub(f, g.bracket(g.basis_bracket(i, j), SVec::unit(static_cast<uint32_t>(k))),
                          g.bracket(g.basis_bracket(i, k), SVec::unit(static_cast<uint32_t>(j))));
        if (!(lhs == rhs))
          return {false, LeibnizWitness{i, j, k, lhs, rhs}};
      }
  return {true, std::nullopt};
}

std::optional<std::pair<SVec, SVec>> subalgebra_failure(const LeibnizAlgebra& g,
                                                        const Subspace& s) {
  for (const SVec& u : s.rows())
    for (const SVec& v : s.rows())
      if (!s.contains(g.bracket(u, v)))
        return std::make_pair(u, v);
  return std::nullopt;
}

std::optional<std::pair<SVec, SVec>> two_sided_failure(const LeibnizAlgebra& g,
                                                       const Subspace& s) {
  for (const SVec& u : s.rows())
    for (uint32_t j = 0; j < g.dim(); ++j) {
      SVec ej = SVec::unit(j);
      if (!s.contains(g.bracket(u, ej)))
        return std::make_pair(u, ej);
      if (!s.contains(g.bracket(ej, u)))
        return std::make_pair(ej, u);
    }
  return std::nullopt;
}

IdealWitness make_ideal(const LeibnizAlgebra& g, const Subspace& s) {
  if (auto w = two_sided_failure(g, s)) {
    throw not_an_ideal("subspace is not a two-sided ideal (offending pair: " +
                       sv_str(w->first, g.labels()) + ", " +
                       sv_str(w->second, g.labels()) + ")");
  }
  return {s, true};
}

IdealWitness ideal_closure(const LeibnizAlgebra& g, const Subspace& seed) {
  EchelonBuilder b(g.field(), g.dim());
  for (const SVec& v : seed.rows())
    b.absorb(v);
  // each round adjoins [s, e_j] and [e_j, s]; at most dim(g) rank increases
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SVec> cur = b.rows();
    for (const SVec& u : cur)
      for (uint32_t j = 0; j < g.dim(); ++j) {
        SVec ej = SVec::unit(j);
        if (b.absorb(g.bracket(u, ej)))
          grew = true;
        if (b.absorb(g.bracket(ej, u)))
          grew = true;
      }
  }
  return {b.take(), true};
}

Subspace subalgebra_closure(const LeibnizAlgebra& g, const std::vector<SVec>& seed) {
  EchelonBuilder b(g.field(), g.dim());
  for (const SVec& v : seed)
    b.absorb(v);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SVec> cur = b.rows();
    for (const SVec& u : cur)
      for (const SVec& v : cur)
        if (b.absorb(g.bracket(u, v)))
          grew = true;
  }
  return b.take();
}

IdealWitness ann_ideal(const LeibnizAlgebra& g) {
  const Field& f = g.field();
  EchelonBuilder b(f, g.dim());
  for (uint32_t i = 0; i < g.dim(); ++i)
    for (uint32_t j = i; j < g.dim(); ++j)
      b.absorb(sv_add(f, g.basis_bracket(i, j), g.basis_bracket(j, i)));
  Subspace ann = b.take();

  // polarization: the span of squares [v,v] over basis vectors and pairwise
  // sums matches the symmetrized span (char != 2)
  EchelonBuilder sq(f, g.dim());
  for (uint32_t i = 0; i < g.dim(); ++i)
    for (uint32_t j = i; j < g.dim(); ++j) {
      SVec v = sv_add(f, SVec::unit(i), SVec::unit(j));
      sq.absorb(g.bracket(v, v));
    }
  if (!(sq.take() == ann))
    throw std::logic_error("polarization identity failed for the square span");

  if (two_sided_failure(g, ann))
    throw not_an_ideal("square span is not a two-sided ideal; "
                       "the input does not satisfy the Leibniz identity");
  return {ann, true};
}

Quotient quotient_algebra(const LeibnizAlgebra& g, const IdealWitness& n) {
  if (!n.two_sided || two_sided_failure(g, n.space))
    throw not_an_ideal("quotient by a subspace that is not a two-sided ideal");
  const Field& f = g.field();
  std::vector<SVec> reps = quotient_basis(g.full_space(), n.space);
  LinMap proj = quotient_map(n.space);
  const size_t q = reps.size();

  std::vector<std::string> labels;
  labels.reserve(q);
  for (const SVec& r : reps)
    labels.push_back(g.labels()[r.lead()]);

  std::vector<BracketEntry> entries;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      SVec img = proj.apply(g.bracket(reps[a], reps[b]));
      for (const auto& [k, c] : img.t)
        entries.push_back({a, b, k, c});
    }
  LeibnizAlgebra alg(f, q, labels, entries);

  // projection must be a homomorphism onto the quotient constants
  for (uint32_t i = 0; i < g.dim(); ++i)
    for (uint32_t j = 0; j < g.dim(); ++j) {
      SVec lhs = proj.apply(g.bracket(SVec::unit(i), SVec::unit(j)));
      SVec rhs = alg.bracket(proj.apply(SVec::unit(i)), proj.apply(SVec::unit(j)));
      if (!(lhs == rhs))
        throw std::logic_error("quotient projection is not a homomorphism");
    }
  if (!check_leibniz(alg).ok)
    throw std::logic_error("quotient of a Leibniz algebra failed check_leibniz");
  return {std::move(alg), std::move(proj), std::move(reps)};
}

Quotient liezation(const LeibnizAlgebra& g) {
  Quotient q = quotient_algebra(g, ann_ideal(g));
  const Field& f = g.field();
  for (uint32_t i = 0; i < q.alg.dim(); ++i)
    for (uint32_t j = 0; j < q.alg.dim(); ++j) {
      SVec anti = sv_add(f, q.alg.basis_bracket(i, j), q.alg.basis_bracket(j, i));
      if (!anti.is_zero())
        throw std::logic_error("largest Lie quotient is not antisymmetric");
    }
  return q;
}

Centers centers(const LeibnizAlgebra& g) {
  Subspace zero = g.zero_space();
  std::vector<LinMap> left, right, both, sym;
  for (uint32_t i = 0; i < g.dim(); ++i) {
    SVec ei = SVec::unit(i);
    left.push_back(g.left_mult(ei));   // a -> [e_i, a]
    right.push_back(g.right_mult(ei)); // a -> [a, e_i]
    sym.push_back(g.sym_mult(ei));
  }
  if (g.dim() == 0) {
    IdealWitness z{zero, true};
    return {z, z, z};
  }
  both = left;
  both.insert(both.end(), right.begin(), right.end());

  Centers c{{solve_membership(both, zero), false},
            {solve_membership(left, zero), false},
            {solve_membership(sym, zero), false}};
  for (IdealWitness* w : {&c.center, &c.right_center, &c.lie_center}) {
    if (two_sided_failure(g, w->space))
      throw std::logic_error("a center failed to be a two-sided ideal");
    w->two_sided = true;
  }
  if (!c.lie_center.space.contains(c.center.space) ||
      !c.right_center.space.contains(c.center.space))
    throw std::logic_error("center containment Z ⊆ Z_lie, Z ⊆ Z^r violated");
  return c;
}

std::vector<Subspace> ordinary_lower_series(const LeibnizAlgebra& g) {
  std::vector<Subspace> terms{g.full_space()};
  while (true) {
    const Subspace& cur = terms.back();
    EchelonBuilder b(g.field(), g.dim());
    for (const SVec& u : cur.rows())
      for (uint32_t j = 0; j < g.dim(); ++j)
        b.absorb(g.bracket(u, SVec::unit(j)));
    Subspace next = b.take();
    if (next == cur)
      break;
    terms.push_back(std::move(next));
    if (terms.back().is_zero())
      break;
  }
  return terms;
}

std::optional<size_t> ordinary_class(const LeibnizAlgebra& g) {
  std::vector<Subspace> s = ordinary_lower_series(g);
  if (!s.back().is_zero())
    return std::nullopt;
  // s[i] = γ_{i+1}; class c means γ_{c+1} = 0, γ_c != 0
  return s.size() - 1;
}

} // namespace leibal
