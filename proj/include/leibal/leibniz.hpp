#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibal/linmap.hpp"
#include "leibal/subspace.hpp"

namespace leibal {

/// One sparse structure constant: [e_i, e_j] += c * e_k (0-based indices).
struct BracketEntry {
  uint32_t i, j, k;
  mpq_class c;
};

/// Finite-dimensional algebra with bilinear bracket, given by structure
/// constants over an exact field.  Only nonzero constants are stored; the
/// bracket need not satisfy any identity until check_leibniz says so.
class LeibnizAlgebra {
public:
  LeibnizAlgebra(Field f, size_t dim, std::vector<std::string> labels,
                 const std::vector<BracketEntry>& entries);

  size_t dim() const { return dim_; }
  const Field& field() const { return f_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j]
  const SVec& basis_bracket(size_t i, size_t j) const { return table_[i][j]; }

  SVec bracket(const SVec& u, const SVec& v) const;

  LinMap left_mult(const SVec& u) const;  // v -> [u, v]
  LinMap right_mult(const SVec& u) const; // v -> [v, u]
  LinMap sym_mult(const SVec& u) const;   // v -> [u, v] + [v, u]

  /// Sparse table back out, row-major, deterministic order.
  std::vector<BracketEntry> entries() const;

  Subspace full_space() const { return Subspace::full(f_, dim_); }
  Subspace zero_space() const { return Subspace::zero(f_, dim_); }

  bool operator==(const LeibnizAlgebra& o) const {
    return f_ == o.f_ && dim_ == o.dim_ && table_ == o.table_;
  }

private:
  Field f_;
  size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SVec>> table_; // table_[i][j] = [e_i, e_j]
};

/// A subspace together with the (verified) claim that it is a two-sided
/// ideal of the algebra it came from.
struct IdealWitness {
  Subspace space;
  bool two_sided = false;
};

struct LeibnizWitness {
  size_t i, j, k; // basis triple (e_i, e_j, e_k)
  SVec lhs, rhs;  // [e_i,[e_j,e_k]] vs [[e_i,e_j],e_k] - [[e_i,e_k],e_j]
};

struct LeibnizVerdict {
  bool ok = false;
  std::optional<LeibnizWitness> witness;
};

/// Checks [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples (enough by
/// trilinearity).  Returns the first failing triple if any.
LeibnizVerdict check_leibniz(const LeibnizAlgebra& g);

/// First basis pair (u, v) of rows of s with [u, v] outside s, if any.
std::optional<std::pair<SVec, SVec>> subalgebra_failure(const LeibnizAlgebra& g,
                                                        const Subspace& s);

/// First witness that s is not a two-sided ideal: (u in s, v basis) with
/// [u,v] or [v,u] outside s.
std::optional<std::pair<SVec, SVec>> two_sided_failure(const LeibnizAlgebra& g,
                                                       const Subspace& s);

/// Wraps a subspace as an IdealWitness, verifying two-sidedness.
IdealWitness make_ideal(const LeibnizAlgebra& g, const Subspace& s);

/// Smallest two-sided ideal containing seed (iterate s + [s,g] + [g,s]).
IdealWitness ideal_closure(const LeibnizAlgebra& g, const Subspace& seed);

/// Smallest subalgebra containing the given vectors.
Subspace subalgebra_closure(const LeibnizAlgebra& g, const std::vector<SVec>& seed);

/// The ideal spanned by all squares [x,x] (computed as the span of the
/// symmetrized basis brackets; equality with span{[v,v]} is asserted via
/// polarization, which needs characteristic != 2).
IdealWitness ann_ideal(const LeibnizAlgebra& g);

struct Quotient {
  LeibnizAlgebra alg;
  LinMap proj;            // dim(alg) x dim(g)
  std::vector<SVec> reps; // coset representatives in g, one per new basis vector
};

/// g / n for a two-sided ideal n; structure constants on the deterministic
/// coset representatives.  The projection is checked to be a homomorphism
/// and check_leibniz is re-run on the result.
Quotient quotient_algebra(const LeibnizAlgebra& g, const IdealWitness& n);

/// The largest Lie quotient g / <[x,x]>; antisymmetry of the result is
/// asserted on all basis pairs.
Quotient liezation(const LeibnizAlgebra& g);

struct Centers {
  IdealWitness center;       // [x,a] = 0 = [a,x] for all x
  IdealWitness right_center; // [x,a] = 0 for all x
  IdealWitness lie_center;   // [q,a] + [a,q] = 0 for all q
};

Centers centers(const LeibnizAlgebra& g);

/// Ordinary lower central series g = γ_1 ⊇ γ_2 = [g,g] ⊇ ..., γ_{i+1} = [γ_i, g],
/// up to stabilization.
std::vector<Subspace> ordinary_lower_series(const LeibnizAlgebra& g);

/// Ordinary nilpotency class, or nullopt when the series stabilizes nonzero.
std::optional<size_t> ordinary_class(const LeibnizAlgebra& g);

} // namespace leibal
