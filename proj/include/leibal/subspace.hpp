#pragma once

#include <cstddef>
#include <vector>

#include "leibal/svec.hpp"

namespace leibal {

class Subspace;

/// Incremental reduced-row-echelon accumulator.  Rows are kept fully
/// reduced against each other at all times (pivot entries 1, zeros above and
/// below every pivot, pivots strictly increasing), so the finished object is
/// the canonical form every other module relies on for deterministic output.
class EchelonBuilder {
public:
  EchelonBuilder(Field f, size_t ambient) : f_(f), ambient_(ambient) {}

  /// Returns true when the vector enlarged the span.
  bool absorb(SVec v);

  /// v minus its projection onto the current row space (eliminates the
  /// entries sitting at pivot columns; other coordinates are untouched).
  SVec reduce(SVec v) const;

  bool contains(const SVec& v) const { return reduce(v).is_zero(); }
  size_t rank() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

  Subspace take();

private:
  Field f_;
  size_t ambient_;
  std::vector<SVec> rows_;       // RREF, ordered by pivot
  std::vector<uint32_t> pivots_; // strictly increasing
};

/// A subspace of a fixed coordinate space, stored in reduced row-echelon
/// form.  Equality of subspaces is literal equality of the echelon rows.
class Subspace {
public:
  Subspace(Field f, size_t ambient) : f_(f), ambient_(ambient) {}

  static Subspace zero(Field f, size_t ambient) { return Subspace(f, ambient); }
  static Subspace full(Field f, size_t ambient);

  size_t dim() const { return rows_.size(); }
  size_t ambient() const { return ambient_; }
  const Field& field() const { return f_; }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  SVec reduce(SVec v) const;
  bool contains(const SVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return f_ == o.f_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Lexicographically smallest complement: the span of the coordinate
  /// vectors at non-pivot columns.
  Subspace coordinate_complement() const;

  std::vector<std::string> row_strings(const std::vector<std::string>& labels) const;

private:
  friend class EchelonBuilder;
  Field f_;
  size_t ambient_ = 0;
  std::vector<SVec> rows_;
  std::vector<uint32_t> pivots_;
};

/// Canonical span.  Sparse inputs are validated against the given ambient.
Subspace span(Field f, size_t ambient, const std::vector<SVec>& vectors);

/// Dense-input span; the ambient is read off the vectors, which must agree.
Subspace span_dense(Field f, const std::vector<std::vector<mpq_class>>& vectors);

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};

/// Sum and intersection in one elimination (Zassenhaus).  The modular-law
/// dimension identity is asserted internally.
SumIntersection sum_intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Coset representatives for whole/sub: the echelon rows of `whole` whose
/// pivot is not a pivot of `sub`, in ascending pivot order.  Requires
/// sub ⊆ whole.
std::vector<SVec> quotient_basis(const Subspace& whole, const Subspace& sub);

/// Null space of the matrix whose rows are the given functionals.
Subspace kernel_of_rows(Field f, size_t ambient, const std::vector<SVec>& rows);

/// Coordinates on a quotient X/Y (Y ⊆ X).  Representatives come from
/// quotient_basis, so the coordinate system is deterministic.
class QuotientFrame {
public:
  QuotientFrame(const Subspace& X, const Subspace& Y);

  size_t dim() const { return reps_.size(); }
  const std::vector<SVec>& reps() const { return reps_; }
  const Subspace& sub() const { return Y_; }
  const Subspace& whole() const { return X_; }

  /// Coordinates of v + Y in the representative basis; v must lie in X.
  SVec coords(const SVec& v) const;

  /// A representative of the class with the given coordinates.
  SVec lift(const SVec& coords) const;

private:
  Subspace X_, Y_;
  std::vector<SVec> reps_;
  std::vector<uint32_t> rep_pivots_;
};

} // namespace leibal
