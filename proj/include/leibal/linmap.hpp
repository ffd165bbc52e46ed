#pragma once

#include <optional>
#include <vector>

#include "leibal/subspace.hpp"

namespace leibal {

/// Dense-shape, sparse-storage linear map K^cols -> K^rows (row-major).
class LinMap {
public:
  LinMap(Field f, size_t rows, size_t cols)
      : f_(f), cols_(cols), rows_(rows) {}

  static LinMap identity(Field f, size_t n);
  static LinMap from_rows(Field f, size_t cols, std::vector<SVec> rows);
  /// Build from images of the domain's coordinate basis.
  static LinMap from_columns(Field f, size_t rows, const std::vector<SVec>& cols);

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const Field& field() const { return f_; }
  const SVec& row(size_t i) const { return rows_[i]; }
  SVec& row(size_t i) { return rows_[i]; }

  SVec apply(const SVec& x) const;
  LinMap compose(const LinMap& inner) const; // (*this) ∘ inner

  std::vector<SVec> columns() const;
  SVec column(size_t j) const;

  Subspace image() const;
  Subspace kernel() const;
  size_t rank() const { return image().dim(); }

  LinMap scaled(const mpq_class& c) const;

  bool operator==(const LinMap& o) const {
    return f_ == o.f_ && cols_ == o.cols_ && rows_ == o.rows_;
  }

private:
  Field f_;
  size_t cols_;
  std::vector<SVec> rows_;
};

/// The canonical projection K^n -> K^{n-dim T} annihilating exactly T,
/// reading off the non-pivot coordinates after elimination by T's rows.
LinMap quotient_map(const Subspace& T);

/// {v : map_i(v) ∈ target for all i}.  All maps must share the domain; the
/// target lives in the shared codomain.  No conditions means the full domain.
Subspace solve_membership(const std::vector<LinMap>& maps, const Subspace& target);

/// One solution of A x = b (free variables set to zero), or nullopt.
std::optional<SVec> solve_particular(const LinMap& A, const SVec& b);

/// Inverse of a square map; throws when singular.
LinMap inverse(const LinMap& A);

} // namespace leibal
