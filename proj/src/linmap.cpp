#include "leibal/linmap.hpp"

#include <algorithm>

#include "leibal/errors.hpp"

namespace leibal {

LinMap LinMap::identity(Field f, size_t n) {
  LinMap m(f, n, n);
  for (uint32_t i = 0; i < n; ++i)
    m.rows_[i] = SVec::unit(i);
  return m;
}

LinMap LinMap::from_rows(Field f, size_t cols, std::vector<SVec> rows) {
  LinMap m(f, rows.size(), cols);
  for (const SVec& r : rows)
    if (!r.is_zero() && r.t.back().first >= cols)
      throw dim_mismatch("matrix row wider than declared column count");
  m.rows_ = std::move(rows);
  return m;
}

LinMap LinMap::from_columns(Field f, size_t rows, const std::vector<SVec>& cols) {
  LinMap m(f, rows, cols.size());
  for (uint32_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j].t) {
      if (i >= rows)
        throw dim_mismatch("matrix column taller than declared row count");
      m.rows_[i].t.emplace_back(j, c);
    }
  // columns were visited in order, so each row's indices are increasing
  return m;
}

SVec LinMap::apply(const SVec& x) const {
  if (!x.is_zero() && x.t.back().first >= cols_)
    throw dim_mismatch("vector outside map domain");
  SVec y;
  for (uint32_t i = 0; i < rows_.size(); ++i) {
    mpq_class c = sv_dot(f_, rows_[i], x);
    if (!f_.is_zero(c))
      y.t.emplace_back(i, c);
  }
  return y;
}

LinMap LinMap::compose(const LinMap& inner) const {
  if (cols_ != inner.rows() || f_ != inner.f_)
    throw dim_mismatch("composition shape mismatch");
  LinMap out(f_, rows_.size(), inner.cols());
  for (size_t i = 0; i < rows_.size(); ++i) {
    SVec acc;
    for (const auto& [k, c] : rows_[i].t)
      sv_axpy(f_, acc, c, inner.rows_[k]);
    out.rows_[i] = std::move(acc);
  }
  return out;
}

std::vector<SVec> LinMap::columns() const {
  std::vector<SVec> cols(cols_);
  for (uint32_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, c] : rows_[i].t)
      cols[j].t.emplace_back(i, c);
  return cols;
}

SVec LinMap::column(size_t j) const {
  SVec col;
  for (uint32_t i = 0; i < rows_.size(); ++i) {
    mpq_class c = rows_[i].at(static_cast<uint32_t>(j));
    if (!f_.is_zero(c))
      col.t.emplace_back(i, c);
  }
  return col;
}

Subspace LinMap::image() const {
  EchelonBuilder b(f_, rows_.size());
  for (const SVec& col : columns())
    b.absorb(col);
  return b.take();
}

Subspace LinMap::kernel() const {
  return kernel_of_rows(f_, cols_, rows_);
}

LinMap LinMap::scaled(const mpq_class& c) const {
  LinMap out(f_, rows_.size(), cols_);
  for (size_t i = 0; i < rows_.size(); ++i)
    out.rows_[i] = sv_scale(f_, c, rows_[i]);
  return out;
}

LinMap quotient_map(const Subspace& T) {
  const Field& f = T.field();
  const size_t n = T.ambient();
  std::vector<SVec> rows;
  rows.reserve(n - T.dim());
  size_t pi = 0;
  for (uint32_t c = 0; c < n; ++c) {
    if (pi < T.pivots().size() && T.pivots()[pi] == c) {
      ++pi;
      continue;
    }
    // (v reduced by T)[c] = v[c] - sum_k v[pivot_k] * row_k[c]
    SVec r = SVec::unit(c);
    for (size_t k = 0; k < T.rows().size(); ++k) {
      mpq_class e = T.rows()[k].at(c);
      if (!f.is_zero(e))
        sv_axpy(f, r, f.neg(e), SVec::unit(T.pivots()[k]));
    }
    rows.push_back(std::move(r));
  }
  return LinMap::from_rows(f, n, std::move(rows));
}

Subspace solve_membership(const std::vector<LinMap>& maps, const Subspace& target) {
  if (maps.empty())
    throw error("solve_membership needs the domain dimension; pass at least one map");
  const Field& f = maps.front().field();
  const size_t domain = maps.front().cols();
  LinMap proj = quotient_map(target);
  std::vector<SVec> stacked;
  for (const LinMap& m : maps) {
    if (m.field() != f || m.cols() != domain)
      throw dim_mismatch("membership conditions over mismatched domains");
    if (m.rows() != target.ambient())
      throw dim_mismatch("membership target outside the maps' codomain");
    LinMap comp = proj.compose(m);
    for (size_t i = 0; i < comp.rows(); ++i)
      stacked.push_back(comp.row(i));
  }
  return kernel_of_rows(f, domain, stacked);
}

LinMap inverse(const LinMap& A) {
  if (A.rows() != A.cols())
    throw dim_mismatch("inverse of a non-square map");
  const Field& f = A.field();
  const uint32_t n = static_cast<uint32_t>(A.cols());
  EchelonBuilder aug(f, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    SVec r = A.row(i);
    r.t.emplace_back(n + i, mpq_class(1));
    aug.absorb(std::move(r));
  }
  // invertible iff the left block reduces to the identity
  std::vector<SVec> inv_rows(n);
  for (size_t k = 0; k < aug.rows().size(); ++k) {
    if (aug.pivots()[k] >= n)
      throw error("matrix is singular");
    SVec right;
    for (const auto& [j, c] : aug.rows()[k].t)
      if (j >= n)
        right.t.emplace_back(j - n, c);
    inv_rows[aug.pivots()[k]] = std::move(right);
  }
  if (aug.rank() != n)
    throw error("matrix is singular");
  return LinMap::from_rows(f, n, std::move(inv_rows));
}

std::optional<SVec> solve_particular(const LinMap& A, const SVec& b) {
  const Field& f = A.field();
  const uint32_t n = static_cast<uint32_t>(A.cols());
  EchelonBuilder aug(f, n + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    SVec r = A.row(i);
    mpq_class bi = b.at(static_cast<uint32_t>(i));
    if (!f.is_zero(bi))
      r.t.emplace_back(n, bi);
    aug.absorb(std::move(r));
  }
  SVec x;
  for (size_t k = 0; k < aug.rows().size(); ++k) {
    if (aug.pivots()[k] == n)
      return std::nullopt; // inconsistent system
    mpq_class beta = aug.rows()[k].at(n);
    if (!f.is_zero(beta))
      x.t.emplace_back(aug.pivots()[k], beta);
  }
  return x;
}

} // namespace leibal
