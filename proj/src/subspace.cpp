#include "leibal/subspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "leibal/errors.hpp"

namespace leibal {

namespace {

// One-pass elimination of the pivot-column entries of v.  Valid because RREF
// rows have zero entries at every other pivot column, so subtracting rows
// never reintroduces a pivot-column entry.
SVec reduce_against(const Field& f, const std::vector<SVec>& rows,
                    const std::vector<uint32_t>& pivots, SVec v) {
  std::vector<std::pair<size_t, mpq_class>> hits;
  size_t vi = 0, pi = 0;
  while (vi < v.t.size() && pi < pivots.size()) {
    if (v.t[vi].first < pivots[pi])
      ++vi;
    else if (pivots[pi] < v.t[vi].first)
      ++pi;
    else {
      hits.emplace_back(pi, v.t[vi].second);
      ++vi;
      ++pi;
    }
  }
  for (const auto& [row_idx, c] : hits)
    sv_axpy(f, v, f.neg(c), rows[row_idx]);
  return v;
}

} // namespace

SVec EchelonBuilder::reduce(SVec v) const {
  return reduce_against(f_, rows_, pivots_, std::move(v));
}

bool EchelonBuilder::absorb(SVec v) {
  if (!v.is_zero() && v.t.back().first >= ambient_)
    throw dim_mismatch("vector index " + std::to_string(v.t.back().first) +
                       " outside ambient dimension " + std::to_string(ambient_));
  v = reduce(v);
  if (v.is_zero())
    return false;
  SVec row = sv_scale(f_, f_.inv(v.lead_coeff()), v);
  uint32_t p = row.lead();
  for (SVec& r : rows_) {
    mpq_class c = r.at(p);
    if (!f_.is_zero(c))
      sv_axpy(f_, r, f_.neg(c), row);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  return true;
}

Subspace EchelonBuilder::take() {
  Subspace s(f_, ambient_);
  s.rows_ = std::move(rows_);
  s.pivots_ = std::move(pivots_);
  rows_.clear();
  pivots_.clear();
  return s;
}

Subspace Subspace::full(Field f, size_t ambient) {
  Subspace s(f, ambient);
  s.rows_.reserve(ambient);
  s.pivots_.reserve(ambient);
  for (uint32_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(SVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

SVec Subspace::reduce(SVec v) const {
  if (!v.is_zero() && v.t.back().first >= ambient_)
    throw dim_mismatch("vector does not fit ambient dimension " +
                       std::to_string(ambient_));
  return reduce_against(f_, rows_, pivots_, std::move(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (f_ != other.f_ || ambient_ != other.ambient_)
    throw dim_mismatch("subspace comparison across different ambients");
  for (const SVec& r : other.rows_)
    if (!contains(r))
      return false;
  return true;
}

Subspace Subspace::coordinate_complement() const {
  Subspace s(f_, ambient_);
  size_t pi = 0;
  for (uint32_t i = 0; i < ambient_; ++i) {
    if (pi < pivots_.size() && pivots_[pi] == i) {
      ++pi;
      continue;
    }
    s.rows_.push_back(SVec::unit(i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::string>
Subspace::row_strings(const std::vector<std::string>& labels) const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const SVec& r : rows_)
    out.push_back(sv_str(r, labels));
  return out;
}

Subspace span(Field f, size_t ambient, const std::vector<SVec>& vectors) {
  EchelonBuilder b(f, ambient);
  for (const SVec& v : vectors)
    b.absorb(v);
  return b.take();
}

Subspace span_dense(Field f, const std::vector<std::vector<mpq_class>>& vectors) {
  if (vectors.empty())
    return Subspace::zero(f, 0);
  size_t ambient = vectors.front().size();
  EchelonBuilder b(f, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      throw dim_mismatch("span over vectors of mixed ambient dimensions " +
                         std::to_string(ambient) + " and " +
                         std::to_string(v.size()));
    b.absorb(sv_from_dense(f, v));
  }
  return b.take();
}

SumIntersection sum_intersect(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field())
    throw dim_mismatch("sum/intersection across different fields");
  if (a.ambient() != b.ambient())
    throw dim_mismatch("sum/intersection across ambients " +
                       std::to_string(a.ambient()) + " and " +
                       std::to_string(b.ambient()));
  const size_t n = a.ambient();
  const Field& f = a.field();

  // Zassenhaus: reduce rows [x|x] for x in a and [y|0] for y in b; rows with
  // pivot in the left block carry the sum, pure right-block rows the
  // intersection.
  EchelonBuilder wide(f, 2 * n);
  for (const SVec& x : a.rows()) {
    SVec v = x;
    for (const auto& [j, c] : x.t)
      v.t.emplace_back(j + static_cast<uint32_t>(n), c);
    wide.absorb(std::move(v));
  }
  for (const SVec& y : b.rows())
    wide.absorb(y);

  Subspace sum(f, n), inter(f, n);
  EchelonBuilder sum_b(f, n), int_b(f, n);
  for (const SVec& row : wide.rows()) {
    if (row.lead() < n) {
      SVec left;
      for (const auto& [j, c] : row.t)
        if (j < n)
          left.t.emplace_back(j, c);
      sum_b.absorb(std::move(left));
    } else {
      SVec right;
      for (const auto& [j, c] : row.t)
        right.t.emplace_back(j - static_cast<uint32_t>(n), c);
      int_b.absorb(std::move(right));
    }
  }
  sum = sum_b.take();
  inter = int_b.take();

  if (sum.dim() + inter.dim() != a.dim() + b.dim())
    throw std::logic_error("modular law violated in sum_intersect");
  return {std::move(sum), std::move(inter)};
}

Subspace sum(const Subspace& a, const Subspace& b) {
  return sum_intersect(a, b).sum;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  return sum_intersect(a, b).intersection;
}

std::vector<SVec> quotient_basis(const Subspace& whole, const Subspace& sub) {
  if (!whole.contains(sub))
    throw containment_error("quotient_basis: sub is not contained in whole");
  std::vector<SVec> reps;
  size_t si = 0;
  const auto& sp = sub.pivots();
  for (size_t i = 0; i < whole.rows().size(); ++i) {
    uint32_t p = whole.pivots()[i];
    while (si < sp.size() && sp[si] < p)
      ++si;
    if (si < sp.size() && sp[si] == p)
      continue;
    reps.push_back(whole.rows()[i]);
  }
  return reps;
}

Subspace kernel_of_rows(Field f, size_t ambient, const std::vector<SVec>& rows) {
  EchelonBuilder b(f, ambient);
  for (const SVec& r : rows)
    b.absorb(r);
  // free columns parameterize the null space
  EchelonBuilder out(f, ambient);
  const auto& piv = b.pivots();
  size_t pi = 0;
  for (uint32_t j = 0; j < ambient; ++j) {
    if (pi < piv.size() && piv[pi] == j) {
      ++pi;
      continue;
    }
    SVec v = SVec::unit(j);
    for (size_t r = 0; r < b.rows().size(); ++r) {
      mpq_class c = b.rows()[r].at(j);
      if (!f.is_zero(c))
        sv_axpy(f, v, f.neg(c), SVec::unit(piv[r]));
    }
    out.absorb(std::move(v));
  }
  return out.take();
}

QuotientFrame::QuotientFrame(const Subspace& X, const Subspace& Y)
    : X_(X), Y_(Y), reps_(quotient_basis(X, Y)) {
  rep_pivots_.reserve(reps_.size());
  for (const SVec& r : reps_)
    rep_pivots_.push_back(r.lead());
}

SVec QuotientFrame::coords(const SVec& v) const {
  SVec r = Y_.reduce(v);
  SVec out;
  // entries of the reduced vector at representative pivots are the
  // coefficients in the representative basis
  size_t ri = 0;
  for (const auto& [j, c] : r.t) {
    while (ri < rep_pivots_.size() && rep_pivots_[ri] < j)
      ++ri;
    if (ri < rep_pivots_.size() && rep_pivots_[ri] == j)
      out.t.emplace_back(static_cast<uint32_t>(ri), c);
  }
  return out;
}

SVec QuotientFrame::lift(const SVec& coords) const {
  SVec v;
  const Field& f = X_.field();
  for (const auto& [j, c] : coords.t) {
    if (j >= reps_.size())
      throw dim_mismatch("quotient coordinates outside frame dimension");
    sv_axpy(f, v, c, reps_[j]);
  }
  return v;
}

} // namespace leibal
