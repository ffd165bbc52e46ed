#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leibal/field.hpp"

namespace leibal {

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
/// The ambient dimension lives in the containers (Subspace, LinMap, algebra);
/// free functions that need it take it as an argument.
struct SVec {
  std::vector<std::pair<uint32_t, mpq_class>> t;

  bool is_zero() const { return t.empty(); }
  uint32_t lead() const { return t.front().first; } // requires !is_zero()
  const mpq_class& lead_coeff() const { return t.front().second; }

  mpq_class at(uint32_t i) const;

  static SVec unit(uint32_t i) {
    SVec v;
    v.t.emplace_back(i, mpq_class(1));
    return v;
  }

  std::vector<mpq_class> dense(size_t ambient) const;

  bool operator==(const SVec& o) const { return t == o.t; }
};

/// y += c * x
void sv_axpy(const Field& f, SVec& y, const mpq_class& c, const SVec& x);

SVec sv_add(const Field& f, const SVec& a, const SVec& b);
SVec sv_sub(const Field& f, const SVec& a, const SVec& b);
SVec sv_scale(const Field& f, const mpq_class& c, const SVec& a);
SVec sv_neg(const Field& f, const SVec& a);
mpq_class sv_dot(const Field& f, const SVec& a, const SVec& b);

SVec sv_from_dense(const Field& f, const std::vector<mpq_class>& coords);

/// "a1 + 2*a3 - 1/2*a4" over the given coordinate labels; "0" when zero.
std::string sv_str(const SVec& v, const std::vector<std::string>& labels);

} // namespace leibal
