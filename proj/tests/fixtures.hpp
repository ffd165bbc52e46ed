#pragma once

#include "leibal/leibniz.hpp"

namespace fixtures {

using namespace leibal;

inline Field Q() { return Field::rationals(); }

inline SVec vec(const std::vector<long>& dense) {
  std::vector<mpq_class> coords;
  for (long c : dense)
    coords.emplace_back(c);
  return sv_from_dense(Field::rationals(), coords);
}

/// [a2,a2] = a1
inline LeibnizAlgebra a2() {
  return LeibnizAlgebra(Q(), 2, {"a1", "a2"}, {{1, 1, 0, 1}});
}

inline LeibnizAlgebra abelian(size_t n) {
  return LeibnizAlgebra(Q(), n, {}, {});
}

/// One-generator algebra of class k: [b1,b1] = b2, [b_i,b1] = b_{i+1}.
inline LeibnizAlgebra cyclic(size_t k) {
  std::vector<BracketEntry> entries;
  for (uint32_t i = 0; i + 1 < k; ++i)
    entries.push_back({i, 0, i + 1, 1});
  std::vector<std::string> labels;
  for (size_t i = 0; i < k; ++i)
    labels.push_back("b" + std::to_string(i + 1));
  return LeibnizAlgebra(Q(), k, labels, entries);
}

/// Classification row [a1,a3] = a2, [a3,a3] = a1 (class 3).
inline LeibnizAlgebra cyclic3_table() {
  return LeibnizAlgebra(Q(), 3, {"a1", "a2", "a3"}, {{0, 2, 1, 1}, {2, 2, 0, 1}});
}

/// Not a Leibniz algebra: [a1,a1] = a2, [a2,a2] = a1.
inline LeibnizAlgebra not_leibniz() {
  return LeibnizAlgebra(Q(), 2, {"a1", "a2"}, {{0, 0, 1, 1}, {1, 1, 0, 1}});
}

} // namespace fixtures
