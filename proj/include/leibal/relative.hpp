#pragma once

#include <cstdint>
#include <optional>

#include "leibal/leibniz.hpp"

namespace leibal {

/// One central series (lower: descending, upper: ascending), iterated to
/// stabilization.  class_value is empty when the series stabilizes without
/// witnessing nilpotency within the dimension bound.
struct SeriesReport {
  std::vector<Subspace> terms;
  size_t stabilized_at = 0;
  bool lie_nilpotent = false;
  std::optional<size_t> class_value;
};

struct CentralSeries {
  SeriesReport lower;
  SeriesReport upper;
  bool classes_agree = false;
  std::optional<size_t> class_value; // set when both series agree
};

/// Span of the symmetrized brackets [u,v] + [v,u] over basis vectors of m
/// and n.  Defined for arbitrary subspaces (bilinearity makes the span
/// basis-independent); when both arguments are two-sided ideals the result
/// is one as well and the returned flag says so.
IdealWitness lie_commutator(const LeibnizAlgebra& g, const Subspace& m,
                            const Subspace& n);

/// {q : [q,u] + [u,q] ∈ n for all u ∈ m}; m and n must be two-sided ideals.
IdealWitness lie_centralizer(const LeibnizAlgebra& g, const IdealWitness& m,
                             const IdealWitness& n);

/// {q : [q,u] + [u,q] ∈ m for all u ∈ m} for an arbitrary subspace m.
/// Always a subspace, not necessarily a subalgebra.
Subspace lie_normalizer(const LeibnizAlgebra& g, const Subspace& m);

CentralSeries lie_central_series(const LeibnizAlgebra& g);

/// n^[1] = n, n^[i] = [n^[i-1], g]_sym, up to stabilization or `bound` terms.
std::vector<Subspace> relative_lower_series(const LeibnizAlgebra& g,
                                            const IdealWitness& n, size_t bound);

struct NormalizerProbe {
  bool pass = true;
  size_t tested = 0;
  uint64_t seed = 0;
  std::optional<Subspace> counterexample;
};

/// Draws `trials` random proper subalgebras (seeded) and checks each is
/// strictly contained in its normalizer.  A counterexample on a
/// Lie-nilpotent algebra would contradict the normalizer condition.
NormalizerProbe normalizer_condition_probe(const LeibnizAlgebra& g,
                                           size_t trials, uint64_t seed);

} // namespace leibal
