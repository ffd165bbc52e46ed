#pragma once

#include <array>

#include "leibal/extension.hpp"
#include "leibal/free_leibniz.hpp"

namespace leibal {

struct MultiplierOptions {
  std::optional<size_t> level; // default 2*class + 1
  bool stabilize = false;      // recompute at level+1 and require equal dim
  bool verify_baer = false;    // recompute on the full basis as generators
};

struct MultiplierResult {
  size_t dim = 0;
  std::vector<SVec> representatives; // free-algebra vectors, independent mod [F,r]
  std::vector<std::string> representative_labels;
  size_t level_used = 0;
  bool stabilized = false; // true only when the level+1 recomputation ran and agreed
};

/// The Baer invariant (r ∩ [F,F]_sym)/[F,r]_sym of a free presentation of g,
/// computed in the truncated free algebra at level 2c+1 (c = ordinary
/// nilpotency class).  Truncation is sound at that level: a homogeneous
/// symmetrized bracket of degree >= 2c+2 has a factor of degree >= c+1,
/// which lies in r, so everything discarded already sits in [F,r]_sym.
MultiplierResult schur_lie_multiplier(const LeibnizAlgebra& g,
                                      const MultiplierOptions& opts = {});

struct FourTermReport {
  std::array<size_t, 4> dims{}; // t1, t2 = M(g), t3 = M(g/n), t4
  LinMap pi, sigma, tau;
  bool exact = false;
  bool dims_identity = false; // t1 + t3 == t2 + t4
  size_t t4_direct = 0;       // dim (n ∩ [g,g]_sym) - dim [g,n]_sym, inside g
  size_t level = 0;

  bool consistent() const {
    return exact && dims_identity && dims[3] == t4_direct &&
           dims[0] + dims[2] == dims[1] + t4_direct;
  }
};

/// The exact sequence
///   0 -> (r ∩ [F,S])/([F,r] ∩ [F,S]) -> M(g) -> M(g/n) -> (n ∩ [g,g])/[g,n] -> 0
/// (all brackets symmetrized, S the evaluation preimage of n), with the three
/// maps realized as matrices over the deterministic quotient coordinates and
/// exactness verified by rank conditions.  The last term is cross-computed
/// inside g; a mismatch escalates the truncation level once and then fails.
FourTermReport four_term_sequence(const LeibnizAlgebra& g, const IdealWitness& n);

/// Same, on an existing presentation (no cross-level escalation).
FourTermReport four_term_at(const Presentation& p, const IdealWitness& n);

struct LadderReport {
  size_t dim_m = 0;          // dim M(g)
  size_t dim_q = 0;          // dim (S ∩ [F,F])/[F,r]
  size_t dim_quotient = 0;   // dim_q - dim_m
  size_t commutator_cap = 0; // dim ([g,g]_sym ∩ b)
  size_t m_of_quotient = 0;  // dim M(g/b), independent presentation
  bool quotient_identity_ok = false; // dim_quotient == commutator_cap
  bool epimorphic_bound_ok = false;  // m_of_quotient <= dim_q
  bool inequality_ok = false;        // m_of_quotient <= dim_m + commutator_cap
  std::optional<bool> central_bound_ok; // only when b ⊆ Z_lie(g)
  size_t central_lhs = 0, central_rhs = 0;
};

/// Dimension ladder for an ideal b: the auxiliary algebra Q with ideal
/// M ≅ M(g), Q/M ≅ [g,g]_sym ∩ b, the bound dim M(g/b) <= dim Q, and the
/// central tensor bound when b is Lie-central.
LadderReport baer_ladder(const LeibnizAlgebra& g, const IdealWitness& b);

/// Image inside the kernel of the connecting map M(quotient) -> kernel of a
/// Lie-central extension; equals kernel ∩ total^ann, which is asserted.
/// The connecting map is a well-defined homomorphism only on Lie-central
/// extensions, so others are rejected with a witness pair; passing
/// require_central = false still computes the image subspace (the set
/// identity with kernel ∩ total^ann holds regardless).
Subspace theta_image(const Extension& ext, bool require_central = true);

struct ClassCheckReport {
  bool class_at_most_k = false;
  size_t ker_tau_dim = 0;
  Subspace theta_on_ker_tau; // subspace of the kernel
  std::optional<size_t> direct_class; // lower-series class of the total algebra
};

/// Nilpotency-class criterion: the extension's total algebra has Lie-class
/// <= k iff the connecting map vanishes on ker(M(q) -> M(q/q^[k])).
/// Cross-checked against the directly computed lower series.
ClassCheckReport extension_class_check(const Extension& ext, size_t k);

struct PerfectQuotientReport {
  bool applicable = false; // all hypotheses hold
  bool g_lie_nilpotent = false;
  bool kernel_in_commutator = false;
  size_t multiplier_of_quotient = 0;
  bool is_isomorphism = false;
};

/// If g is Lie-nilpotent, ker f ⊆ [g,g]_sym and M(quotient) = 0, then f must
/// be an isomorphism; reports all computed facts, "inapplicable" otherwise.
PerfectQuotientReport perfect_quotient_iso_check(const Extension& ext);

} // namespace leibal
