#pragma once

#include "leibal/multiplier.hpp"

namespace leibal {

struct ExtensionFlags {
  bool lie_central = false;
  bool stem = false;  // Lie-central with kernel inside total^ann
  bool cover = false; // stem with dim kernel = dim M(quotient)
};

ExtensionFlags classify_extension(const Extension& ext);

struct CoverResult {
  bool complement_found = false;
  std::optional<Extension> ext; // total = the cover, quotient = g
  size_t multiplier_dim = 0;
  uint64_t seed = 0;
  size_t level = 0;
};

/// Builds a stem cover of g from its free presentation: inside
/// V = r/[F,r] the multiplier part M is complemented by the graph of a
/// correction map phi over a seeded initial complement W, where phi solves
/// the bracket-invariance conditions proj_M([f,w]) = phi(proj_W([f,w])).
/// Elements of [F,F]_sym annihilate on the right, so the constraint is
/// linear in phi; an inconsistent system is reported, never papered over.
/// Seed 0 uses the plain coordinate complement, other seeds shear it by M.
CoverResult stem_cover(const LeibnizAlgebra& g, uint64_t seed = 0);

struct IsoclinicProbe {
  bool pass = false;
  size_t covers_built = 0;
  std::vector<size_t> cover_dims;
  std::vector<size_t> commutator_dims;      // dim [p,p]_sym per cover
  std::vector<size_t> center_quotient_dims; // dim Z_lie(p)/kernel per cover
  uint64_t seed = 0;
};

/// Builds covers from `trials` complement seeds and checks the isoclinism
/// invariants that are decidable without an isomorphism search.
IsoclinicProbe covers_isoclinic_check(const LeibnizAlgebra& g, size_t trials,
                                      uint64_t seed);

struct IsoclinismWitness {
  LinMap eta; // quotient1 -> quotient2
  LinMap xi;  // [g1,g1]_sym -> [g2,g2]_sym, in the canonical echelon bases
};

struct IsoclinismReport {
  bool verified = false;
  std::string failure; // empty when verified
};

/// Checks that (eta, xi) is an isoclinism of two Lie-central extensions:
/// both maps invertible and xi(C1(u,v)) = C2(eta u, eta v) on all basis
/// pairs, where C_i is the symmetrized commutator map of the extension.
/// Well-definedness of C_i is asserted by recomputing with shifted lifts.
IsoclinismReport verify_isoclinism(const Extension& e1, const Extension& e2,
                                   const IsoclinismWitness& w);

/// psi(Z_lie(cover)) for a constructed stem cover; independent of the
/// complement seed, which is asserted by recomputing with a second seed.
Subspace precise_lie_center(const LeibnizAlgebra& g);

struct CapabilityReport {
  bool capable = false;
  Subspace z_star;
  bool sigma_criterion_ok = true; // per-basis-vector monomorphism cross-check
  std::vector<size_t> sigma_kernel_dims; // one per basis vector of Z_lie(g)
};

/// g is Lie-capable iff the precise Lie-center vanishes; cross-checked via
/// the kernel of M(g) -> M(g/<x>) on a basis of the Lie-center.
CapabilityReport is_lie_capable(const LeibnizAlgebra& g);

struct EquivalenceReport {
  bool a_holds = false; // dim(n ∩ [g,g]_sym) = dim M(g/n) - dim M(g)
  bool b_holds = false; // n inside the precise Lie-center
  bool c_holds = false; // M(g) -> M(g/n) injective
  bool equivalent = false;
  size_t cap_dim = 0, m_g = 0, m_gn = 0, ker_sigma = 0;
};

/// The three equivalent characterizations for a Lie-central ideal n.
EquivalenceReport capability_equivalences(const LeibnizAlgebra& g,
                                          const IdealWitness& n);

struct HopfianReport {
  bool hypotheses_ok = false;
  std::string failure; // why hypotheses failed, when they did
  bool injective = false;
};

/// For two stem covers of the same algebra and a supplied epimorphism
/// eta : P1 -> P2 with eta(M1) ⊆ M2, verifies eta is injective.
HopfianReport hopfian_check(const Extension& e1, const Extension& e2,
                            const LinMap& eta);

} // namespace leibal
