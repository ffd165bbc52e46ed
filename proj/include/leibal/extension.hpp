#pragma once

#include "leibal/leibniz.hpp"

namespace leibal {

/// A surjective homomorphism total ->> quotient with its kernel ideal.
struct Extension {
  LeibnizAlgebra total;
  LeibnizAlgebra quotient;
  LinMap projection; // dim(quotient) x dim(total)
  IdealWitness kernel;
};

/// Validates that the projection is a surjective homomorphism and that its
/// null space is a two-sided ideal; rejects with a witness pair otherwise.
Extension make_extension(const LeibnizAlgebra& total,
                         const LeibnizAlgebra& quotient,
                         const LinMap& projection);

/// The canonical extension g ->> g/n.
Extension quotient_extension(const LeibnizAlgebra& g, const IdealWitness& n);

/// First (u in kernel basis, e_j) with [u,e_j] + [e_j,u] != 0, i.e. a witness
/// that the kernel is not inside the Lie-center.
std::optional<std::pair<SVec, SVec>> lie_central_failure(const Extension& ext);

} // namespace leibal
